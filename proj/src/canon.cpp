#include "canonlab/canon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "canonlab/parallel.hpp"
#include "canonlab/polys.hpp"

namespace canonlab {

namespace {

std::string word_string(std::span<const Label> w) {
    std::string s;
    const bool wide = std::any_of(w.begin(), w.end(), [](Label v) { return v > 9; });
    for (Label v : w) {
        if (wide && !s.empty()) s += ',';
        s += std::to_string(v);
    }
    return s;
}

void require_canon_size(std::size_t base_size, std::size_t n, const CanonOptions& options) {
    if (!options.force)
        require_within_cap("canon sum |P|*n", base_size * n, options.limits.max_canon_size);
}

CanonOptions sequential(const CanonOptions& options) {
    CanonOptions inner = options;
    inner.jobs = 1;
    return inner;
}

// Sum over sigma in S_n of h*(poset, w x sigma); poset must have the
// product layout over a base of w.size() elements.
IntPolynomial sum_over_permutations(const Poset& poset, const Labeling& w, std::size_t n,
                                    const CanonOptions& options) {
    const auto sigmas = permutations(n);
    auto terms = parallel_map<IntPolynomial>(sigmas.size(), options.jobs, [&](std::size_t i) {
        return hstar(poset, canon_labeling(w, sigmas[i]), options.limits);
    });
    IntPolynomial total;
    for (const auto& t : terms) total += t;
    return total;
}

std::size_t chain_descents(const Labeling& w) { return descent_count(w.values()); }

mpz_class catalan(std::size_t n) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
    return c / static_cast<unsigned long>(n + 1);
}

}  // namespace

IdentityReport compare_polynomials(std::string name, IntPolynomial lhs, IntPolynomial rhs,
                                   std::string detail) {
    IdentityReport report{std::move(name), std::move(lhs), std::move(rhs), false, std::nullopt,
                          std::move(detail)};
    report.holds = report.lhs == report.rhs;
    if (!report.holds) {
        const auto top = static_cast<std::size_t>(
            std::max(report.lhs.degree(), report.rhs.degree()));
        for (std::size_t i = 0; i <= top; ++i) {
            if (report.lhs.coefficient(i) != report.rhs.coefficient(i)) {
                report.witness = "coefficient of x^" + std::to_string(i) + ": lhs " +
                                 report.lhs.coefficient(i).get_str() + ", rhs " +
                                 report.rhs.coefficient(i).get_str();
                break;
            }
        }
    }
    return report;
}

std::vector<Labeling> permutations(std::size_t n) {
    std::vector<Label> perm(n);
    std::iota(perm.begin(), perm.end(), Label{1});
    std::vector<Labeling> result;
    do {
        result.emplace_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

std::size_t constant_descents(const Poset& poset, const Labeling& w) {
    auto profile = chain_descent_profile(poset, w);
    if (!profile.constant_k)
        throw NotConstantDescent("maximal chains of the labeled poset have different descent counts");
    return *profile.constant_k;
}

IntPolynomial canon_polynomial_bruteforce(const Poset& poset, const Labeling& w, std::size_t n,
                                          const CanonOptions& options) {
    require_canon_size(poset.size(), n, options);
    return sum_over_permutations(product_with_chain(poset, n), w, n, options);
}

IntPolynomial canon_polynomial_product(const Poset& poset, const Labeling& w, std::size_t n,
                                       const CanonOptions& options) {
    const std::size_t k = constant_descents(poset, w);
    const Poset product = product_with_chain(poset, n);
    return (eulerian(n) * hstar(product, natural_labeling(product), options.limits)).shifted(k);
}

IdentityReport checked_product_identity(const Poset& poset, const Labeling& w, std::size_t n,
                                        const CanonOptions& options) {
    constant_descents(poset, w);
    auto lhs = canon_polynomial_bruteforce(poset, w, n, options);
    auto rhs = hstar(checked_product(poset, n), checked_labeling(w, n), options.limits);
    return compare_polynomials("checked-product", std::move(lhs), std::move(rhs),
                               "canon polynomial vs h* of the checked product");
}

IdentityReport generalized_product_identity(const Poset& poset, const Labeling& w,
                                            const Poset& shape, const CanonOptions& options) {
    const std::size_t k = constant_descents(poset, w);
    const std::size_t n = shape.size();
    require_canon_size(poset.size(), n, options);
    const Poset product = product_with_chain(poset, n);
    const Labeling shape_labels = natural_labeling(shape);

    std::vector<Labeling> sigmas;
    for (const auto& ext : linear_extensions(shape, options.limits))
        sigmas.emplace_back(word(ext.order, shape_labels));
    auto terms = parallel_map<IntPolynomial>(sigmas.size(), options.jobs, [&](std::size_t i) {
        return hstar(product, canon_labeling(w, sigmas[i]), options.limits);
    });
    IntPolynomial lhs;
    for (const auto& t : terms) lhs += t;
    auto rhs = (hstar(shape, shape_labels, options.limits) *
                hstar(product, natural_labeling(product), options.limits))
                   .shifted(k);
    return compare_polynomials("generalized-product", std::move(lhs), std::move(rhs),
                               "sum over extensions of the shape poset");
}

Poset AmphibianSpec::poset() const {
    return remove_intercopy_covers(product_with_chain(chain(m), n), m, removed);
}

RemovalMode removal_mode(const AmphibianSpec& spec) {
    std::vector<bool> touched(spec.m + 1, false);
    for (const auto& e : spec.removed)
        if (e.p >= 1 && e.p <= spec.m) touched[e.p] = true;
    for (std::size_t p = 1; p <= spec.m; ++p)
        if (!touched[p]) return RemovalMode::FixedRow;
    return RemovalMode::Arbitrary;
}

const char* to_string(RemovalMode mode) {
    return mode == RemovalMode::FixedRow ? "fixed-row" : "arbitrary";
}

std::size_t removable_edge_count(std::size_t m, std::size_t n) { return n == 0 ? 0 : m * (n - 1); }

std::vector<CopyEdge> edges_from_mask(std::size_t m, std::size_t n, std::uint64_t mask) {
    std::vector<CopyEdge> edges;
    for (std::size_t p = 1; p <= m; ++p)
        for (std::size_t j = 1; j < n; ++j)
            if (mask >> ((p - 1) * (n - 1) + (j - 1)) & 1) edges.push_back({p, j});
    return edges;
}

std::uint64_t mask_from_edges(std::size_t m, std::size_t n, std::span<const CopyEdge> edges) {
    std::uint64_t mask = 0;
    for (const auto& e : edges) {
        if (e.p < 1 || e.p > m || e.j < 1 || e.j >= n)
            throw std::invalid_argument("edge outside [m] x [n]");
        mask |= std::uint64_t{1} << ((e.p - 1) * (n - 1) + (e.j - 1));
    }
    return mask;
}

IntPolynomial dissonant_polynomial(const Poset& base, const Labeling& w, std::size_t n,
                                   std::span<const CopyEdge> removed,
                                   const CanonOptions& options) {
    require_canon_size(base.size(), n, options);
    const Poset q = remove_intercopy_covers(product_with_chain(base, n), base.size(), removed);
    return sum_over_permutations(q, w, n, options);
}

IntPolynomial dissonant_polynomial(const AmphibianSpec& spec, const Labeling& w,
                                   const CanonOptions& options) {
    return dissonant_polynomial(chain(spec.m), w, spec.n, spec.removed, options);
}

IdentityReport dissonant_degree_check(const AmphibianSpec& spec, const Labeling& w,
                                      const CanonOptions& options) {
    const std::size_t m = spec.m;
    const std::size_t n = spec.n;
    const std::size_t k = chain_descents(w);
    const Poset q = spec.poset();
    const IntPolynomial c = dissonant_polynomial(spec, w, options);
    const std::size_t expected = m * (n - 1) + k;
    std::ostringstream detail;
    detail << "degree " << c.degree() << ", expected m(n-1)+k = " << expected << "; mode "
           << to_string(removal_mode(spec));

    // Copy-by-copy blocks under w x rev(id).
    const Labeling rev = Labeling::reversed(n);
    const Labeling rev_labels = canon_labeling(w, rev);
    std::vector<Element> blocks;
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t j = 0; j < n; ++j) blocks.push_back(static_cast<Element>(p + j * m));
    if (is_linear_extension(q, blocks)) {
        const Word bw = word(blocks, rev_labels);
        detail << "; block extension " << word_string(bw) << " has " << descent_count(bw)
               << " descents";
    }

    // A linear extension attaining the top degree.
    if (!c.is_zero()) {
        const auto target = static_cast<std::size_t>(c.degree());
        for (const auto& sigma : permutations(n)) {
            const Labeling labels = canon_labeling(w, sigma);
            std::optional<Word> found;
            for_each_linear_extension(
                q,
                [&](std::span<const Element> order) {
                    Word wd = word(order, labels);
                    if (descent_count(wd) != target) return true;
                    found = std::move(wd);
                    return false;
                },
                {}, options.limits);
            if (found) {
                detail << "; top-degree witness sigma=" << word_string(sigma.values())
                       << " word=" << word_string(*found);
                break;
            }
        }
    }
    return compare_polynomials(
        "dissonant-degree",
        c.is_zero() ? IntPolynomial{} : IntPolynomial::monomial(static_cast<std::size_t>(c.degree())),
        IntPolynomial::monomial(expected), detail.str());
}

IdentityReport dissonant_palindromy_check(const AmphibianSpec& spec, const Labeling& w,
                                          const CanonOptions& options) {
    const std::size_t k = chain_descents(w);
    const std::size_t window = spec.m * (spec.n - 1) + 2 * k;
    IntPolynomial c = dissonant_polynomial(spec, w, options);
    std::string detail = "window 0.." + std::to_string(window) + "; mode " +
                         to_string(removal_mode(spec));
    if (c.degree() > static_cast<long>(window)) {
        IdentityReport r = compare_polynomials("dissonant-palindromy", c, IntPolynomial{}, detail);
        r.holds = false;
        r.witness = "degree " + std::to_string(c.degree()) + " exceeds the window";
        return r;
    }
    IntPolynomial reflected = reflect(c, window);
    return compare_polynomials("dissonant-palindromy", std::move(c), std::move(reflected),
                               std::move(detail));
}

IdentityReport dissonant_shift_identity(const AmphibianSpec& spec, const Labeling& w,
                                        const Labeling& sigma, const CanonOptions& options) {
    const std::size_t k = chain_descents(w);
    const Poset q = spec.poset();
    auto lhs = hstar(q, canon_labeling(w, sigma), options.limits);
    auto rhs = hstar(q, canon_labeling(Labeling::identity(spec.m), sigma), options.limits).shifted(k);
    return compare_polynomials("dissonant-shift", std::move(lhs), std::move(rhs),
                               "sigma=" + word_string(sigma.values()));
}

IdentityReport summand_reciprocity(const AmphibianSpec& spec, const Labeling& w,
                                   const Labeling& sigma, const CanonOptions& options) {
    const Poset q = spec.poset();
    const std::size_t top = spec.m * spec.n - 1;
    auto h = hstar(q, canon_labeling(w, sigma), options.limits);
    auto lhs = reflect(h, top).shifted(chain_descents(w));
    auto rhs = hstar(q, canon_labeling(w, phi(sigma)), options.limits).shifted(chain_descents(phi(w)));
    return compare_polynomials("summand-reciprocity", std::move(lhs), std::move(rhs),
                               "sigma=" + word_string(sigma.values()));
}

WeakDescentResult weak_descent_routes(std::size_t m, std::size_t n, const CanonOptions& options) {
    require_canon_size(m, n, options);
    const Poset product = product_with_chain(chain(m), n);
    const auto sigmas = permutations(n);
    const Labeling id = Labeling::identity(m);
    auto terms = parallel_map<IntPolynomial>(sigmas.size(), options.jobs, [&](std::size_t i) {
        const Labeling labels = canon_labeling(id, sigmas[i]);
        std::vector<unsigned long> counts(m * n, 0);
        for_each_linear_extension(
            product,
            [&](std::span<const Element> order) {
                ++counts[weak_descent_count(multiset_word(order, labels, m).letters())];
                return true;
            },
            {}, options.limits);
        return IntPolynomial::from_counts(counts);
    });
    WeakDescentResult result;
    for (const auto& t : terms) result.by_weak_descents += t;
    result.by_reverse_labeling =
        canon_polynomial_bruteforce(chain(m), Labeling::reversed(m), n, options);
    return result;
}

IntPolynomial weak_descent_polynomial(std::size_t m, std::size_t n, const CanonOptions& options) {
    auto routes = weak_descent_routes(m, n, options);
    if (!(routes.by_weak_descents == routes.by_reverse_labeling))
        throw std::logic_error("weak descent routes disagree: " + routes.by_weak_descents.str() +
                               " vs " + routes.by_reverse_labeling.str());
    return routes.by_weak_descents;
}

MultisetWord canon_word_from_checked_extension(std::span<const Element> order, std::size_t m,
                                               std::size_t n) {
    const std::size_t product_size = m * n;
    if (order.size() != product_size + n)
        throw std::invalid_argument("extension length does not match [m] checked-x [n]");
    std::vector<Label> top_order;
    for (Element x : order)
        if (x >= product_size) top_order.push_back(static_cast<Label>(x - product_size + 1));
    Word letters;
    for (Element x : order)
        if (x < product_size) letters.push_back(top_order[x / m]);
    return MultisetWord(std::move(letters), m);
}

GammaInterpretation gamma_interpretation_counts(std::size_t m, std::size_t n, RhoDescentRule rule,
                                                const CanonOptions& options) {
    GammaInterpretation result;
    result.m = m;
    result.n = n;
    result.rule = rule;
    result.stated_offset = (m + n - 1) / 2;

    const Poset checked = checked_product(chain(m), n);
    const Labeling labels = checked_labeling(Labeling::identity(m), n);
    const auto rho = rho_values(checked);
    const std::size_t size = checked.size();

    std::map<std::size_t, std::vector<LinearExtension>> by_count;
    for_each_linear_extension(
        checked,
        [&](std::span<const Element> order) {
            auto data = rho_descent_data(order, labels, rho, rule);
            if (!data.double_descents.empty()) return true;
            const Element a = order[size - 2];
            const Element b = order[size - 1];
            if (rho[a] == 1 && rho[b] == 1 && labels(a) > labels(b)) return true;
            by_count[data.descents.size()].push_back({{order.begin(), order.end()}});
            return true;
        },
        {}, options.limits);

    result.histogram.assign(size, 0);
    for (const auto& [c, exts] : by_count) result.histogram[c] = exts.size();

    const std::size_t d = m * (n - 1);
    const IntPolynomial canon = canon_polynomial_bruteforce(chain(m), Labeling::identity(m), n, options);
    auto gamma = gamma_expansion(canon, d);
    if (!gamma) throw std::logic_error("canon polynomial is not palindromic over 0..m(n-1)");
    result.expected = *gamma;

    const std::size_t len = d / 2 + 1;
    auto reproduces = [&](std::size_t offset) {
        for (std::size_t c = 0; c < result.histogram.size(); ++c) {
            const bool inside = c >= offset && c - offset < len;
            const mpz_class want = inside ? result.expected.gamma[c - offset] : mpz_class(0);
            if (want != result.histogram[c]) return false;
        }
        // Gamma entries whose bucket would lie past the histogram must vanish.
        for (std::size_t i = 0; i < len; ++i)
            if (offset + i >= result.histogram.size() && result.expected.gamma[i] != 0) return false;
        return true;
    };

    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t c = i + result.stated_offset;
        result.counts.emplace_back(c < result.histogram.size() ? result.histogram[c] : 0);
        auto it = by_count.find(c);
        result.classes.push_back(it == by_count.end() ? std::vector<LinearExtension>{} : it->second);
    }
    result.matches = reproduces(result.stated_offset);
    for (std::size_t offset = 0; offset < size; ++offset) {
        if (reproduces(offset)) {
            result.empirical_offset = offset;
            break;
        }
    }
    return result;
}

SweepReport conjecture_sweep(std::size_t m, std::size_t n, const CanonOptions& options) {
    const std::size_t edges = removable_edge_count(m, n);
    if (!options.force) {
        require_within_cap("sweep edges", edges, options.limits.max_sweep_edges);
        require_canon_size(m, n, options);
    }
    if (edges >= 63) throw CapExceeded("sweep edges", edges, 62);

    SweepReport report;
    report.m = m;
    report.n = n;
    const std::size_t window = m * (n - 1);
    const Labeling id = Labeling::identity(m);
    const CanonOptions inner = sequential(options);

    report.rows = parallel_map<SweepRow>(std::size_t{1} << edges, options.jobs, [&](std::size_t mask) {
        SweepRow row;
        row.mask = mask;
        row.removed = edges_from_mask(m, n, mask);
        AmphibianSpec spec{m, n, row.removed};
        row.mode = removal_mode(spec);
        row.polynomial = dissonant_polynomial(spec, id, inner);
        row.window_high = window;
        row.palindromic = is_palindromic(row.polynomial, 0, static_cast<long>(window));
        row.gamma = gamma_expansion(row.polynomial, window);
        row.gamma_positive = row.gamma && row.gamma->is_positive();
        row.unimodal = is_unimodal(row.polynomial);
        return row;
    });

    for (const auto& row : report.rows) {
        const std::string tag = "mask " + std::to_string(row.mask) + ": ";
        if (row.polynomial.degree() != static_cast<long>(window))
            report.inconsistencies.push_back(tag + "degree " + std::to_string(row.polynomial.degree()) +
                                             " differs from m(n-1)");
        if (row.palindromic != row.gamma.has_value())
            report.inconsistencies.push_back(tag + "gamma expansion availability disagrees with palindromy");
        if (row.gamma && !(row.gamma->reconstruct() == row.polynomial))
            report.inconsistencies.push_back(tag + "gamma expansion does not reconstruct");
        if (row.gamma_positive && !row.unimodal)
            report.inconsistencies.push_back(tag + "gamma-positive but not unimodal");

        std::optional<std::string> violation;
        if (!row.palindromic)
            violation = "not palindromic over 0.." + std::to_string(window);
        else if (auto neg = row.gamma->first_negative())
            violation = "gamma-negative at index " + std::to_string(*neg);
        if (violation)
            report.counterexamples.push_back({AmphibianSpec{m, n, row.removed}, row.polynomial,
                                              row.gamma, *violation});
    }
    return report;
}

// ---------------------------------------------------------------------------
// Named statements

namespace {

using Reports = std::vector<IdentityReport>;
using StatementFn = std::function<Reports(const StatementInput&, const CanonOptions&)>;

struct BaseInput {
    Poset poset;
    Labeling labeling;
    bool is_chain;
};

BaseInput base_of(const StatementInput& in, bool natural_default) {
    if (in.poset) {
        Labeling w = in.labeling ? *in.labeling : natural_labeling(*in.poset);
        return {*in.poset, std::move(w), false};
    }
    return {chain(in.m), natural_default ? Labeling::identity(in.m) : Labeling::reversed(in.m), true};
}

IdentityReport tagged(IdentityReport r, const std::string& name, const std::string& extra) {
    r.name = name;
    if (!extra.empty()) r.detail = r.detail.empty() ? extra : extra + "; " + r.detail;
    return r;
}

std::vector<std::vector<CopyEdge>> subposets(const StatementInput& in, const CanonOptions& options) {
    if (in.removed) return {*in.removed};
    const std::size_t edges = removable_edge_count(in.m, in.n);
    if (!options.force) require_within_cap("sweep edges", edges, options.limits.max_sweep_edges);
    std::vector<std::vector<CopyEdge>> all;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask)
        all.push_back(edges_from_mask(in.m, in.n, mask));
    return all;
}

std::string edges_string(const std::vector<CopyEdge>& edges) {
    std::string s = "removed={";
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(edges[i].p) + ":" + std::to_string(edges[i].j);
    }
    return s + "}";
}

Reports narayana_product(const StatementInput& in, const CanonOptions& o) {
    auto lhs = canon_polynomial_bruteforce(chain(2), Labeling::identity(2), in.n, o);
    return {compare_polynomials("narayana-product", lhs, eulerian(in.n) * narayana(in.n),
                                "m=2 n=" + std::to_string(in.n))};
}

Reports thm_main(const StatementInput& in, const CanonOptions& o) {
    auto base = base_of(in, true);
    if (!is_natural(base.poset, base.labeling))
        throw std::invalid_argument("thm-main needs a natural labeling");
    const Poset product = product_with_chain(base.poset, in.n);
    auto c = canon_polynomial_bruteforce(base.poset, base.labeling, in.n, o);
    Reports out{compare_polynomials("thm-main", c,
                                    eulerian(in.n) * hstar(product, natural_labeling(product), o.limits),
                                    "product form")};
    if (is_graded(base.poset) && !c.is_zero())
        out.push_back(compare_polynomials("thm-main", c, reflect(c, static_cast<std::size_t>(c.degree())),
                                          "palindromic (graded base)"));
    return out;
}

Reports narayana_dyck(const StatementInput& in, const CanonOptions& o) {
    const Poset p = product_with_chain(chain(2), in.n);
    Reports out;
    out.push_back(compare_polynomials("narayana-dyck", hstar(p, Labeling::identity(2 * in.n), o.limits),
                                      narayana(in.n), "h* of [2] x [n] vs high peaks"));
    out.push_back(compare_polynomials("narayana-dyck", IntPolynomial({0}) + IntPolynomial::monomial(0, count_linear_extensions(p)),
                                      IntPolynomial::monomial(0, catalan(in.n)), "e([2] x [n]) vs Catalan"));
    const Labeling id = Labeling::identity(2 * in.n);
    unsigned long matched = 0, total = 0;
    for_each_linear_extension(
        p,
        [&](std::span<const Element> order) {
            ++total;
            DyckPath path = dyck_from_linext(p, order);
            bool ok = linext_from_dyck(path).order == std::vector<Element>(order.begin(), order.end()) &&
                      descent_set(word(order, id)) == high_peak_positions(path);
            matched += ok;
            return true;
        },
        {}, o.limits);
    out.push_back(compare_polynomials("narayana-dyck", IntPolynomial::monomial(0, matched),
                                      IntPolynomial::monomial(0, total),
                                      "extensions whose descents land on high peaks"));
    return out;
}

Reports shift(const StatementInput& in, const CanonOptions& o) {
    auto base = base_of(in, false);
    const std::size_t k = constant_descents(base.poset, base.labeling);
    const Poset product = product_with_chain(base.poset, in.n);
    const IntPolynomial natural = hstar(product, natural_labeling(product), o.limits);
    Reports out;
    for (const auto& sigma : permutations(in.n)) {
        const Labeling labels = canon_labeling(base.labeling, sigma);
        const std::size_t shift_by = k + chain_descents(sigma);
        auto r = compare_polynomials("shift", hstar(product, labels, o.limits), natural.shifted(shift_by),
                                     "sigma=" + word_string(sigma.values()));
        auto sv = descent_shift_vector(product, labels, natural_labeling(product));
        if (!sv || sv->k != static_cast<long>(shift_by)) {
            r.holds = false;
            r.witness = "descent shift vector missing or with the wrong k";
        }
        out.push_back(std::move(r));
    }
    return out;
}

Reports canon_product(const StatementInput& in, const CanonOptions& o) {
    Reports out;
    std::vector<BaseInput> bases{base_of(in, true)};
    if (!in.poset) bases.push_back(base_of(in, false));
    for (const auto& b : bases)
        out.push_back(tagged(compare_polynomials("canon-product",
                                                 canon_polynomial_bruteforce(b.poset, b.labeling, in.n, o),
                                                 canon_polynomial_product(b.poset, b.labeling, in.n, o)),
                             "canon-product", "w=" + word_string(b.labeling.values())));
    return out;
}

Reports checked(const StatementInput& in, const CanonOptions& o) {
    auto b = base_of(in, true);
    return {checked_product_identity(b.poset, b.labeling, in.n, o)};
}

Reports generalized(const StatementInput& in, const CanonOptions& o) {
    auto b = base_of(in, true);
    std::vector<std::pair<std::string, Poset>> shapes{{"antichain", antichain(in.n)},
                                                      {"chain", chain(in.n)}};
    if (in.n == 3) {
        shapes.emplace_back("V", v_poset());
        shapes.emplace_back("Lambda", lambda_poset());
    }
    Reports out;
    for (const auto& [label, shape] : shapes)
        out.push_back(tagged(generalized_product_identity(b.poset, b.labeling, shape, o),
                             "generalized-product", "shape=" + label));
    return out;
}

Reports dissonant_shift(const StatementInput& in, const CanonOptions& o) {
    Reports out;
    for (const auto& removed : subposets(in, o)) {
        AmphibianSpec spec{in.m, in.n, removed};
        for (const auto& sigma : permutations(in.n))
            out.push_back(tagged(dissonant_shift_identity(spec, Labeling::reversed(in.m), sigma, o),
                                 "dissonant-shift", edges_string(removed)));
    }
    return out;
}

template <class Check>
Reports over_subposets(const StatementInput& in, const CanonOptions& o, const char* name, Check check) {
    Reports out;
    for (const auto& removed : subposets(in, o)) {
        AmphibianSpec spec{in.m, in.n, removed};
        for (const Labeling& w : {Labeling::identity(in.m), Labeling::reversed(in.m)})
            out.push_back(tagged(check(spec, w, o), name,
                                 edges_string(removed) + " w=" + word_string(w.values())));
        if (in.m == 1) out.pop_back();  // id and reverse coincide
    }
    return out;
}

Reports dissonant_degree(const StatementInput& in, const CanonOptions& o) {
    return over_subposets(in, o, "dissonant-degree",
                          [](const AmphibianSpec& s, const Labeling& w, const CanonOptions& opt) {
                              return dissonant_degree_check(s, w, opt);
                          });
}

Reports dissonant_palindromy(const StatementInput& in, const CanonOptions& o) {
    return over_subposets(in, o, "dissonant-palindromy",
                          [](const AmphibianSpec& s, const Labeling& w, const CanonOptions& opt) {
                              return dissonant_palindromy_check(s, w, opt);
                          });
}

Reports gamma_interp(const StatementInput& in, const CanonOptions& o) {
    auto g = gamma_interpretation_counts(in.m, in.n, RhoDescentRule::Lexicographic, o);
    std::vector<mpz_class> counts = g.counts;
    std::string detail = "offset " + std::to_string(g.stated_offset);
    if (g.empirical_offset && *g.empirical_offset != g.stated_offset)
        detail += "; counts match at offset " + std::to_string(*g.empirical_offset) + " instead";
    auto r = compare_polynomials("gamma-interpretation", IntPolynomial(counts),
                                 IntPolynomial(g.expected.gamma), detail);
    if (!g.matches) r.holds = false;
    if (!g.matches && !r.witness) r.witness = "qualifying extensions fall outside the gamma range";
    return {r};
}

Reports weak(const StatementInput& in, const CanonOptions& o) {
    auto routes = weak_descent_routes(in.m, in.n, o);
    auto shifted = canon_polynomial_bruteforce(chain(in.m), Labeling::identity(in.m), in.n, o)
                       .shifted(in.m - 1);
    return {compare_polynomials("weak-descent", routes.by_weak_descents, shifted,
                                "weak descents vs shifted canon polynomial"),
            compare_polynomials("weak-descent", routes.by_reverse_labeling, shifted,
                                "reverse labeling vs shifted canon polynomial")};
}

Reports subposet_palindromy(const StatementInput& in, const CanonOptions& o) {
    Reports out;
    for (const auto& removed : subposets(in, o)) {
        AmphibianSpec spec{in.m, in.n, removed};
        if (removal_mode(spec) != RemovalMode::FixedRow) continue;
        const std::string where = edges_string(removed);
        auto cid = dissonant_polynomial(spec, Labeling::identity(in.m), o);
        const std::size_t wid = in.m * (in.n - 1);
        out.push_back(compare_polynomials("subposet-palindromy", cid, reflect(cid, wid),
                                          where + " w=id window 0.." + std::to_string(wid)));
        auto cu = dissonant_polynomial(spec, Labeling::reversed(in.m), o);
        const std::size_t wu = in.m * (in.n + 1) - 2;
        out.push_back(compare_polynomials("subposet-palindromy", cu, reflect(cu, wu),
                                          where + " w=u window 0.." + std::to_string(wu)));
    }
    return out;
}

const std::vector<std::pair<std::string_view, StatementFn>>& statement_table() {
    static const std::vector<std::pair<std::string_view, StatementFn>> table{
        {"narayana-product", narayana_product},
        {"thm-main", thm_main},
        {"narayana-dyck", narayana_dyck},
        {"shift", shift},
        {"canon-product", canon_product},
        {"checked-product", checked},
        {"generalized-product", generalized},
        {"dissonant-shift", dissonant_shift},
        {"dissonant-degree", dissonant_degree},
        {"dissonant-palindromy", dissonant_palindromy},
        {"gamma-interpretation", gamma_interp},
        {"weak-descent", weak},
        {"subposet-palindromy", subposet_palindromy},
    };
    return table;
}

}  // namespace

const std::vector<std::string_view>& statement_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> v;
        for (const auto& [name, fn] : statement_table()) v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<IdentityReport> verify_statement(std::string_view name, const StatementInput& input,
                                             const CanonOptions& options) {
    if (input.m == 0 || input.n == 0) throw std::invalid_argument("m and n must be positive");
    for (const auto& [key, fn] : statement_table())
        if (key == name) return fn(input, options);
    throw std::invalid_argument("unknown statement: " + std::string(name));
}

}  // namespace canonlab
