#include <doctest.h>

#include <set>

#include "canonlab/canon.hpp"
#include "canonlab/polys.hpp"
#include "oracle.hpp"

using namespace canonlab;

namespace {

IntPolynomial from(const std::vector<long>& c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return IntPolynomial(v);
}

std::vector<std::vector<Label>> all_perms(std::size_t n) {
    std::vector<Label> s(n);
    std::iota(s.begin(), s.end(), Label{1});
    std::vector<std::vector<Label>> out;
    do out.push_back(s);
    while (std::next_permutation(s.begin(), s.end()));
    return out;
}

// (w x sigma)(p, j) written out directly.
std::vector<Label> labels_of(const std::vector<Label>& w, const std::vector<Label>& sigma) {
    const std::size_t m = w.size();
    std::vector<Label> out(m * sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
        for (std::size_t p = 0; p < m; ++p) out[p + j * m] = w[p] + (sigma[j] - 1) * static_cast<Label>(m);
    return out;
}

// Sum over S_n of brute-force h*, on any poset with the product layout.
std::vector<long> oracle_sum(const Poset& q, const std::vector<Label>& w, std::size_t n) {
    std::vector<long> total;
    for (const auto& s : all_perms(n)) total = oracle::add(total, oracle::hstar(q, labels_of(w, s)));
    return total;
}

std::vector<CopyEdge> mask_edges(std::size_t m, std::size_t n, std::uint64_t mask) {
    std::vector<CopyEdge> out;
    std::size_t bit = 0;
    for (std::size_t p = 1; p <= m; ++p)
        for (std::size_t j = 1; j < n; ++j, ++bit)
            if (mask >> bit & 1) out.push_back({p, j});
    return out;
}

std::vector<Label> identity_word(std::size_t m) {
    std::vector<Label> w(m);
    std::iota(w.begin(), w.end(), Label{1});
    return w;
}

std::vector<Label> reversed_word(std::size_t m) {
    auto w = identity_word(m);
    std::reverse(w.begin(), w.end());
    return w;
}

struct LabeledBase {
    const char* name;
    Poset poset;
    Labeling w;
};

std::vector<LabeledBase> bases() {
    return {
        {"[1]", chain(1), Labeling::identity(1)},
        {"[2]", chain(2), Labeling::identity(2)},
        {"[3]", chain(3), Labeling::identity(3)},
        {"V", v_poset(), Labeling::identity(3)},
        {"Lambda", lambda_poset(), Labeling::identity(3)},
        {"[2] reversed", chain(2), Labeling::reversed(2)},
        {"[3] reversed", chain(3), Labeling::reversed(3)},
        {"[3] 132", chain(3), Labeling({1, 3, 2})},
        {"V top-heavy", v_poset(), Labeling({3, 1, 2})},
        {"Lambda bottom-heavy", lambda_poset(), Labeling({2, 3, 1})},
    };
}

}  // namespace

TEST_CASE("canon polynomial examples") {
    CHECK(canon_polynomial_bruteforce(chain(2), Labeling::identity(2), 2) == IntPolynomial({1, 2, 1}));
    CHECK(canon_polynomial_bruteforce(chain(3), Labeling::identity(3), 2) == IntPolynomial({1, 4, 4, 1}));
    for (std::size_t n = 1; n <= 5; ++n)
        CHECK(canon_polynomial_bruteforce(chain(1), Labeling::identity(1), n) == eulerian(n));

    CHECK(canon_polynomial_product(chain(2), Labeling::identity(2), 3) ==
          IntPolynomial({1, 4, 1}) * IntPolynomial({1, 3, 1}));
    CHECK(canon_polynomial_product(chain(2), Labeling::identity(2), 2) == IntPolynomial({1, 2, 1}));
    for (std::size_t m = 1; m <= 3; ++m)
        CHECK(canon_polynomial_product(chain(m), Labeling::reversed(m), 2) ==
              canon_polynomial_product(chain(m), Labeling::identity(m), 2).shifted(m - 1));
}

TEST_CASE("canon polynomial: brute force, oracle and product form agree") {
    for (const auto& b : bases()) {
        for (std::size_t n = 1; n <= 3; ++n) {
            CAPTURE(b.name);
            CAPTURE(n);
            const IntPolynomial brute = canon_polynomial_bruteforce(b.poset, b.w, n);
            CHECK(brute == from(oracle_sum(product_with_chain(b.poset, n), b.w.values(), n)));
            CHECK(brute == canon_polynomial_product(b.poset, b.w, n));
            if (is_graded(b.poset) && is_natural(b.poset, b.w))
                CHECK(is_palindromic(brute, 0, brute.degree()));
        }
    }
}

TEST_CASE("product form needs constant descents") {
    const Labeling mixed({2, 1, 3});  // V: one chain descends, one does not
    CHECK_THROWS_AS(constant_descents(v_poset(), mixed), NotConstantDescent);
    CHECK_THROWS_AS(canon_polynomial_product(v_poset(), mixed, 2), NotConstantDescent);
    CHECK(constant_descents(chain(3), Labeling::reversed(3)) == 2);
}

TEST_CASE("size cap on the sum over S_n") {
    CanonOptions small;
    small.limits.max_canon_size = 4;
    CHECK_THROWS_AS(canon_polynomial_bruteforce(chain(3), Labeling::identity(3), 2, small), CapExceeded);
    small.force = true;
    CHECK(canon_polynomial_bruteforce(chain(3), Labeling::identity(3), 2, small) == IntPolynomial({1, 4, 4, 1}));
}

TEST_CASE("checked product identity") {
    auto r = checked_product_identity(chain(2), Labeling::identity(2), 3);
    CHECK(r.holds);
    CHECK(r.lhs == IntPolynomial({1, 4, 1}) * IntPolynomial({1, 3, 1}));
    r = checked_product_identity(chain(1), Labeling::identity(1), 2);
    CHECK(r.holds);
    CHECK(r.rhs == IntPolynomial({1, 1}));
    r = checked_product_identity(chain(3), Labeling::identity(3), 2);
    CHECK(r.holds);
    CHECK(r.rhs == IntPolynomial({1, 4, 4, 1}));

    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            auto rep = checked_product_identity(chain(m), Labeling::identity(m), n);
            CHECK(rep.holds);
            if (m * n + n > 9) continue;  // keep the N! oracle cheap
            std::vector<Label> checked_labels(m * n + n);
            std::iota(checked_labels.begin(), checked_labels.end(), Label{1});
            CHECK(rep.rhs == from(oracle::hstar(checked_product(chain(m), n), checked_labels)));
        }
}

TEST_CASE("generalized product over extensions of a shape") {
    for (const auto& b : bases()) {
        CAPTURE(b.name);
        for (const Poset& shape : {antichain(2), antichain(3), chain(3), v_poset(), lambda_poset()}) {
            auto r = generalized_product_identity(b.poset, b.w, shape);
            CHECK(r.holds);
        }
    }
    // The antichain case is the plain canon polynomial.
    auto r = generalized_product_identity(chain(2), Labeling::identity(2), antichain(3));
    CHECK(r.lhs == canon_polynomial_bruteforce(chain(2), Labeling::identity(2), 3));
    // A chain shape leaves the single term sigma = id.
    const Poset p = product_with_chain(chain(2), 3);
    r = generalized_product_identity(chain(2), Labeling::identity(2), chain(3));
    CHECK(r.lhs == hstar(p, Labeling::identity(6)));
}

TEST_CASE("edge masks and removal modes") {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        const auto edges = edges_from_mask(2, 4, mask);
        CHECK(edges == mask_edges(2, 4, mask));
        CHECK(mask_from_edges(2, 4, edges) == mask);
    }
    CHECK(removable_edge_count(3, 2) == 3);
    CHECK_THROWS(mask_from_edges(2, 2, std::vector<CopyEdge>{{1, 2}}));

    CHECK(removal_mode({2, 3, {}}) == RemovalMode::FixedRow);
    CHECK(removal_mode({2, 3, {{2, 1}, {2, 2}}}) == RemovalMode::FixedRow);
    CHECK(removal_mode({2, 3, {{1, 1}, {2, 2}}}) == RemovalMode::Arbitrary);
}

TEST_CASE("dissonant polynomial examples") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            CHECK(dissonant_polynomial(AmphibianSpec{m, n, {}}, Labeling::identity(m)) ==
                  canon_polynomial_bruteforce(chain(m), Labeling::identity(m), n));

    CHECK(dissonant_polynomial(AmphibianSpec{2, 2, {{2, 1}}}, Labeling::identity(2)) == IntPolynomial({1, 4, 1}));
}

TEST_CASE("dissonant polynomials match brute force on every subposet") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
        for (std::uint64_t mask = 0; mask < (1u << (m * (n - 1))); ++mask) {
            AmphibianSpec spec{std::size_t(m), std::size_t(n), mask_edges(m, n, mask)};
            const Poset q = spec.poset();
            for (const auto& w : {identity_word(m), reversed_word(m)})
                CHECK(dissonant_polynomial(spec, Labeling(w)) == from(oracle_sum(q, w, n)));
        }
    }
}

TEST_CASE("dissonant degree") {
    auto r = dissonant_degree_check({2, 3, {}}, Labeling::identity(2));
    CHECK(r.holds);
    CHECK(r.lhs == IntPolynomial::monomial(4));
    r = dissonant_degree_check({3, 2, {}}, Labeling::identity(3));
    CHECK(r.holds);
    CHECK(r.lhs == IntPolynomial::monomial(3));
    r = dissonant_degree_check({2, 2, {}}, Labeling::reversed(2));
    CHECK(r.holds);
    CHECK(r.lhs == IntPolynomial::monomial(3));
    CHECK(r.detail.find("block extension 4231 has 2 descents") != std::string::npos);
    CHECK(r.detail.find("top-degree witness") != std::string::npos);
}

TEST_CASE("dissonant palindromy") {
    for (std::uint64_t mask = 0; mask < 16; ++mask)
        CHECK(dissonant_palindromy_check({2, 3, mask_edges(2, 3, mask)}, Labeling::identity(2)).holds);
    auto r = dissonant_palindromy_check({2, 2, {}}, Labeling::reversed(2));
    CHECK(r.holds);
    CHECK(r.detail.find("0..4") != std::string::npos);
    CHECK(is_palindromic(r.lhs, 0, 4));
}

TEST_CASE("summand reciprocity and shift on every subposet") {
    for (std::size_t n = 2; n <= 3; ++n) {
        const std::size_t m = 2;
        for (std::uint64_t mask = 0; mask < (1u << (m * (n - 1))); ++mask) {
            AmphibianSpec spec{m, n, mask_edges(m, n, mask)};
            for (const auto& s : all_perms(n)) {
                for (const Labeling& w : {Labeling::identity(m), Labeling::reversed(m)}) {
                    CHECK(summand_reciprocity(spec, w, Labeling(s)).holds);
                    CHECK(dissonant_shift_identity(spec, w, Labeling(s)).holds);
                }
            }
        }
    }
}

TEST_CASE("single summands need not be unimodal") {
    const Poset p = product_with_chain(chain(2), 3);
    const IntPolynomial sum = hstar(p, canon_labeling(Labeling::identity(2), Labeling::identity(3))) +
                              hstar(p, canon_labeling(Labeling::identity(2), Labeling({3, 2, 1})));
    CHECK(sum == IntPolynomial({1, 3, 2, 3, 1}));
    CHECK(sum == IntPolynomial({1, 3, 1}) * IntPolynomial({1, 0, 1}));
    CHECK_FALSE(is_unimodal(sum));
    auto g = gamma_expansion(sum, 4);
    REQUIRE(g);
    CHECK_FALSE(g->is_positive());
}

TEST_CASE("weak descents") {
    CHECK(weak_descent_polynomial(2, 2) == IntPolynomial({0, 1, 2, 1}));
    for (std::size_t n = 1; n <= 4; ++n) CHECK(weak_descent_polynomial(1, n) == eulerian(n));
    CHECK(weak_descent_polynomial(2, 3) == (eulerian(3) * narayana(3)).shifted(1));

    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            // Oracle: all canon multiset permutations, filtered from all multiset permutations.
            std::vector<long> c;
            for (const auto& w : oracle::multiset_permutations(m, n))
                if (oracle::is_canon(w, m)) c = oracle::add(c, oracle::shift({1}, oracle::wdes(w)));
            const auto routes = weak_descent_routes(m, n);
            CHECK(routes.by_weak_descents == from(c));
            CHECK(routes.by_reverse_labeling == from(c));
            CHECK(routes.by_weak_descents ==
                  canon_polynomial_bruteforce(chain(m), Labeling::identity(m), n).shifted(m - 1));
        }
}

TEST_CASE("gamma interpretation at m=3, n=2") {
    const auto g = gamma_interpretation_counts(3, 2);
    CHECK(g.stated_offset == 2);
    CHECK(g.matches);
    CHECK(g.empirical_offset == 2u);
    CHECK(g.expected.gamma == std::vector<mpz_class>{1, 1});
    REQUIRE(g.classes.size() == 2);
    REQUIRE(g.classes[0].size() == 1);
    REQUIRE(g.classes[1].size() == 1);
    const Labeling id = Labeling::identity(8);
    CHECK(word(g.classes[0][0].order, id) == Word{1, 2, 4, 3, 5, 6, 7, 8});
    CHECK(word(g.classes[1][0].order, id) == Word{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(canon_word_from_checked_extension(g.classes[0][0].order, 3, 2).str() == "112122");
    CHECK(canon_word_from_checked_extension(g.classes[1][0].order, 3, 2).str() == "111222");
}

TEST_CASE("gamma interpretation at m=n=3 recovers the listed classes") {
    const auto g = gamma_interpretation_counts(3, 3);
    CHECK(g.matches);
    CHECK(g.expected.gamma == std::vector<mpz_class>{1, 8, 14, 4});
    const std::vector<std::vector<std::string>> listed{
        {"112123233"},
        {"111223233", "112132233", "112231233", "112122333", "112233123", "123112233", "221213133",
         "331312122"},
        {"111222333", "123123123", "222113133", "221231133", "221132133", "221211333", "221133213",
         "213221133", "333112122", "331321122", "331123122", "331311222", "331122312", "312331122"},
        {"222111333", "333111222", "213213213", "312312312"}};
    REQUIRE(g.classes.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        std::set<std::string> got;
        for (const auto& e : g.classes[i]) got.insert(canon_word_from_checked_extension(e.order, 3, 3).str());
        CHECK(got == std::set<std::string>(listed[i].begin(), listed[i].end()));
    }
}

TEST_CASE("gamma interpretation elsewhere") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {2, 4}, {4, 2}}) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(gamma_interpretation_counts(m, n).matches);
    }
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto g = gamma_interpretation_counts(1, n);
        CHECK(g.matches);
        CHECK(g.expected.gamma == gamma_expansion(eulerian(n), n - 1)->gamma);
    }
    // Reading the rho-descent condition as an independent either-drop rule
    // does not reproduce gamma.
    CHECK_FALSE(gamma_interpretation_counts(3, 3, RhoDescentRule::EitherDrop).matches);
}

TEST_CASE("conjecture sweep") {
    const auto r = conjecture_sweep(2, 3);
    CHECK(r.rows.size() == 16);
    CHECK(r.consistent());
    CHECK(r.counterexamples.empty());
    for (const auto& row : r.rows) {
        CHECK(row.gamma_positive);
        CHECK(row.palindromic);
        CHECK(row.polynomial.degree() == 4);
        CHECK(row.mode == removal_mode({2, 3, row.removed}));
    }
    // Cutting every edge of row 2 leaves multiset permutations with a fixed
    // first-copy pattern, summed over all patterns.
    const auto& loose = r.rows[mask_from_edges(2, 3, std::vector<CopyEdge>{{2, 1}, {2, 2}})];
    CHECK(loose.mode == RemovalMode::FixedRow);
    std::vector<long> c;
    for (const auto& w : oracle::multiset_permutations(2, 3)) c = oracle::add(c, oracle::shift({1}, oracle::des(w)));
    CHECK(loose.polynomial == from(c));

    for (auto [m, n] : {std::pair{2, 2}, {3, 2}, {2, 4}}) {
        const auto s = conjecture_sweep(m, n);
        CHECK(s.rows.size() == (1u << (m * (n - 1))));
        CHECK(s.consistent());
        CHECK(s.counterexamples.empty());
    }

    CanonOptions tight;
    tight.limits.max_sweep_edges = 3;
    CHECK_THROWS_AS(conjecture_sweep(2, 4, tight), CapExceeded);
}

TEST_CASE("results do not depend on the number of jobs") {
    CanonOptions one, four;
    four.jobs = 4;
    CHECK(canon_polynomial_bruteforce(chain(3), Labeling::identity(3), 3, one) ==
          canon_polynomial_bruteforce(chain(3), Labeling::identity(3), 3, four));
    const auto a = conjecture_sweep(2, 4, one);
    const auto b = conjecture_sweep(2, 4, four);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].mask == b.rows[i].mask);
        CHECK(a.rows[i].polynomial == b.rows[i].polynomial);
    }
}

TEST_CASE("named statements") {
    CHECK(statement_names().size() == 13);
    for (auto name : statement_names()) {
        for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
            StatementInput in;
            in.m = m;
            in.n = n;
            CAPTURE(name);
            const auto reports = verify_statement(name, in);
            CHECK_FALSE(reports.empty());
            for (const auto& r : reports) {
                CAPTURE(r.detail);
                CHECK(r.holds);
            }
        }
    }
    CHECK_THROWS_AS(verify_statement("nope", {}), std::invalid_argument);

    StatementInput v;
    v.m = 3;
    v.n = 2;
    v.poset = v_poset();
    v.labeling = Labeling::identity(3);
    for (const auto& r : verify_statement("canon-product", v)) CHECK(r.holds);
}

TEST_CASE("reports carry a witness on mismatch") {
    auto r = compare_polynomials("demo", IntPolynomial({1, 2}), IntPolynomial({1, 3}));
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->find("x^1") != std::string::npos);
}
