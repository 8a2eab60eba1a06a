#include "canonlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace canonlab {

namespace {

std::string describe_cycle(const std::vector<Element>& cycle) {
    std::ostringstream out;
    out << "cover relations contain a cycle: ";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out << " -> ";
        out << cycle[i];
    }
    return out.str();
}

// Kahn's algorithm; on failure, walks the remaining subgraph to extract a cycle.
std::vector<Element> topological_order(std::size_t n, const std::vector<Cover>& edges) {
    std::vector<std::vector<Element>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& c : edges) {
        out[c.lower].push_back(c.upper);
        ++indegree[c.upper];
    }
    std::vector<Element> order;
    order.reserve(n);
    std::vector<Element> ready;
    for (Element x = 0; x < n; ++x)
        if (indegree[x] == 0) ready.push_back(x);
    while (!ready.empty()) {
        Element x = ready.back();
        ready.pop_back();
        order.push_back(x);
        for (Element y : out[x])
            if (--indegree[y] == 0) ready.push_back(y);
    }
    if (order.size() == n) return order;

    // Every leftover vertex has a leftover predecessor; follow them backwards
    // until a vertex repeats.
    std::vector<std::vector<Element>> in(n);
    for (const auto& c : edges)
        if (indegree[c.upper] > 0 && indegree[c.lower] > 0) in[c.upper].push_back(c.lower);
    Element start = 0;
    while (indegree[start] == 0) ++start;
    std::vector<int> seen_at(n, -1);
    std::vector<Element> walk;
    Element x = start;
    while (seen_at[x] < 0) {
        seen_at[x] = static_cast<int>(walk.size());
        walk.push_back(x);
        x = in[x].front();
    }
    std::vector<Element> cycle(walk.begin() + seen_at[x], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    cycle.push_back(cycle.front());
    throw CycleError(std::move(cycle));
}

void check_edges(std::size_t n, const std::vector<Cover>& edges) {
    for (const auto& c : edges) {
        if (c.lower >= n || c.upper >= n)
            throw PosetError("cover (" + std::to_string(c.lower) + "," +
                             std::to_string(c.upper) + ") references a missing element");
        if (c.lower == c.upper)
            throw CycleError({c.lower, c.lower});
    }
}

// reach[b][a] iff a < b, computed along a topological order.
std::vector<std::vector<bool>> strict_below(std::size_t n, const std::vector<Cover>& edges,
                                            const std::vector<Element>& order) {
    std::vector<std::vector<Element>> lower(n);
    for (const auto& c : edges) lower[c.upper].push_back(c.lower);
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (Element b : order) {
        for (Element a : lower[b]) {
            below[b][a] = true;
            for (std::size_t x = 0; x < n; ++x)
                if (below[a][x]) below[b][x] = true;
        }
    }
    return below;
}

}  // namespace

CycleError::CycleError(std::vector<Element> cycle)
    : PosetError(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

Poset::Poset(std::size_t element_count, std::vector<Cover> covers)
    : element_count_(element_count), covers_(std::move(covers)) {
    check_edges(element_count_, covers_);
    std::sort(covers_.begin(), covers_.end());
    if (std::adjacent_find(covers_.begin(), covers_.end()) != covers_.end())
        throw PosetError("duplicate cover relation");
    auto order = topological_order(element_count_, covers_);
    below_ = strict_below(element_count_, covers_, order);
    index_covers();
    for (const auto& c : covers_) {
        for (Element mid : down_[c.upper]) {
            if (mid != c.lower && below_[mid][c.lower])
                throw PosetError("cover (" + std::to_string(c.lower) + "," +
                                 std::to_string(c.upper) + ") is implied by (" +
                                 std::to_string(c.lower) + "," + std::to_string(mid) + "," +
                                 std::to_string(c.upper) + ")");
        }
    }
}

Poset Poset::from_relations(std::size_t element_count, std::vector<Cover> relations) {
    check_edges(element_count, relations);
    auto order = topological_order(element_count, relations);
    auto below = strict_below(element_count, relations, order);
    std::vector<Cover> covers;
    for (Element b = 0; b < element_count; ++b) {
        for (Element a = 0; a < element_count; ++a) {
            if (!below[b][a]) continue;
            bool is_cover = true;
            for (Element c = 0; c < element_count && is_cover; ++c)
                if (below[b][c] && below[c][a]) is_cover = false;
            if (is_cover) covers.push_back({a, b});
        }
    }
    return Poset(element_count, std::move(covers));
}

void Poset::index_covers() {
    up_.assign(element_count_, {});
    down_.assign(element_count_, {});
    for (const auto& c : covers_) {
        up_[c.lower].push_back(c.upper);
        down_[c.upper].push_back(c.lower);
    }
    for (auto& v : down_) std::sort(v.begin(), v.end());
}

bool Poset::has_cover(Element lower, Element upper) const {
    return std::binary_search(covers_.begin(), covers_.end(), Cover{lower, upper});
}

bool Poset::less(Element a, Element b) const { return below_[b][a]; }

std::vector<Element> Poset::minimal_elements() const {
    std::vector<Element> result;
    for (Element x = 0; x < element_count_; ++x)
        if (down_[x].empty()) result.push_back(x);
    return result;
}

std::vector<Element> Poset::maximal_elements() const {
    std::vector<Element> result;
    for (Element x = 0; x < element_count_; ++x)
        if (up_[x].empty()) result.push_back(x);
    return result;
}

Labeling::Labeling(std::vector<Label> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (Label v : values_) {
        if (v < 1 || v > values_.size() || seen[v])
            throw std::invalid_argument("labeling is not a bijection onto 1.." +
                                        std::to_string(values_.size()));
        seen[v] = true;
    }
}

Labeling Labeling::identity(std::size_t n) {
    std::vector<Label> v(n);
    std::iota(v.begin(), v.end(), Label{1});
    return Labeling(std::move(v));
}

Labeling Labeling::reversed(std::size_t n) {
    std::vector<Label> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Label>(n - i);
    return Labeling(std::move(v));
}

Poset chain(std::size_t m) {
    if (m == 0) throw std::invalid_argument("chain length must be positive");
    std::vector<Cover> covers;
    for (Element i = 0; i + 1 < m; ++i) covers.push_back({i, i + 1});
    return Poset(m, std::move(covers));
}

Poset antichain(std::size_t n) {
    if (n == 0) throw std::invalid_argument("antichain size must be positive");
    return Poset(n, {});
}

Poset v_poset() { return Poset(3, {{0, 1}, {0, 2}}); }

Poset lambda_poset() { return Poset(3, {{0, 2}, {1, 2}}); }

Poset product_with_chain(const Poset& base, std::size_t n) {
    if (n == 0) throw std::invalid_argument("chain factor must be positive");
    const auto m = static_cast<Element>(base.size());
    std::vector<Cover> covers;
    for (Element j = 0; j < n; ++j) {
        for (const auto& c : base.covers()) covers.push_back({c.lower + j * m, c.upper + j * m});
        if (j + 1 < n)
            for (Element p = 0; p < m; ++p) covers.push_back({p + j * m, p + (j + 1) * m});
    }
    return Poset(base.size() * n, std::move(covers));
}

Poset checked_product(const Poset& base, std::size_t n) {
    Poset product = product_with_chain(base, n);
    std::vector<Cover> covers = product.covers();
    const auto tops_start = static_cast<Element>(product.size());
    for (Element top : product.maximal_elements())
        for (Element t = 0; t < n; ++t) covers.push_back({top, tops_start + t});
    return Poset(product.size() + n, std::move(covers));
}

Labeling canon_labeling(const Labeling& w, const Labeling& sigma) {
    const std::size_t m = w.size();
    std::vector<Label> values(m * sigma.size());
    for (std::size_t j = 0; j < sigma.size(); ++j)
        for (std::size_t p = 0; p < m; ++p)
            values[p + j * m] = w(static_cast<Element>(p)) +
                                (sigma(static_cast<Element>(j)) - 1) * static_cast<Label>(m);
    return Labeling(std::move(values));
}

Labeling checked_labeling(const Labeling& w, std::size_t n) {
    std::vector<Label> values = canon_labeling(w, Labeling::identity(n)).values();
    const auto base = static_cast<Label>(values.size());
    for (Label t = 1; t <= n; ++t) values.push_back(base + t);
    return Labeling(std::move(values));
}

Poset remove_intercopy_covers(const Poset& product, std::size_t base_size,
                              std::span<const CopyEdge> removed) {
    if (base_size == 0 || product.size() % base_size != 0)
        throw PosetError("product size is not a multiple of the base size");
    const std::size_t n = product.size() / base_size;
    std::vector<Cover> drop;
    for (const auto& e : removed) {
        if (e.p < 1 || e.p > base_size || e.j < 1 || e.j >= n)
            throw PosetError("unknown inter-copy edge (" + std::to_string(e.p) + "," +
                             std::to_string(e.j) + ")");
        Cover c{static_cast<Element>(e.p - 1 + (e.j - 1) * base_size),
                static_cast<Element>(e.p - 1 + e.j * base_size)};
        if (!product.has_cover(c.lower, c.upper))
            throw PosetError("edge (" + std::to_string(e.p) + "," + std::to_string(e.j) +
                             ") is not a cover of the input poset");
        drop.push_back(c);
    }
    std::sort(drop.begin(), drop.end());
    std::vector<Cover> kept;
    for (const auto& c : product.covers())
        if (!std::binary_search(drop.begin(), drop.end(), c)) kept.push_back(c);
    return Poset(product.size(), std::move(kept));
}

std::vector<std::vector<Element>> maximal_chains(const Poset& poset) {
    std::vector<std::vector<Element>> chains;
    std::vector<Element> path;
    auto walk = [&](auto&& self, Element x) -> void {
        path.push_back(x);
        const auto& up = poset.upper_covers(x);
        if (up.empty()) {
            chains.push_back(path);
        } else {
            std::vector<Element> next(up.begin(), up.end());
            std::sort(next.begin(), next.end());
            for (Element y : next) self(self, y);
        }
        path.pop_back();
    };
    for (Element x : poset.minimal_elements()) walk(walk, x);
    return chains;
}

namespace {

struct ChainLengths {
    std::vector<std::size_t> shortest;
    std::vector<std::size_t> longest;
};

// Lengths of saturated chains from a minimal element up to each element.
ChainLengths chain_lengths(const Poset& poset) {
    std::vector<Cover> covers = poset.covers();
    auto order = topological_order(poset.size(), covers);
    ChainLengths len{std::vector<std::size_t>(poset.size(), 0),
                     std::vector<std::size_t>(poset.size(), 0)};
    for (Element x : order) {
        const auto& down = poset.lower_covers(x);
        if (down.empty()) continue;
        std::size_t lo = SIZE_MAX, hi = 0;
        for (Element a : down) {
            lo = std::min(lo, len.shortest[a] + 1);
            hi = std::max(hi, len.longest[a] + 1);
        }
        len.shortest[x] = lo;
        len.longest[x] = hi;
    }
    return len;
}

}  // namespace

bool is_graded(const Poset& poset) {
    auto len = chain_lengths(poset);
    std::optional<std::size_t> common;
    for (Element x : poset.maximal_elements()) {
        if (len.shortest[x] != len.longest[x]) return false;
        if (common && *common != len.longest[x]) return false;
        common = len.longest[x];
    }
    return true;
}

Labeling natural_labeling(const Poset& poset) {
    const std::size_t n = poset.size();
    std::vector<std::size_t> pending(n);
    for (Element x = 0; x < n; ++x) pending[x] = poset.lower_covers(x).size();
    std::vector<Label> values(n, 0);
    std::vector<bool> placed(n, false);
    for (Label next = 1; next <= n; ++next) {
        Element pick = 0;
        while (placed[pick] || pending[pick] != 0) ++pick;
        placed[pick] = true;
        values[pick] = next;
        for (Element y : poset.upper_covers(pick)) --pending[y];
    }
    return Labeling(std::move(values));
}

bool is_natural(const Poset& poset, const Labeling& w) {
    return std::all_of(poset.covers().begin(), poset.covers().end(),
                       [&](const Cover& c) { return w(c.lower) < w(c.upper); });
}

ChainDescentProfile chain_descent_profile(const Poset& poset, const Labeling& w) {
    if (w.size() != poset.size()) throw std::invalid_argument("labeling size mismatch");
    ChainDescentProfile profile;
    bool constant = true;
    for (auto& c : maximal_chains(poset)) {
        std::size_t d = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            if (w(c[i]) > w(c[i + 1])) ++d;
        if (!profile.per_chain.empty() && profile.per_chain.front().descents != d)
            constant = false;
        profile.per_chain.push_back({std::move(c), d});
    }
    if (constant)
        profile.constant_k = profile.per_chain.empty() ? 0 : profile.per_chain.front().descents;
    return profile;
}

std::optional<ShiftVector> descent_shift_vector(const Poset& poset, const Labeling& w,
                                                const Labeling& w2) {
    if (w.size() != poset.size() || w2.size() != poset.size())
        throw std::invalid_argument("labeling size mismatch");
    auto delta = [&](Element a, Element b) {
        return static_cast<long>(w(a) > w(b)) - static_cast<long>(w2(a) > w2(b));
    };

    std::vector<Cover> covers = poset.covers();
    auto order = topological_order(poset.size(), covers);
    ShiftVector shift;
    shift.t.assign(poset.size(), 0);
    for (Element x : order) {
        const auto& down = poset.lower_covers(x);
        if (down.empty()) continue;
        long value = shift.t[down.front()] + delta(down.front(), x);
        for (Element a : down)
            if (shift.t[a] + delta(a, x) != value) return std::nullopt;
        shift.t[x] = value;
    }

    auto maxima = poset.maximal_elements();
    if (!maxima.empty()) {
        shift.k = shift.t[maxima.front()];
        for (Element x : maxima)
            if (shift.t[x] != shift.k) return std::nullopt;
    }
    for (const auto& c : maximal_chains(poset)) {
        long total = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) total += delta(c[i], c[i + 1]);
        if (total != shift.t[c.back()]) return std::nullopt;
    }
    return shift;
}

std::vector<int> rho_values(const Poset& poset) {
    if (!is_graded(poset)) throw PosetError("rho requires a graded poset");
    auto len = chain_lengths(poset);
    std::vector<int> result(poset.size());
    for (std::size_t x = 0; x < poset.size(); ++x)
        result[x] = static_cast<int>(len.longest[x] % 2);
    return result;
}

int rho(const Poset& poset, Element q) {
    if (q >= poset.size()) throw std::out_of_range("element out of range");
    return rho_values(poset)[q];
}

}  // namespace canonlab
