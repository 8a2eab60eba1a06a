#include "canonlab/polys.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "canonlab/linext.hpp"

namespace canonlab {

namespace {
constexpr std::size_t kEulerianBruteForceMax = 10;
constexpr double kOrderMapBudget = 2e8;
}  // namespace

IntPolynomial eulerian_recurrence(std::size_t n) {
    if (n == 0) throw std::invalid_argument("eulerian: n must be positive");
    // A(n, k) = (k + 1) A(n-1, k) + (n - k) A(n-1, k-1)
    std::vector<mpz_class> row{1};
    for (std::size_t len = 2; len <= n; ++len) {
        std::vector<mpz_class> next(len, 0);
        for (std::size_t k = 0; k < len; ++k) {
            if (k < row.size()) next[k] += (k + 1) * row[k];
            if (k >= 1) next[k] += (len - k) * row[k - 1];
        }
        row = std::move(next);
    }
    return IntPolynomial(std::move(row));
}

IntPolynomial eulerian(std::size_t n) {
    if (n == 0) throw std::invalid_argument("eulerian: n must be positive");
    if (n > kEulerianBruteForceMax) return eulerian_recurrence(n);
    std::vector<Label> perm(n);
    std::iota(perm.begin(), perm.end(), Label{1});
    std::vector<unsigned long> counts(n, 0);
    do {
        ++counts[descent_count(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return IntPolynomial::from_counts(counts);
}

IntPolynomial narayana(std::size_t n) {
    if (n == 0) throw std::invalid_argument("narayana: n must be positive");
    std::vector<unsigned long> counts(n, 0);
    for (const auto& path : dyck_paths(n)) ++counts[high_peak_count(path)];
    return IntPolynomial::from_counts(counts);
}

IntPolynomial hstar(const Poset& poset, const Labeling& w, const Limits& limits) {
    if (w.size() != poset.size()) throw std::invalid_argument("labeling size mismatch");
    std::vector<unsigned long> counts(std::max<std::size_t>(poset.size(), 1), 0);
    for_each_linear_extension(
        poset,
        [&](std::span<const Element> order) {
            std::size_t d = 0;
            for (std::size_t i = 0; i + 1 < order.size(); ++i) d += w(order[i + 1]) < w(order[i]);
            ++counts[d];
            return true;
        },
        {}, limits);
    return IntPolynomial::from_counts(counts);
}

std::vector<mpz_class> order_polynomial_values(const Poset& poset, const Labeling& w,
                                               std::size_t j_max) {
    if (w.size() != poset.size()) throw std::invalid_argument("labeling size mismatch");
    const std::size_t n = poset.size();
    if (std::pow(static_cast<double>(j_max + 1), static_cast<double>(n)) > kOrderMapBudget)
        throw CapExceeded("order polynomial map enumeration", n, 0);

    // Every comparable pair s < t, with the strictness demanded by the labels.
    struct Relation {
        Element s, t;
        bool strict;
    };
    std::vector<Relation> relations;
    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t)
            if (poset.less(s, t)) relations.push_back({s, t, w(s) > w(t)});

    std::vector<mpz_class> values;
    std::vector<std::size_t> map(n);
    for (std::size_t j = 0; j <= j_max; ++j) {
        std::fill(map.begin(), map.end(), 0);
        unsigned long count = 0;
        while (true) {
            bool ok = std::all_of(relations.begin(), relations.end(), [&](const Relation& r) {
                return r.strict ? map[r.s] < map[r.t] : map[r.s] <= map[r.t];
            });
            count += ok;
            std::size_t pos = 0;
            while (pos < n && map[pos] == j) map[pos++] = 0;
            if (pos == n) break;
            ++map[pos];
        }
        values.emplace_back(count);
    }
    return values;
}

std::vector<mpz_class> hstar_from_order_values(const std::vector<mpz_class>& values,
                                               std::size_t poset_size) {
    // Multiply by (1 - x)^(size + 1), truncated to the known prefix.
    std::vector<mpz_class> series = values;
    for (std::size_t r = 0; r < poset_size + 1; ++r)
        for (std::size_t i = series.size(); i-- > 1;) series[i] -= series[i - 1];
    return series;
}

}  // namespace canonlab
