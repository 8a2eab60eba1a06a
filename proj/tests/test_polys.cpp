#include <doctest.h>

#include "canonlab/linext.hpp"
#include "canonlab/polys.hpp"
#include "oracle.hpp"

using namespace canonlab;

namespace {

IntPolynomial from(const std::vector<long>& c) {
    std::vector<mpz_class> v(c.begin(), c.end());
    return IntPolynomial(v);
}

// Narayana numbers N(n,k) = binom(n,k) binom(n,k+1) / n, independent of any path walk.
IntPolynomial narayana_closed(std::size_t n) {
    std::vector<mpz_class> c;
    for (std::size_t k = 0; k < n; ++k) {
        mpz_class a, b;
        mpz_bin_uiui(a.get_mpz_t(), n, k);
        mpz_bin_uiui(b.get_mpz_t(), n, k + 1);
        c.push_back(a * b / static_cast<unsigned long>(n));
    }
    return IntPolynomial(c);
}

}  // namespace

TEST_CASE("Eulerian polynomials") {
    CHECK(eulerian(1) == IntPolynomial({1}));
    CHECK(eulerian(2) == IntPolynomial({1, 1}));
    CHECK(eulerian(3) == IntPolynomial({1, 4, 1}));
    for (std::size_t n = 1; n <= 8; ++n) {
        CHECK(eulerian(n) == from(oracle::eulerian(n)));
        CHECK(eulerian(n) == eulerian_recurrence(n));
        CHECK(is_palindromic(eulerian(n), 0, static_cast<long>(n) - 1));
    }
    CHECK(eulerian(12).evaluate(1) == mpz_class("479001600"));
    CHECK_THROWS(eulerian(0));
}

TEST_CASE("Narayana polynomials") {
    CHECK(narayana(1) == IntPolynomial({1}));
    CHECK(narayana(2) == IntPolynomial({1, 1}));
    CHECK(narayana(3) == IntPolynomial({1, 3, 1}));
    for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(narayana(n) == narayana_closed(n));
        CHECK(is_palindromic(narayana(n), 0, static_cast<long>(n) - 1));
        const Poset p = product_with_chain(chain(2), n);
        CHECK(hstar(p, natural_labeling(p)) == narayana(n));
    }
}

TEST_CASE("h* examples") {
    for (std::size_t m = 1; m <= 5; ++m) CHECK(hstar(chain(m), Labeling::identity(m)) == IntPolynomial({1}));
    const Poset p23 = product_with_chain(chain(2), 3);
    CHECK(hstar(p23, Labeling::identity(6)) == IntPolynomial({1, 3, 1}));
    CHECK(hstar(p23, canon_labeling(Labeling::identity(2), Labeling({3, 2, 1}))) ==
          IntPolynomial({0, 0, 1, 3, 1}));
}

TEST_CASE("h* agrees with brute force on random labeled posets") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t size = 1 + trial % 7;
        const Poset p = oracle::random_poset(rng, size, 0.3);
        const auto labels = oracle::random_labels(rng, size);
        CHECK(hstar(p, Labeling(labels)) == from(oracle::hstar(p, labels)));
    }
}

TEST_CASE("h* shifts by des(sigma) on chain products") {
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n) {
            const Poset p = product_with_chain(chain(m), n);
            const IntPolynomial base = hstar(p, Labeling::identity(m * n));
            std::vector<Label> s(n);
            std::iota(s.begin(), s.end(), Label{1});
            do {
                CHECK(hstar(p, canon_labeling(Labeling::identity(m), Labeling(s))) ==
                      base.shifted(oracle::des(s)));
            } while (std::next_permutation(s.begin(), s.end()));
        }
}

TEST_CASE("order polynomial examples") {
    CHECK(order_polynomial_values(chain(2), Labeling::identity(2), 2) == std::vector<mpz_class>{1, 3, 6});
    CHECK(order_polynomial_values(chain(2), Labeling::reversed(2), 2) == std::vector<mpz_class>{0, 1, 3});
    const auto anti = order_polynomial_values(antichain(2), Labeling::identity(2), 5);
    for (std::size_t j = 0; j <= 5; ++j) CHECK(anti[j] == (j + 1) * (j + 1));
}

TEST_CASE("order polynomial generating function recovers h*") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t size = 1 + trial % 5;
        const Poset p = oracle::random_poset(rng, size, 0.4);
        const auto labels = oracle::random_labels(rng, size);
        const auto values = order_polynomial_values(p, Labeling(labels), 8);
        const auto series = hstar_from_order_values(values, size);
        auto expected = oracle::hstar(p, labels);
        expected.resize(series.size(), 0);
        CHECK(series == std::vector<mpz_class>(expected.begin(), expected.end()));
    }
}
