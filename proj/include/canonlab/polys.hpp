#pragma once

// Named polynomials: Eulerian, Narayana, descent polynomials of labeled
// posets, and order polynomial values.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "canonlab/config.hpp"
#include "canonlab/poset.hpp"
#include "canonlab/polynomial.hpp"

namespace canonlab {

// Descent polynomial of S_n. Brute force over all permutations for n <= 10,
// the recurrence above that.
IntPolynomial eulerian(std::size_t n);
IntPolynomial eulerian_recurrence(std::size_t n);

// High-peak polynomial of Dyck paths of semilength n, by path enumeration.
IntPolynomial narayana(std::size_t n);

// Sum of x^des(word) over the linear extensions of (P, w).
IntPolynomial hstar(const Poset& poset, const Labeling& w, const Limits& limits = default_limits());

// Omega_{P,w}(j) for j = 0..j_max, counted over all maps P -> {0..j}.
std::vector<mpz_class> order_polynomial_values(const Poset& poset, const Labeling& w,
                                               std::size_t j_max);

// First j_max + 1 coefficients of (1 - x)^(size + 1) * sum_j values[j] x^j.
std::vector<mpz_class> hstar_from_order_values(const std::vector<mpz_class>& values,
                                               std::size_t poset_size);

}  // namespace canonlab
