#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace canonlab {

// Dense integer polynomial; coefficients_[i] multiplies x^i. Always kept in
// canonical form: no trailing zeros, so the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(std::size_t exponent, const mpz_class& coefficient = 1);
    // (1 + x)^d
    static IntPolynomial one_plus_x_power(std::size_t d);
    // Histogram of exponents -> polynomial.
    static IntPolynomial from_counts(const std::vector<unsigned long>& counts);

    const std::vector<mpz_class>& coefficients() const noexcept { return coefficients_; }
    bool is_zero() const noexcept { return coefficients_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
    // Exponent of the lowest non-zero term; -1 for the zero polynomial.
    long lowest_degree() const;
    mpz_class coefficient(std::size_t exponent) const;
    mpz_class evaluate(const mpz_class& x) const;

    void add_term(std::size_t exponent, const mpz_class& coefficient);

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);
    IntPolynomial shifted(std::size_t k) const;  // x^k * p

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }

    bool operator==(const IntPolynomial& other) const { return coefficients_ == other.coefficients_; }

    // "1 + 4x + 4x^2 + x^3"; "0" for the zero polynomial.
    std::string str() const;

private:
    void normalize();

    std::vector<mpz_class> coefficients_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_shift(const IntPolynomial& p, std::size_t k);

// coefficient(low + i) == coefficient(high - i) for every i, reading
// coefficients outside the stored range as zero. Non-zero terms outside
// [low, high] make the result false.
bool is_palindromic(const IntPolynomial& p, long low, long high);
// x^high * p(1/x) restricted to exponents 0..high; requires deg p <= high.
IntPolynomial reflect(const IntPolynomial& p, std::size_t high);

// Coefficients weakly rise then weakly fall across 0..deg.
bool is_unimodal(const IntPolynomial& p);

struct GammaExpansion {
    std::size_t center_degree = 0;
    std::vector<mpz_class> gamma;  // gamma_0 .. gamma_{d/2}

    IntPolynomial reconstruct() const;
    bool is_positive() const;  // every gamma_i >= 0
    // Index of the first negative gamma_i.
    std::optional<std::size_t> first_negative() const;
};

// Expansion in the basis x^i (1+x)^(d-2i). Absent unless p is palindromic
// over 0..d with degree <= d.
std::optional<GammaExpansion> gamma_expansion(const IntPolynomial& p, std::size_t d);

}  // namespace canonlab
