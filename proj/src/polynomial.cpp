#include "canonlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace canonlab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coefficients_(std::move(coefficients)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    coefficients_.reserve(coefficients.size());
    for (long c : coefficients) coefficients_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(std::size_t exponent, const mpz_class& coefficient) {
    std::vector<mpz_class> c(exponent + 1, 0);
    c[exponent] = coefficient;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::one_plus_x_power(std::size_t d) {
    std::vector<mpz_class> c(d + 1);
    for (std::size_t k = 0; k <= d; ++k) mpz_bin_uiui(c[k].get_mpz_t(), d, k);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_counts(const std::vector<unsigned long>& counts) {
    std::vector<mpz_class> c(counts.begin(), counts.end());
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

long IntPolynomial::lowest_degree() const {
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        if (coefficients_[i] != 0) return static_cast<long>(i);
    return -1;
}

mpz_class IntPolynomial::coefficient(std::size_t exponent) const {
    return exponent < coefficients_.size() ? coefficients_[exponent] : mpz_class(0);
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void IntPolynomial::add_term(std::size_t exponent, const mpz_class& coefficient) {
    if (exponent >= coefficients_.size()) coefficients_.resize(exponent + 1, 0);
    coefficients_[exponent] += coefficient;
    normalize();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] += other.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size(), 0);
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] -= other.coefficients_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<mpz_class> product(coefficients_.size() + other.coefficients_.size() - 1, 0);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
    coefficients_ = std::move(product);
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<mpz_class> c(k, 0);
    c.insert(c.end(), coefficients_.begin(), coefficients_.end());
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const mpz_class& c = coefficients_[i];
        if (c == 0) continue;
        mpz_class magnitude = abs(c);
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || magnitude != 1) out << magnitude.get_str();
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
    }
    return out.str();
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
IntPolynomial poly_shift(const IntPolynomial& p, std::size_t k) { return p.shifted(k); }

bool is_palindromic(const IntPolynomial& p, long low, long high) {
    if (low > high) return false;
    // Anything outside the window must vanish for the symmetry to be exact.
    if (p.degree() > high) return false;
    if (!p.is_zero() && p.lowest_degree() < low) return false;
    for (long i = 0; low + i <= high - i; ++i)
        if (p.coefficient(static_cast<std::size_t>(low + i)) !=
            p.coefficient(static_cast<std::size_t>(high - i)))
            return false;
    return true;
}

IntPolynomial reflect(const IntPolynomial& p, std::size_t high) {
    if (p.degree() > static_cast<long>(high))
        throw std::invalid_argument("reflection window smaller than the degree");
    std::vector<mpz_class> c(high + 1, 0);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) c[high - i] = p.coefficients()[i];
    return IntPolynomial(std::move(c));
}

bool is_unimodal(const IntPolynomial& p) {
    const auto& c = p.coefficients();
    std::size_t i = 0;
    while (i + 1 < c.size() && c[i] <= c[i + 1]) ++i;
    while (i + 1 < c.size() && c[i] >= c[i + 1]) ++i;
    return i + 1 >= c.size();
}

IntPolynomial GammaExpansion::reconstruct() const {
    IntPolynomial total;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] == 0) continue;
        total += IntPolynomial::one_plus_x_power(center_degree - 2 * i) *
                 IntPolynomial::monomial(i, gamma[i]);
    }
    return total;
}

bool GammaExpansion::is_positive() const { return !first_negative().has_value(); }

std::optional<std::size_t> GammaExpansion::first_negative() const {
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i] < 0) return i;
    return std::nullopt;
}

std::optional<GammaExpansion> gamma_expansion(const IntPolynomial& p, std::size_t d) {
    if (!is_palindromic(p, 0, static_cast<long>(d))) return std::nullopt;
    GammaExpansion g;
    g.center_degree = d;
    IntPolynomial rest = p;
    // The lowest remaining coefficient x^i can only come from x^i (1+x)^(d-2i).
    for (std::size_t i = 0; i <= d / 2; ++i) {
        mpz_class gi = rest.coefficient(i);
        g.gamma.push_back(gi);
        if (gi != 0)
            rest -= IntPolynomial::one_plus_x_power(d - 2 * i) * IntPolynomial::monomial(i, gi);
    }
    if (!rest.is_zero()) return std::nullopt;
    return g;
}

}  // namespace canonlab
