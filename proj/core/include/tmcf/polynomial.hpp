#ifndef TMCF_POLYNOMIAL_HPP
#define TMCF_POLYNOMIAL_HPP

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmcf/rational.hpp"

namespace tmcf {

/// Dense polynomial over Rational in the indeterminate T.
///
/// Coefficient k is the coefficient of T^k. The highest stored coefficient
/// is nonzero; the zero polynomial stores nothing and has degree
/// kDegreeNegInfinity, which compares below every attainable degree.
class Polynomial {
public:
    static constexpr int kDegreeNegInfinity = std::numeric_limits<int>::min();

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients)
        : coeffs_(std::move(coefficients)) {
        trim();
    }

    static Polynomial constant(Rational c);
    /// c * T^exponent
    static Polynomial monomial(Rational c, int exponent);
    /// T
    static Polynomial variable() { return monomial(1, 1); }
    /// Parses the text format produced by to_string, e.g. "-1/2*T^3 + 2*T - 1".
    static Polynomial from_string(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        return coeffs_.empty() ? kDegreeNegInfinity : static_cast<int>(coeffs_.size()) - 1;
    }
    /// Leading coefficient; zero for the zero polynomial.
    Rational leading_coeff() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of T^k; zero outside the stored range.
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact Euclidean division: num = quotient*den + remainder with
    /// degree(remainder) < degree(den). Throws on a zero divisor.
    friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& num, const Polynomial& den);

    /// Exact evaluation by Horner's scheme.
    Rational eval(const Rational& x) const;

    /// Formal derivative.
    Polynomial derivative() const;

    /// Substitution T -> T^c for c >= 1; the degree multiplies by c.
    Polynomial compose_power(int c) const;

    /// Descending-exponent text form with explicit rational coefficients,
    /// e.g. "-1/2*T^3 + 2*T - 1". The zero polynomial renders as "0".
    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace tmcf

#endif  // TMCF_POLYNOMIAL_HPP
