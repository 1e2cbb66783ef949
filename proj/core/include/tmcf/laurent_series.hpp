#ifndef TMCF_LAURENT_SERIES_HPP
#define TMCF_LAURENT_SERIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmcf/polynomial.hpp"
#include "tmcf/rational.hpp"

namespace tmcf {

/// Truncated element of Q((T^-1)): coefficients are stored exactly on the
/// exponent window [-precision, top]. Exponents above top are zero,
/// exponents below -precision are undefined and never reported; arithmetic
/// narrows the window conservatively rather than zero-extending.
class LaurentSeries {
public:
    /// coefficients[j] is the coefficient of T^(top - j); the window
    /// [-precision, top] must be nonempty.
    LaurentSeries(int top, int precision, std::vector<Rational> coefficients);

    /// Series sum_{n=1..n_terms} letters[n-1] * T^-n with precision n_terms.
    /// letters must hold at least n_terms entries.
    static LaurentSeries from_word(std::span<const std::int8_t> letters, int n_terms);

    /// Embeds a polynomial exactly, with the requested precision.
    static LaurentSeries from_polynomial(const Polynomial& p, int precision);

    int top() const { return top_; }
    int precision() const { return precision_; }

    /// Coefficient of T^e. Zero above top; throws below -precision.
    const Rational& coeff(int e) const;

    /// Largest exponent in the window with a nonzero coefficient, or
    /// nullopt when the series is zero to its precision.
    std::optional<int> order() const;

    /// Difference, exact on the window both operands determine.
    LaurentSeries sub(const LaurentSeries& other) const;

    /// Product; the result window accounts for both unknown tails.
    LaurentSeries mul(const LaurentSeries& other) const;

    /// Product with an exact polynomial.
    LaurentSeries mul(const Polynomial& p) const;

    /// Multiplicative inverse. If the leading nonzero term sits at exponent
    /// v, the result has top -v and precision precision + 2v. Throws when
    /// the series is zero to its precision.
    LaurentSeries inverse() const;

    /// Text form like "T^-1 - T^-2 + O(T^-5)".
    std::string to_string() const;

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        return a.top_ == b.top_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
    }

private:
    int top_;
    int precision_;
    std::vector<Rational> coeffs_;  // descending exponents: top, top-1, ..., -precision
};

}  // namespace tmcf

#endif  // TMCF_LAURENT_SERIES_HPP
