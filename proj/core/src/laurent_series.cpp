#include "tmcf/laurent_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "text_detail.hpp"

namespace tmcf {

namespace {
const Rational kZero(0);
}

LaurentSeries::LaurentSeries(int top, int precision, std::vector<Rational> coefficients)
    : top_(top), precision_(precision), coeffs_(std::move(coefficients)) {
    const long window = static_cast<long>(top_) + precision_ + 1;
    if (window < 1) throw std::invalid_argument("empty Laurent series window");
    if (static_cast<long>(coeffs_.size()) != window)
        throw std::invalid_argument("Laurent series coefficient count does not match window");
}

LaurentSeries LaurentSeries::from_word(std::span<const std::int8_t> letters, int n_terms) {
    if (n_terms < 1) throw std::invalid_argument("series needs at least one term");
    if (static_cast<long>(letters.size()) < n_terms)
        throw std::invalid_argument("insufficient word prefix");
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(n_terms));
    for (int n = 1; n <= n_terms; ++n) v.emplace_back(static_cast<long>(letters[n - 1]));
    return LaurentSeries(-1, n_terms, std::move(v));
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p, int precision) {
    const int top = p.is_zero() ? 0 : p.degree();
    if (top + static_cast<long>(precision) < 0)
        throw std::invalid_argument("precision window excludes the polynomial");
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(top) + precision + 1);
    for (int e = top; e >= -precision; --e) v.push_back(p.coeff(e));
    return LaurentSeries(top, precision, std::move(v));
}

const Rational& LaurentSeries::coeff(int e) const {
    if (e > top_) return kZero;
    if (e < -precision_) throw std::out_of_range("coefficient requested below series precision");
    return coeffs_[static_cast<std::size_t>(top_ - e)];
}

std::optional<int> LaurentSeries::order() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
        if (!coeffs_[j].is_zero()) return top_ - static_cast<int>(j);
    return std::nullopt;
}

LaurentSeries LaurentSeries::sub(const LaurentSeries& other) const {
    const int top = std::max(top_, other.top_);
    const int prec = std::min(precision_, other.precision_);
    if (top + static_cast<long>(prec) < 0)
        throw std::invalid_argument("series windows do not overlap");
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(top) + prec + 1);
    for (int e = top; e >= -prec; --e) v.push_back(coeff(e) - other.coeff(e));
    return LaurentSeries(top, prec, std::move(v));
}

LaurentSeries LaurentSeries::mul(const LaurentSeries& other) const {
    const int top = top_ + other.top_;
    // The unknown tail of each factor, multiplied by the other factor's top
    // term, bounds how far down the product is exact.
    const int prec = std::min(precision_ - other.top_, other.precision_ - top_);
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(top) + prec + 1);
    for (int e = top; e >= -prec; --e) {
        Rational acc(0);
        const int lo = std::max(-precision_, e - other.top_);
        const int hi = std::min(top_, e + other.precision_);
        for (int a = lo; a <= hi; ++a) acc += coeff(a) * other.coeff(e - a);
        v.push_back(std::move(acc));
    }
    return LaurentSeries(top, prec, std::move(v));
}

LaurentSeries LaurentSeries::mul(const Polynomial& p) const {
    if (p.is_zero()) {
        std::vector<Rational> v(coeffs_.size(), Rational(0));
        return LaurentSeries(top_, precision_, std::move(v));
    }
    const int d = p.degree();
    const int top = top_ + d;
    const int prec = precision_ - d;
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(top) + prec + 1);
    for (int e = top; e >= -prec; --e) {
        Rational acc(0);
        for (int k = 0; k <= d; ++k) {
            const Rational& c = p.coeff(k);
            if (c.is_zero()) continue;
            const int a = e - k;
            if (a > top_ || a < -precision_) continue;
            acc += c * coeff(a);
        }
        v.push_back(std::move(acc));
    }
    return LaurentSeries(top, prec, std::move(v));
}

LaurentSeries LaurentSeries::inverse() const {
    const auto v = order();
    if (!v) throw std::domain_error("cannot invert a series that is zero to its precision");
    const int ord = *v;
    const Rational lead_inv = coeff(ord).inverse();

    // Write the series as c*T^ord * (1 + r) and invert the unit part by the
    // triangular recurrence w_0 = 1, w_j = -sum_{t=1..j} u_t w_{j-t}.
    const std::size_t len = static_cast<std::size_t>(ord + precision_) + 1;
    std::vector<Rational> unit(len);
    for (std::size_t j = 0; j < len; ++j) unit[j] = coeff(ord - static_cast<int>(j)) * lead_inv;
    std::vector<Rational> w(len, Rational(0));
    w[0] = Rational(1);
    for (std::size_t j = 1; j < len; ++j) {
        Rational acc(0);
        for (std::size_t t = 1; t <= j; ++t) acc += unit[t] * w[j - t];
        w[j] = -acc;
    }
    for (auto& c : w) c *= lead_inv;
    return LaurentSeries(-ord, precision_ + 2 * ord, std::move(w));
}

std::string LaurentSeries::to_string() const {
    std::string out;
    bool first = true;
    for (int e = top_; e >= -precision_; --e) {
        const Rational& c = coeff(e);
        if (c.is_zero()) continue;
        detail::append_term(out, c, e, first);
        first = false;
    }
    if (!first) out += " + ";
    out += "O(T^";
    out += std::to_string(-(static_cast<long>(precision_) + 1));
    out += ')';
    return out;
}

}  // namespace tmcf
