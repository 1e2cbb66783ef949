#include "tmcf/polynomial.hpp"

#include <cctype>
#include <stdexcept>

#include "text_detail.hpp"

namespace tmcf {

namespace {
const Rational kZero(0);
}

Polynomial Polynomial::constant(Rational c) {
    std::vector<Rational> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monomial(Rational c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1, Rational(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.coeffs_.size()) v[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) v[k] += b.coeffs_[k];
    }
    return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k < a.coeffs_.size()) v[k] += a.coeffs_[k];
        if (k < b.coeffs_.size()) v[k] -= b.coeffs_[k];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial();
    Polynomial r(p);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.degree() < den.degree()) return {Polynomial(), num};

    const int dd = den.degree();
    const Rational lead_inv = den.coeffs_.back().inverse();
    std::vector<Rational> rem = num.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd) + 1, Rational(0));

    for (int k = num.degree() - dd; k >= 0; --k) {
        Rational factor = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
        if (factor.is_zero()) continue;
        for (int j = 0; j < dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= factor * den.coeffs_[static_cast<std::size_t>(j)];
        rem[static_cast<std::size_t>(k + dd)] = Rational(0);
        quot[static_cast<std::size_t>(k)] = std::move(factor);
    }
    rem.resize(static_cast<std::size_t>(dd > 0 ? dd : 0));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> v(coeffs_.size() - 1, Rational(0));
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        v[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_power(int c) const {
    if (c < 1) throw std::invalid_argument("compose_power requires a positive exponent");
    if (is_zero() || c == 1) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(degree()) * c + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[k * static_cast<std::size_t>(c)] = coeffs_[k];
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        detail::append_term(out, c, k, first);
        first = false;
    }
    return out;
}

namespace {

// Scanner for the descending-exponent text format. Accepts arbitrary
// whitespace around terms and operators.
struct TermScanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
    char peek() { return text[pos]; }

    [[noreturn]] void fail() const {
        throw std::invalid_argument("cannot parse polynomial: " + std::string(text));
    }

    std::string integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail();
        return std::string(text.substr(start, pos - start));
    }

    // coefficient magnitude: "123" or "123/456"
    Rational magnitude() {
        std::string num = integer();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            num += '/';
            num += integer();
        }
        return Rational::from_string(num);
    }

    // exponent: optional '-' then digits
    int exponent() {
        skip_ws();
        bool neg = false;
        if (pos < text.size() && text[pos] == '-') {
            neg = true;
            ++pos;
        }
        int e = std::stoi(integer());
        return neg ? -e : e;
    }
};

}  // namespace

Polynomial Polynomial::from_string(std::string_view text) {
    TermScanner s{text};
    if (s.done()) s.fail();
    Polynomial result;
    bool first = true;
    while (!s.done()) {
        int sign = 1;
        s.skip_ws();
        if (s.peek() == '+' || s.peek() == '-') {
            if (s.peek() == '-') sign = -1;
            ++s.pos;
        } else if (!first) {
            s.fail();
        }
        s.skip_ws();
        if (s.pos >= text.size()) s.fail();

        Rational coeff(1);
        bool have_coeff = false;
        bool expect_var = false;
        if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
            coeff = s.magnitude();
            have_coeff = true;
            s.skip_ws();
            if (s.pos < text.size() && s.peek() == '*') {
                ++s.pos;
                expect_var = true;
                s.skip_ws();
            }
        }
        if (expect_var && (s.pos >= text.size() || s.peek() != 'T')) s.fail();
        int exp = 0;
        if (s.pos < text.size() && s.peek() == 'T') {
            ++s.pos;
            exp = 1;
            if (s.pos < text.size() && s.peek() == '^') {
                ++s.pos;
                exp = s.exponent();
            }
        } else if (!have_coeff) {
            s.fail();
        }
        if (exp < 0) throw std::invalid_argument("negative exponent in polynomial text");
        if (sign < 0) coeff = -coeff;
        result = result + Polynomial::monomial(coeff, exp);
        first = false;
    }
    return result;
}

}  // namespace tmcf
