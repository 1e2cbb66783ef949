#ifndef TMCF_RATIONAL_HPP
#define TMCF_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tmcf {

/// Exact rational number over arbitrary-precision integers.
///
/// Invariants: gcd(|numerator|, denominator) = 1, denominator >= 1,
/// zero is 0/1. Values are normalized at construction, never lazily.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int n) : value_(n) {}
    Rational(long n) : value_(static_cast<signed long>(n)) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }
    explicit Rational(const mpz_class& n) : value_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    /// Parses "num" or "num/den" in base 10.
    static Rational from_string(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero rational");
        Rational r;
        r.value_ = 1 / value_;
        return r;
    }

    Rational operator-() const {
        Rational r;
        r.value_ = -value_;
        return r;
    }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero rational");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// "num/den", or just "num" for integers.
    std::string to_string() const { return value_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.value_;
    }

private:
    mpq_class value_;
};

inline Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("cannot parse empty rational");
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("cannot parse rational: " + std::string(text));
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
    q.canonicalize();
    Rational r;
    r.value_ = q;
    return r;
}

}  // namespace tmcf

#endif  // TMCF_RATIONAL_HPP
