#include "tmcf/conjecture.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace tmcf {

int two_adic_valuation(unsigned long long k) {
    if (k == 0) throw std::domain_error("2-adic valuation undefined at 0");
    return std::countr_zero(k);
}

namespace {

// T^e - 1
Polynomial power_minus_one(int e) {
    return Polynomial::monomial(1, e) - Polynomial::constant(1);
}

// 1 + T + ... + T^(e-1)
Polynomial geometric_sum(int e) {
    std::vector<Rational> v(static_cast<std::size_t>(e), Rational(1));
    return Polynomial(std::move(v));
}

long long checked_pow(long long base, int exp) {
    long long r = 1;
    for (int j = 0; j < exp; ++j) {
        if (__builtin_mul_overflow(r, base, &r))
            throw std::overflow_error("quotient degree overflows");
    }
    return r;
}

}  // namespace

PPolynomialTable::PPolynomialTable(int family, std::size_t coefficient_budget)
    : family_(family), budget_(coefficient_budget) {
    if (family < 2) throw std::invalid_argument("P polynomials require family >= 2");
}

void PPolynomialTable::extend_to(int m) {
    while (static_cast<int>(polys_.size()) < m) {
        const int next = static_cast<int>(polys_.size()) + 1;
        // deg P_{i,m} = (2i)^m * (i-1); refuse to materialize past the budget.
        const long long deg = checked_pow(2ll * family_, next) * (family_ - 1);
        if (deg + 1 > static_cast<long long>(budget_))
            throw std::length_error("P polynomial exceeds the coefficient budget");

        Polynomial value;
        if (next == 1) {
            auto [q, r] = divrem(power_minus_one(2 * family_ * family_),
                                 power_minus_one(2 * family_));
            if (!r.is_zero()) throw std::runtime_error("P-recursion exactness violated");
            value = std::move(q);
        } else {
            const Polynomial& prev = polys_.back();
            const Polynomial composed = prev.compose_power(2 * family_);
            auto [q, r] = divrem(composed - Polynomial::constant(values_at_one_.back()),
                                 power_minus_one(family_));
            if (!r.is_zero()) throw std::runtime_error("P-recursion exactness violated");
            value = composed + Rational(2) * q;
        }
        values_at_one_.push_back(value.eval(1));
        derivatives_at_one_.push_back(value.derivative().eval(1));
        polys_.push_back(std::move(value));
    }
}

const Polynomial& PPolynomialTable::at(int m) {
    if (m < 1) throw std::invalid_argument("P polynomial index must be >= 1");
    extend_to(m);
    return polys_[static_cast<std::size_t>(m - 1)];
}

Rational PPolynomialTable::value_at_one(int m) {
    if (m < 1) throw std::invalid_argument("P polynomial index must be >= 1");
    extend_to(m);
    return values_at_one_[static_cast<std::size_t>(m - 1)];
}

Rational PPolynomialTable::derivative_at_one(int m) {
    if (m < 1) throw std::invalid_argument("P polynomial index must be >= 1");
    extend_to(m);
    return derivatives_at_one_[static_cast<std::size_t>(m - 1)];
}

std::vector<std::pair<Rational, Rational>> p_values_at_one(int family, int m_max,
                                                           std::size_t coefficient_budget) {
    if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
    PPolynomialTable table(family, coefficient_budget);
    std::vector<std::pair<Rational, Rational>> out;
    out.reserve(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m)
        out.emplace_back(table.value_at_one(m), table.derivative_at_one(m));
    for (int m = 1; m < m_max; ++m) {
        const auto& [v, d] = out[static_cast<std::size_t>(m - 1)];
        if (out[static_cast<std::size_t>(m)].first != v + Rational(4) * d)
            throw std::runtime_error("P value recurrence violated");
    }
    return out;
}

ConjecturalExpansion::ConjecturalExpansion(int family, std::size_t coefficient_budget)
    : family_(family) {
    if (family < 1) throw std::invalid_argument("word family index must be >= 1");
    if (family >= 2) ppolys_.emplace(family, coefficient_budget);
}

Rational ConjecturalExpansion::u_term(std::size_t j) {
    ensure(2 * j + 1);
    Rational u = Rational(2) * lambda_[2 * j];  // lambda_{2j+1}
    if (family_ >= 2) u *= ppolys_->value_at_one(two_adic_valuation(j) + 1);
    return u;
}

const Rational& ConjecturalExpansion::u_partial_sum(std::size_t k) {
    while (u_sums_.size() < k) {
        const std::size_t j = u_sums_.size() + 1;
        Rational next = u_term(j);
        if (!u_sums_.empty()) next += u_sums_.back();
        u_sums_.push_back(std::move(next));
    }
    return u_sums_[k - 1];
}

Rational ConjecturalExpansion::lambda_4k(std::size_t k) {
    if (k == 1) return Rational(-1, 2);
    const Rational den = Rational(2) + u_partial_sum(k - 1);
    if (den.is_zero()) throw std::runtime_error("lambda recursion degenerate");
    return -den.inverse();
}

void ConjecturalExpansion::ensure(std::size_t n) {
    while (lambda_.size() < n) {
        const std::size_t idx = lambda_.size() + 1;
        Rational value;
        if (idx == 1) {
            value = Rational(1);
        } else if (idx == 2) {
            value = Rational(1, 2);
        } else {
            switch (idx % 4) {
                case 1:  // lambda_{4k-3} = lambda_{2k-1}
                    value = lambda_[(idx + 1) / 2 - 1];
                    break;
                case 0:  // lambda_{4k} from the u-sums
                    value = lambda_4k(idx / 4);
                    break;
                case 2:  // lambda_{4k-2} = -lambda_{4k}
                    value = -lambda_4k((idx + 2) / 4);
                    break;
                default: {  // lambda_{4k-1} = lambda_{2k} / (lambda_{4k-2} * lambda_{4k})
                    const std::size_t k = (idx + 1) / 4;
                    const Rational& before = lambda_[idx - 2];  // lambda_{4k-2}
                    const Rational product = before * lambda_4k(k);
                    if (product.is_zero()) throw std::runtime_error("lambda recursion degenerate");
                    value = lambda_[2 * k - 1] / product;
                    break;
                }
            }
        }
        lambda_.push_back(std::move(value));
    }
}

Rational ConjecturalExpansion::leading_coeff(std::size_t n) {
    if (n < 1) throw std::invalid_argument("quotient index must be >= 1");
    ensure(n);
    return lambda_[n - 1];
}

Polynomial ConjecturalExpansion::monic_factor(std::size_t n) {
    if (n < 1) throw std::invalid_argument("quotient index must be >= 1");
    if (family_ == 1) {
        // T - (-1)^n, purely periodic of period 2
        return Polynomial::variable() - Polynomial::constant(n % 2 == 0 ? 1 : -1);
    }
    const Polynomial t_minus_one = Polynomial::variable() - Polynomial::constant(1);
    if (n == 1) return t_minus_one;
    if (n % 2 == 0) return geometric_sum(family_);
    const std::size_t k = (n - 1) / 2;
    return t_minus_one * ppolys_->at(two_adic_valuation(k) + 1);
}

Polynomial ConjecturalExpansion::partial_quotient(std::size_t n) {
    return leading_coeff(n) * monic_factor(n);
}

long long ConjecturalExpansion::quotient_degree(std::size_t n) const {
    if (n < 1) throw std::invalid_argument("quotient index must be >= 1");
    if (family_ == 1) return 1;
    if (n == 1) return 1;
    if (n % 2 == 0) return family_ - 1;
    const std::size_t k = (n - 1) / 2;
    return 1 + checked_pow(2ll * family_, two_adic_valuation(k) + 1) * (family_ - 1);
}

PPolynomialTable& ConjecturalExpansion::p_table() {
    if (!ppolys_) throw std::logic_error("family 1 has no P polynomial table");
    return *ppolys_;
}

}  // namespace tmcf
