#ifndef TMCF_CONJECTURE_HPP
#define TMCF_CONJECTURE_HPP

#include <cstddef>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "tmcf/polynomial.hpp"
#include "tmcf/rational.hpp"

namespace tmcf {

/// Largest e with 2^e dividing k. Undefined (throws) for k = 0.
int two_adic_valuation(unsigned long long k);

/// The auxiliary polynomial family P_{i,m} in Z[T] for a word family i >= 2:
///
///   P_{i,1}     = (T^(2i^2) - 1) / (T^(2i) - 1)
///   P_{i,m+1}   = P_{i,m}(T^(2i)) + 2*(P_{i,m}(T^(2i)) - P_{i,m}(1)) / (T^i - 1)
///
/// Both divisions are exact; an inexact division is a hard error because it
/// falsifies the recursion. Degrees grow as deg P_{i,m} = (2i)^m * (i-1), so
/// materialization is capped by a configurable coefficient budget.
class PPolynomialTable {
public:
    static constexpr std::size_t kDefaultCoefficientBudget = 1'000'000;

    explicit PPolynomialTable(int family,
                              std::size_t coefficient_budget = kDefaultCoefficientBudget);

    int family() const { return family_; }

    /// P_{family,m} for m >= 1. References stay valid across later calls.
    const Polynomial& at(int m);

    /// P_{family,m}(1), exact.
    Rational value_at_one(int m);

    /// P'_{family,m}(1), exact.
    Rational derivative_at_one(int m);

private:
    void extend_to(int m);

    int family_;
    std::size_t budget_;
    std::deque<Polynomial> polys_;
    std::vector<Rational> values_at_one_;
    std::vector<Rational> derivatives_at_one_;
};

/// (P_{i,m}(1), P'_{i,m}(1)) for m = 1..m_max, with the value recurrence
/// P_{i,m+1}(1) = P_{i,m}(1) + 4*P'_{i,m}(1) checked along the way.
std::vector<std::pair<Rational, Rational>> p_values_at_one(
    int family, int m_max,
    std::size_t coefficient_budget = PPolynomialTable::kDefaultCoefficientBudget);

/// Predicted continued fraction of theta_i, generated from its recursive
/// description: the partial quotient is a_n = lambda_n * b_n with lambda_n
/// the leading coefficient and b_n unitary.
///
/// The leading coefficients start (1, 1/2) and obey, for k >= 1,
///
///   lambda_{4k-3} = lambda_{2k-1}
///   lambda_{4k}   = -(2 + sum_{j=1..k-1} u_j)^(-1)        (lambda_4 = -1/2)
///   lambda_{4k-2} = -lambda_{4k}
///   lambda_{4k-1} = lambda_{2k} / (lambda_{4k-2} * lambda_{4k})
///
/// with u_j = 2*lambda_{2j+1} for family 1 and
/// u_j = 2*lambda_{2j+1} * P_{i,nu2(j)+1}(1) for families i >= 2.
///
/// The unitary parts are b_{1,n} = T - (-1)^n for family 1 and, for i >= 2,
/// b_{i,1} = T - 1, b_{i,2k} = (T^i - 1)/(T - 1),
/// b_{i,2k+1} = (T - 1) * P_{i,nu2(k)+1}.
class ConjecturalExpansion {
public:
    explicit ConjecturalExpansion(
        int family,
        std::size_t coefficient_budget = PPolynomialTable::kDefaultCoefficientBudget);

    int family() const { return family_; }

    /// lambda_n for n >= 1 (memoized; the recursion reads indices near n/2).
    Rational leading_coeff(std::size_t n);

    /// The unitary polynomial b_n.
    Polynomial monic_factor(std::size_t n);

    /// a_n = lambda_n * b_n.
    Polynomial partial_quotient(std::size_t n);

    /// deg a_n without materializing anything: 1 for family 1; for i >= 2:
    /// 1 at n = 1, i-1 at even n, and 1 + (2i)^(nu2(k)+1) * (i-1) at odd
    /// n = 2k+1.
    long long quotient_degree(std::size_t n) const;

    /// Underlying P table; only families >= 2 have one.
    PPolynomialTable& p_table();

private:
    void ensure(std::size_t n);
    Rational lambda_4k(std::size_t k);
    Rational u_term(std::size_t j);
    const Rational& u_partial_sum(std::size_t k);

    int family_;
    std::optional<PPolynomialTable> ppolys_;
    std::vector<Rational> lambda_;  // lambda_[n-1] = lambda_n
    std::vector<Rational> u_sums_;  // u_sums_[k-1] = sum_{j=1..k} u_j
};

}  // namespace tmcf

#endif  // TMCF_CONJECTURE_HPP
