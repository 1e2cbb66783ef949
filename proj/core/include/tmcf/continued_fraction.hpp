#ifndef TMCF_CONTINUED_FRACTION_HPP
#define TMCF_CONTINUED_FRACTION_HPP

#include <cstddef>
#include <vector>

#include "tmcf/laurent_series.hpp"
#include "tmcf/polynomial.hpp"

namespace tmcf {

/// Continued fraction [a0; a1, a2, ...] over Q(T); every quotient beyond
/// the integer part is non-constant.
struct ContinuedFraction {
    Polynomial integer_part;            // a0
    std::vector<Polynomial> quotients;  // a1, a2, ...
};

/// Expansion of a truncated series together with the number of partial
/// quotients the truncation actually determines. The engine only emits
/// certified quotients, so certified_count == quotients.size().
struct CertifiedExpansion {
    ContinuedFraction cf;
    std::size_t certified_count = 0;
    int precision_used = 0;
};

/// Numerator/denominator of one convergent.
struct ConvergentPair {
    Polynomial p;
    Polynomial q;
};

/// Euclidean continued fraction of num/den, stopping at a zero remainder
/// or after max_quotients partial quotients past a0. Quotients come out
/// exactly as the division produces them; no unit normalization.
ContinuedFraction cf_of_rational(const Polynomial& num, const Polynomial& den,
                                 std::size_t max_quotients);

/// Expansion of a series of precision N, read as p(T)/T^N. A quotient
/// prefix a1..am is kept exactly while 2 * sum(deg aj) <= N - 1; beyond
/// that bound the truncation no longer pins down the expansion, and the
/// quotients are discarded.
CertifiedExpansion cf_of_series(const LaurentSeries& s);

/// Convergents (P_j, Q_j) for j = 0..k by the three-term recurrence with
/// seeds P_-1 = 1, P_0 = a0, Q_-1 = 0, Q_0 = 1. Requires k <= quotient count.
std::vector<ConvergentPair> convergents(const ContinuedFraction& cf, std::size_t k);

/// Exponent of the leading term of Q*s - P; negative for true convergents.
/// Throws when every coefficient on the resolvable window is zero.
int approximation_order(const LaurentSeries& s, const ConvergentPair& pair);

}  // namespace tmcf

#endif  // TMCF_CONTINUED_FRACTION_HPP
