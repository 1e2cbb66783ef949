#include "tmcf/continued_fraction.hpp"

#include <stdexcept>
#include <utility>

namespace tmcf {

ContinuedFraction cf_of_rational(const Polynomial& num, const Polynomial& den,
                                 std::size_t max_quotients) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    ContinuedFraction cf;
    auto [a0, rem] = divrem(num, den);
    cf.integer_part = std::move(a0);
    Polynomial prev = den;
    Polynomial cur = std::move(rem);
    while (!cur.is_zero() && cf.quotients.size() < max_quotients) {
        auto [a, r] = divrem(prev, cur);
        cf.quotients.push_back(std::move(a));
        prev = std::move(cur);
        cur = std::move(r);
    }
    return cf;
}

CertifiedExpansion cf_of_series(const LaurentSeries& s) {
    const int n_prec = s.precision();
    if (n_prec < 1) throw std::invalid_argument("series precision must be >= 1");

    // s = p(T) / T^N with p holding the window coefficients shifted up by N.
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(s.top()) + n_prec + 1);
    for (int e = -n_prec; e <= s.top(); ++e) coeffs.push_back(s.coeff(e));
    const Polynomial num{std::move(coeffs)};
    const Polynomial den = Polynomial::monomial(1, n_prec);

    CertifiedExpansion out;
    out.precision_used = n_prec;

    auto [a0, rem] = divrem(num, den);
    out.cf.integer_part = std::move(a0);

    // Two series congruent modulo T^-(N+1) share every partial quotient
    // while twice the accumulated quotient degree stays below N, so the
    // Euclidean loop can stop as soon as the bound would be crossed.
    long cert_degree_sum = 0;
    Polynomial prev = den;
    Polynomial cur = std::move(rem);
    while (!cur.is_zero()) {
        auto [a, r] = divrem(prev, cur);
        cert_degree_sum += a.degree();
        if (2 * cert_degree_sum > n_prec - 1) break;
        out.cf.quotients.push_back(std::move(a));
        prev = std::move(cur);
        cur = std::move(r);
    }
    out.certified_count = out.cf.quotients.size();
    return out;
}

std::vector<ConvergentPair> convergents(const ContinuedFraction& cf, std::size_t k) {
    if (k > cf.quotients.size())
        throw std::invalid_argument("requested more convergents than quotients");
    std::vector<ConvergentPair> out;
    out.reserve(k + 1);
    Polynomial p_prev = Polynomial::constant(1);  // P_-1
    Polynomial q_prev;                            // Q_-1 = 0
    Polynomial p_cur = cf.integer_part;           // P_0
    Polynomial q_cur = Polynomial::constant(1);   // Q_0
    out.push_back({p_cur, q_cur});
    for (std::size_t j = 1; j <= k; ++j) {
        const Polynomial& a = cf.quotients[j - 1];
        Polynomial p_next = a * p_cur + p_prev;
        Polynomial q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur);
        q_prev = std::move(q_cur);
        p_cur = std::move(p_next);
        q_cur = std::move(q_next);
        out.push_back({p_cur, q_cur});
    }
    return out;
}

int approximation_order(const LaurentSeries& s, const ConvergentPair& pair) {
    if (pair.q.is_zero()) throw std::invalid_argument("convergent with zero denominator");
    const LaurentSeries scaled = s.mul(pair.q);
    const LaurentSeries diff = scaled.sub(LaurentSeries::from_polynomial(pair.p, scaled.precision()));
    const auto ord = diff.order();
    if (!ord) throw std::runtime_error("order unresolved at this precision");
    return *ord;
}

}  // namespace tmcf
