#ifndef TMCF_VERIFICATION_HPP
#define TMCF_VERIFICATION_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tmcf/continued_fraction.hpp"
#include "tmcf/polynomial.hpp"
#include "tmcf/rational.hpp"

namespace tmcf {

/// Per-index outcome of comparing the Euclid-computed quotient against the
/// predicted one. Equality is exact polynomial equality.
struct QuotientComparison {
    std::size_t index = 0;
    Polynomial computed;
    Polynomial predicted;
    bool equal = false;
};

/// Outcome of one computed-versus-predicted run. depth_certified below
/// depth_requested means the precision did not pin down enough quotients;
/// that is reported, not treated as a comparison failure.
struct VerificationReport {
    int family = 0;
    std::size_t depth_requested = 0;
    std::size_t depth_certified = 0;
    long long precision_used = 0;
    std::vector<QuotientComparison> matches;
    std::optional<std::size_t> first_mismatch;
    Rational measure_estimate;
    std::chrono::duration<double> elapsed{0};

    bool all_match() const { return !first_mismatch.has_value(); }
};

/// Running estimate of the irrationality measure at a given depth.
struct MeasureEstimate {
    int family = 0;
    std::size_t depth = 0;
    Rational value;
};

/// How the finite-depth measure estimate is formed; carried in reports so
/// the estimator is never mistaken for the limit.
inline constexpr std::string_view kMeasureFormulaNote =
    "2 + max over ceil(depth/2) <= n < depth of (deg a_{n+1} - 1) / sum_{j<=n} deg a_j";

/// Series precision that certifies `depth` quotients when the predicted
/// degrees are right: N = 2 * sum_{n<=depth} deg a_n + 2.
long long required_precision(int family, std::size_t depth);

/// Builds theta_family from the word prefix, expands it by the Euclidean
/// engine, and compares every certified quotient up to `depth` with the
/// predicted one. A mismatch never aborts the scan. The precision override
/// replaces required_precision (useful to probe the certification bound).
VerificationReport verify_expansion(int family, std::size_t depth,
                                    std::optional<long long> precision_override = std::nullopt);

/// Finite-depth irrationality measure estimate from the predicted degree
/// sequence; see kMeasureFormulaNote. Exactly 2 whenever the window's
/// quotient degrees are all 1. Requires depth >= 3.
MeasureEstimate irrationality_estimate(int family, std::size_t depth);

/// Comparison/report assembly, split out so the scan logic is testable
/// against a doctored expansion.
VerificationReport build_report(int family, std::size_t depth, const CertifiedExpansion& computed,
                                std::chrono::duration<double> elapsed);

}  // namespace tmcf

#endif  // TMCF_VERIFICATION_HPP
