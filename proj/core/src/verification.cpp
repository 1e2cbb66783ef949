#include "tmcf/verification.hpp"

#include <algorithm>
#include <stdexcept>

#include "tmcf/conjecture.hpp"
#include "tmcf/laurent_series.hpp"
#include "tmcf/words.hpp"

namespace tmcf {

long long required_precision(int family, std::size_t depth) {
    ConjecturalExpansion predicted(family);
    long long sum = 0;
    for (std::size_t n = 1; n <= depth; ++n) sum += predicted.quotient_degree(n);
    return 2 * sum + 2;
}

VerificationReport build_report(int family, std::size_t depth, const CertifiedExpansion& computed,
                                std::chrono::duration<double> elapsed) {
    VerificationReport report;
    report.family = family;
    report.depth_requested = depth;
    report.depth_certified = computed.certified_count;
    report.precision_used = computed.precision_used;
    report.elapsed = elapsed;

    ConjecturalExpansion predicted(family);
    const std::size_t compare_to = std::min(depth, computed.certified_count);
    report.matches.reserve(compare_to);
    for (std::size_t n = 1; n <= compare_to; ++n) {
        QuotientComparison cmp;
        cmp.index = n;
        cmp.computed = computed.cf.quotients[n - 1];
        cmp.predicted = predicted.partial_quotient(n);
        cmp.equal = (cmp.computed == cmp.predicted);
        if (!cmp.equal && !report.first_mismatch) report.first_mismatch = n;
        report.matches.push_back(std::move(cmp));
    }
    report.measure_estimate =
        depth >= 3 ? irrationality_estimate(family, depth).value : Rational(2);
    return report;
}

VerificationReport verify_expansion(int family, std::size_t depth,
                                    std::optional<long long> precision_override) {
    if (family < 1) throw std::invalid_argument("word family index must be >= 1");
    if (depth < 1) throw std::invalid_argument("verification depth must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    const long long precision = precision_override.value_or(required_precision(family, depth));
    if (precision < 1) throw std::invalid_argument("precision must be >= 1");
    if (precision > 10'000'000)
        throw std::length_error("precision beyond the supported desk scale");

    const BinaryWord word = word_prefix(family, static_cast<std::size_t>(precision));
    const LaurentSeries series =
        LaurentSeries::from_word(word.letters(), static_cast<int>(precision));
    const CertifiedExpansion computed = cf_of_series(series);

    const auto elapsed = std::chrono::steady_clock::now() - start;
    return build_report(family, depth, computed,
                        std::chrono::duration_cast<std::chrono::duration<double>>(elapsed));
}

MeasureEstimate irrationality_estimate(int family, std::size_t depth) {
    if (family < 1) throw std::invalid_argument("word family index must be >= 1");
    if (depth < 3) throw std::invalid_argument("measure estimate needs depth >= 3");

    // The convergent at index n approximates to exponent 2 + deg a_{n+1} /
    // deg Q_n with deg Q_n = sum_{j<=n} deg a_j. Subtracting the guaranteed
    // minimum degree 1 from the numerator leaves the same limsup and makes
    // the estimate exact for bounded-degree expansions; the max runs over
    // the upper half of the window to damp the early-index transient.
    ConjecturalExpansion predicted(family);
    const std::size_t window_start = (depth + 1) / 2;
    long long degree_sum = 0;
    Rational best(0);
    for (std::size_t n = 1; n < depth; ++n) {
        degree_sum += predicted.quotient_degree(n);
        if (n < window_start) continue;
        const Rational ratio(mpz_class(static_cast<long>(predicted.quotient_degree(n + 1) - 1)),
                             mpz_class(static_cast<long>(degree_sum)));
        best = std::max(best, ratio);
    }
    return MeasureEstimate{family, depth, Rational(2) + best};
}

}  // namespace tmcf
