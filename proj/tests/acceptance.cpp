// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
//
// Every expected value is pinned here; the runs use exact arithmetic, so a
// criterion either matches exactly or fails loudly.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "tmcf/conjecture.hpp"
#include "tmcf/continued_fraction.hpp"
#include "tmcf/laurent_series.hpp"
#include "tmcf/verification.hpp"
#include "tmcf/words.hpp"

using namespace tmcf;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

template <typename T>
void require_eq(const T& got, const T& expected, const std::string& what) {
    if (!(got == expected)) {
        std::ostringstream msg;
        msg << what << ": got " << got << ", expected " << expected;
        throw Failure(msg.str());
    }
}

// --- criteria ---------------------------------------------------------

void golden_word_prefixes() {
    const auto start = std::chrono::steady_clock::now();
    require_eq(word_prefix(1, 19).to_ab_string(), std::string("abbabaabbaababbabaa"),
               "W(1) 19-letter prefix");
    require_eq(word_prefix(2, 36).to_ab_string(),
               std::string("aabbaabbbbaabbaaaabbaabbbbaabbaabbaa"), "W(2) 36-letter prefix");
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    require(elapsed.count() < 1.0, "word prefixes took longer than 1 s");
}

VerificationReport expect_full_match(int family, std::size_t depth, long long precision) {
    const VerificationReport r = verify_expansion(family, depth);
    require_eq(r.precision_used, precision, "precision from required_precision");
    require(r.depth_certified >= depth, "certified fewer quotients than requested");
    require_eq(r.matches.size(), depth, "compared quotient count");
    for (const auto& m : r.matches)
        require(m.equal, "mismatch at index " + std::to_string(m.index) + ": computed " +
                             m.computed.to_string() + " vs predicted " + m.predicted.to_string());
    return r;
}

void theta1_identity_depth_200() {
    const VerificationReport r = expect_full_match(1, 200, 402);
    // every quotient is lambda_n * (T - (-1)^n)
    ConjecturalExpansion c(1);
    for (const auto& m : r.matches) {
        const Polynomial b = m.index % 2 ? Polynomial::from_string("T + 1")
                                         : Polynomial::from_string("T - 1");
        require(m.computed == c.leading_coeff(m.index) * b,
                "quotient " + std::to_string(m.index) + " is not lambda_n (T - (-1)^n)");
    }
}

void theta2_depth_24() {
    const VerificationReport r = expect_full_match(2, 24, 834);
    require_eq(r.matches[8].computed.degree(), 65, "degree of a_9 (= 1 + 4^3)");
    require_eq(r.matches[16].computed.degree(), 257, "degree of a_17 (= 1 + 4^4)");
}

void theta3_depth_12() {
    const VerificationReport r = expect_full_match(3, 12, 1118);
    require_eq(r.matches[4].computed.degree(), 73, "degree of a_5 (= 1 + 2*6^2)");
    require_eq(r.matches[8].computed.degree(), 433, "degree of a_9 (= 1 + 2*6^3)");
}

void lambda_golden_values() {
    const std::vector<Rational> expected{Rational(1), Rational(1, 2), Rational(-2),
                                         Rational(-1, 2), Rational(-2)};
    for (int family = 1; family <= 5; ++family) {
        ConjecturalExpansion c(family);
        for (std::size_t n = 1; n <= 5; ++n)
            require(c.leading_coeff(n) == expected[n - 1],
                    "lambda(" + std::to_string(family) + "," + std::to_string(n) + ")");
    }
}

void theorem_form_equivalence() {
    ConjecturalExpansion c(1);
    for (std::size_t k = 1; k <= 64; ++k) {
        Rational sum(0);
        for (std::size_t j = 0; j < k; ++j) sum += c.leading_coeff(2 * j + 1);
        require(c.leading_coeff(4 * k - 2) == (Rational(2) * sum).inverse(),
                "lambda_{4k-2} closed form at k=" + std::to_string(k));
        const Rational lam = c.leading_coeff(4 * k - 2);
        require(c.leading_coeff(4 * k - 1) == -(lam * lam).inverse() * c.leading_coeff(2 * k),
                "lambda_{4k-1} closed form at k=" + std::to_string(k));
    }
}

void p_polynomial_identities() {
    for (int i : {2, 3, 4}) {
        PPolynomialTable table(i);  // construction checks the divisions are exact
        const Rational ri(i);
        long long deg = 1;
        for (int m = 1; m <= 3; ++m) {
            const Polynomial& p = table.at(m);
            for (const auto& coeff : p.coefficients())
                require(coeff.is_integer(), "P not in Z[T] at i=" + std::to_string(i));
            deg *= 2 * i;
            require_eq<long long>(p.degree(), deg * (i - 1), "deg P_{i,m}");
        }
        require(table.value_at_one(1) == ri, "P_{i,1}(1) = i");
        require(table.derivative_at_one(1) == ri * ri * (ri - Rational(1)),
                "P'_{i,1}(1) = i^2 (i-1)");
        require(table.derivative_at_one(2) ==
                    Rational(8, 3) * ri * ri * ri * ri * (ri - Rational(1)) *
                        (Rational(2) * ri - Rational(1)),
                "P'_{i,2}(1) = (8/3) i^4 (i-1)(2i-1)");
        for (int m = 1; m <= 2; ++m)
            require(table.value_at_one(m + 1) ==
                        table.value_at_one(m) + Rational(4) * table.derivative_at_one(m),
                    "value recurrence at m=" + std::to_string(m));
    }
}

void certification_soundness() {
    for (const auto& [family, depth] : std::vector<std::pair<int, std::size_t>>{{1, 200}, {2, 24}}) {
        const VerificationReport base = verify_expansion(family, depth);
        const VerificationReport doubled =
            verify_expansion(family, depth, 2 * required_precision(family, depth));
        require(doubled.depth_certified >= base.depth_certified,
                "doubled precision certified fewer quotients");
        require_eq(base.matches.size(), doubled.matches.size(), "compared counts");
        for (std::size_t n = 0; n < depth; ++n)
            require(base.matches[n].computed == doubled.matches[n].computed &&
                        base.matches[n].equal && doubled.matches[n].equal,
                    "certified prefix changed at index " + std::to_string(n + 1));
    }
}

void measure_estimates() {
    for (std::size_t depth : {3, 10, 24, 100, 200})
        require(irrationality_estimate(1, depth).value == Rational(2),
                "measure for family 1 at depth " + std::to_string(depth));
    const auto within = [](const Rational& got, long target) {
        const Rational t(target);
        const Rational err = got > t ? got - t : t - got;
        return err * Rational(20) <= t;  // 5%
    };
    const Rational m2 = irrationality_estimate(2, 24).value;
    require(within(m2, 4), "measure for family 2 at depth 24: got " + m2.to_string());
    const Rational m3 = irrationality_estimate(3, 12).value;
    require(within(m3, 6), "measure for family 3 at depth 12: got " + m3.to_string());
}

void oracle_round_trips() {
    std::mt19937_64 rng(424242);
    for (int round = 0; round < 500; ++round) {
        const Polynomial num = testgen::random_polynomial(rng, 12);
        const Polynomial den = testgen::random_polynomial(rng, 12);
        const ContinuedFraction cf = cf_of_rational(num, den, 2000);
        const auto pairs = convergents(cf, cf.quotients.size());
        require(pairs.back().p * den == pairs.back().q * num,
                "fold-back mismatch at round " + std::to_string(round));
    }
    for (int i = 1; i <= 4; ++i) {
        std::size_t limit = 1;
        for (int j = 0; j < 4; ++j) limit *= 2 * static_cast<std::size_t>(i);
        const BinaryWord w = word_prefix(i, limit);
        for (std::size_t n = 1; n <= limit; ++n)
            require(letter_at(i, n) == w.letter(n),
                    "letter rule disagrees at i=" + std::to_string(i) + ", n=" + std::to_string(n));
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<void()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "golden word prefixes (runtime < 1 s)", golden_word_prefixes},
        {2, "theta_1: 200/200 quotients match at N = 402", theta1_identity_depth_200},
        {3, "theta_2: 24/24 quotients match, degrees 65 and 257 reached", theta2_depth_24},
        {4, "theta_3: 12/12 quotients match, degrees 73 and 433 reached", theta3_depth_12},
        {5, "lambda golden values (1, 1/2, -2, -1/2, -2) for i = 1..5", lambda_golden_values},
        {6, "family-1 recursion equals the closed statement form, k <= 64", theorem_form_equivalence},
        {7, "P polynomial identities for i = 2..4, m <= 3", p_polynomial_identities},
        {8, "doubled precision reproduces the certified prefixes", certification_soundness},
        {9, "measure estimates: 2 exactly, 4 and 6 within 5%", measure_estimates},
        {10, "500 rational fold-backs and the letter rule", oracle_round_trips},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.run();
        } catch (const std::exception& e) {
            error = e.what();
            all_ok = false;
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::cout << (error.empty() ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  "
                  << c.name << "  (" << std::fixed << std::setprecision(2) << elapsed.count()
                  << " s)";
        if (!error.empty()) std::cout << "\n      " << error;
        std::cout << "\n";
    }
    return all_ok ? 0 : 1;
}
