// tmcf: words W(i), their series theta_i in Q((T^-1)), continued fraction
// expansion, predicted expansion, and computed-versus-predicted verification.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tmcf/conjecture.hpp"
#include "tmcf/continued_fraction.hpp"
#include "tmcf/laurent_series.hpp"
#include "tmcf/verification.hpp"
#include "tmcf/words.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace tmcf;

struct CommandConfig {
    int family = 1;
    std::size_t depth_or_length = 1;
    std::optional<long long> precision;
    std::string format = "text";
    std::string output;
    std::string alphabet = "ab";
};

void emit(const CommandConfig& cfg, const std::string& payload) {
    if (cfg.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
    out << payload;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// "n: lambda = <rational>, b = <unitary polynomial>"
std::string quotient_line(std::size_t n, const Rational& lambda, const Polynomial& monic) {
    return std::to_string(n) + ": lambda = " + lambda.to_string() + ", b = " + monic.to_string();
}

std::string quotient_line(std::size_t n, const Polynomial& quotient) {
    const Rational lambda = quotient.leading_coeff();
    return quotient_line(n, lambda, lambda.inverse() * quotient);
}

long long effective_precision(const CommandConfig& cfg, std::size_t depth) {
    const long long required = required_precision(cfg.family, depth);
    if (!cfg.precision) return required;
    if (*cfg.precision < required)
        std::cerr << "warning: precision " << *cfg.precision << " is below required_precision "
                  << required << "; fewer than " << depth << " quotients will be certified\n";
    return *cfg.precision;
}

LaurentSeries theta_series(int family, long long precision) {
    if (precision < 1) throw CLI::ValidationError("--precision", "must be >= 1");
    if (precision > 10'000'000)
        throw CLI::ValidationError("--precision", "beyond the supported desk scale");
    const BinaryWord word = word_prefix(family, static_cast<std::size_t>(precision));
    return LaurentSeries::from_word(word.letters(), static_cast<int>(precision));
}

int run_word(const CommandConfig& cfg) {
    const BinaryWord w = word_prefix(cfg.family, cfg.depth_or_length);
    const std::string text = cfg.alphabet == "ab" ? w.to_ab_string() : w.to_sign_string();
    if (cfg.format == "text") {
        emit(cfg, text + "\n");
    } else {
        json j;
        j["i"] = cfg.family;
        j["length"] = cfg.depth_or_length;
        j["alphabet"] = cfg.alphabet;
        j["word"] = text;
        emit(cfg, dump(j));
    }
    return 0;
}

int run_series(const CommandConfig& cfg) {
    if (cfg.depth_or_length > 10'000'000)
        throw CLI::ValidationError("--length", "beyond the supported desk scale");
    const LaurentSeries s = theta_series(cfg.family, static_cast<long long>(cfg.depth_or_length));
    if (cfg.format == "text") {
        emit(cfg, s.to_string() + "\n");
    } else {
        json terms = json::array();
        for (int e = s.top(); e >= -s.precision(); --e) {
            if (s.coeff(e).is_zero()) continue;
            terms.push_back({{"exponent", e}, {"coefficient", s.coeff(e).to_string()}});
        }
        json j;
        j["i"] = cfg.family;
        j["precision"] = s.precision();
        j["top"] = s.top();
        j["terms"] = std::move(terms);
        emit(cfg, dump(j));
    }
    return 0;
}

int run_cf(const CommandConfig& cfg) {
    const long long precision = effective_precision(cfg, cfg.depth_or_length);
    const CertifiedExpansion expansion = cf_of_series(theta_series(cfg.family, precision));
    const std::size_t shown = std::min(cfg.depth_or_length, expansion.certified_count);
    if (shown < cfg.depth_or_length)
        std::cerr << "note: only " << shown << " of " << cfg.depth_or_length
                  << " quotients are certified at precision " << precision << "\n";
    if (cfg.format == "text") {
        std::string out;
        for (std::size_t n = 1; n <= shown; ++n)
            out += quotient_line(n, expansion.cf.quotients[n - 1]) + "\n";
        emit(cfg, out);
    } else {
        json j = json::array();
        j.push_back(expansion.cf.integer_part.to_string());
        for (std::size_t n = 1; n <= shown; ++n)
            j.push_back(expansion.cf.quotients[n - 1].to_string());
        emit(cfg, dump(j));
    }
    return 0;
}

int run_predict(const CommandConfig& cfg) {
    ConjecturalExpansion predicted(cfg.family);
    if (cfg.format == "text") {
        std::string out;
        for (std::size_t n = 1; n <= cfg.depth_or_length; ++n)
            out += quotient_line(n, predicted.leading_coeff(n), predicted.monic_factor(n)) + "\n";
        emit(cfg, out);
    } else {
        json j = json::array();
        j.push_back("0");
        for (std::size_t n = 1; n <= cfg.depth_or_length; ++n)
            j.push_back(predicted.partial_quotient(n).to_string());
        emit(cfg, dump(j));
    }
    return 0;
}

int run_verify(const CommandConfig& cfg) {
    const VerificationReport report =
        verify_expansion(cfg.family, cfg.depth_or_length,
                         cfg.precision ? std::optional<long long>(effective_precision(cfg, cfg.depth_or_length))
                                       : std::nullopt);
    std::size_t equal_count = 0;
    for (const auto& m : report.matches) equal_count += m.equal ? 1 : 0;

    if (cfg.format == "text") {
        std::ostringstream out;
        out << "i = " << report.family << ", depth requested = " << report.depth_requested
            << ", certified = " << report.depth_certified
            << ", precision = " << report.precision_used << "\n";
        for (const auto& m : report.matches) {
            if (m.equal)
                out << m.index << ": ok  a = " << m.computed.to_string() << "\n";
            else
                out << m.index << ": MISMATCH computed = " << m.computed.to_string()
                    << ", predicted = " << m.predicted.to_string() << "\n";
        }
        out << "matches: " << equal_count << "/" << report.matches.size() << "\n";
        if (report.first_mismatch) out << "first mismatch = " << *report.first_mismatch << "\n";
        out << "measure estimate = " << report.measure_estimate.to_string() << "\n";
        emit(cfg, out.str());
    } else {
        json matches = json::array();
        for (const auto& m : report.matches)
            matches.push_back({{"index", m.index},
                               {"computed", m.computed.to_string()},
                               {"predicted", m.predicted.to_string()},
                               {"equal", m.equal}});
        json j;
        j["i"] = report.family;
        j["depth_requested"] = report.depth_requested;
        j["depth_certified"] = report.depth_certified;
        j["precision_used"] = report.precision_used;
        j["matches"] = std::move(matches);
        if (report.first_mismatch) j["first_mismatch"] = *report.first_mismatch;
        j["measure_estimate"] = report.measure_estimate.to_string();
        j["measure_formula"] = std::string(kMeasureFormulaNote);
        j["elapsed_seconds"] = report.elapsed.count();
        emit(cfg, dump(j));
    }
    std::cerr << "elapsed: " << report.elapsed.count() << "s\n";
    return report.first_mismatch ? 1 : 0;
}

int run_measure(const CommandConfig& cfg) {
    const MeasureEstimate estimate = irrationality_estimate(cfg.family, cfg.depth_or_length);
    if (cfg.format == "text") {
        std::ostringstream out;
        out << "i = " << estimate.family << ", depth = " << estimate.depth << "\n"
            << "estimate = " << estimate.value.to_string() << "\n"
            << "formula: " << kMeasureFormulaNote << "\n";
        emit(cfg, out.str());
    } else {
        json j;
        j["i"] = estimate.family;
        j["depth"] = estimate.depth;
        j["estimate"] = estimate.value.to_string();
        j["formula"] = std::string(kMeasureFormulaNote);
        emit(cfg, dump(j));
    }
    return 0;
}

int run_ppoly(const CommandConfig& cfg) {
    PPolynomialTable table(cfg.family);
    const int m = static_cast<int>(cfg.depth_or_length);
    const Polynomial& p = table.at(m);
    if (cfg.format == "text") {
        std::ostringstream out;
        out << "i = " << cfg.family << ", m = " << m << "\n"
            << "degree = " << p.degree() << "\n"
            << "P = " << p.to_string() << "\n"
            << "P(1) = " << table.value_at_one(m).to_string() << "\n"
            << "P'(1) = " << table.derivative_at_one(m).to_string() << "\n";
        emit(cfg, out.str());
    } else {
        json j;
        j["i"] = cfg.family;
        j["m"] = m;
        j["degree"] = p.degree();
        j["polynomial"] = p.to_string();
        j["value_at_one"] = table.value_at_one(m).to_string();
        j["derivative_at_one"] = table.derivative_at_one(m).to_string();
        emit(cfg, dump(j));
    }
    return 0;
}

int run_lambda(const CommandConfig& cfg) {
    ConjecturalExpansion predicted(cfg.family);
    if (cfg.format == "text") {
        std::string out;
        for (std::size_t n = 1; n <= cfg.depth_or_length; ++n)
            out += std::to_string(n) + ": " + predicted.leading_coeff(n).to_string() + "\n";
        emit(cfg, out);
    } else {
        json values = json::array();
        for (std::size_t n = 1; n <= cfg.depth_or_length; ++n)
            values.push_back(predicted.leading_coeff(n).to_string());
        json j;
        j["i"] = cfg.family;
        j["count"] = cfg.depth_or_length;
        j["values"] = std::move(values);
        emit(cfg, dump(j));
    }
    return 0;
}

void add_common(CLI::App* cmd, CommandConfig& cfg) {
    cmd->add_option("--i", cfg.family, "word family index (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", cfg.output, "write the payload to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continued fractions of the Thue-Morse word family in Q((T^-1))"};
    app.require_subcommand(1);

    CommandConfig cfg;

    CLI::App* word = app.add_subcommand("word", "prefix of the infinite word W(i)");
    add_common(word, cfg);
    word->add_option("--length", cfg.depth_or_length, "number of letters")
        ->required()
        ->check(CLI::PositiveNumber);
    word->add_option("--alphabet", cfg.alphabet, "render over {a,b} or {+1,-1}")
        ->check(CLI::IsMember({"ab", "pm"}))
        ->capture_default_str();

    CLI::App* series = app.add_subcommand("series", "truncation of theta_i");
    add_common(series, cfg);
    series->add_option("--length", cfg.depth_or_length, "number of series terms")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* cf = app.add_subcommand("cf", "certified continued fraction of theta_i");
    add_common(cf, cfg);
    cf->add_option("--depth", cfg.depth_or_length, "number of partial quotients")
        ->required()
        ->check(CLI::PositiveNumber);
    cf->add_option("--precision", cfg.precision, "series precision override");

    CLI::App* predict = app.add_subcommand("predict", "predicted continued fraction of theta_i");
    add_common(predict, cfg);
    predict->add_option("--depth", cfg.depth_or_length, "number of partial quotients")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "compare computed and predicted expansions");
    add_common(verify, cfg);
    verify->add_option("--depth", cfg.depth_or_length, "number of quotients to compare")
        ->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--precision", cfg.precision, "series precision override");

    CLI::App* measure = app.add_subcommand("measure", "irrationality measure estimate");
    add_common(measure, cfg);
    measure->add_option("--depth", cfg.depth_or_length, "depth of the degree window (>= 3)")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* ppoly = app.add_subcommand("ppoly", "auxiliary polynomial P_{i,m} (i >= 2)");
    add_common(ppoly, cfg);
    ppoly->add_option("--m", cfg.depth_or_length, "table index m >= 1")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* lambda = app.add_subcommand("lambda", "leading coefficients lambda_{i,n}");
    add_common(lambda, cfg);
    lambda->add_option("--depth", cfg.depth_or_length, "table size")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (word->parsed()) return run_word(cfg);
        if (series->parsed()) return run_series(cfg);
        if (cf->parsed()) return run_cf(cfg);
        if (predict->parsed()) return run_predict(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (measure->parsed()) return run_measure(cfg);
        if (ppoly->parsed()) return run_ppoly(cfg);
        if (lambda->parsed()) return run_lambda(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
