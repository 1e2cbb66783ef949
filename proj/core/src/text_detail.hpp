#ifndef TMCF_TEXT_DETAIL_HPP
#define TMCF_TEXT_DETAIL_HPP

#include <string>

#include "tmcf/rational.hpp"

namespace tmcf::detail {

// Appends one term of a (Laurent) polynomial in the shared text format:
// coefficient magnitude, then "*T^e" with "T" for e = 1 and nothing for
// e = 0; unit coefficients drop the "1*". `first` controls the sign style
// ("-x" versus " - x").
inline void append_term(std::string& out, const Rational& c, int exponent, bool first) {
    const bool negative = c.sign() < 0;
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -c : c;
    const bool unit = mag.is_one();
    if (exponent == 0) {
        out += mag.to_string();
        return;
    }
    if (!unit) {
        out += mag.to_string();
        out += '*';
    }
    out += 'T';
    if (exponent != 1) {
        out += '^';
        out += std::to_string(exponent);
    }
}

}  // namespace tmcf::detail

#endif  // TMCF_TEXT_DETAIL_HPP
