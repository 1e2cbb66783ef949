#include "tmcf/words.hpp"

#include <stdexcept>

namespace tmcf {

namespace {

void check_family(int family) {
    if (family < 1) throw std::invalid_argument("word family index must be >= 1");
}

}  // namespace

BinaryWord::BinaryWord(std::vector<std::int8_t> letters) : letters_(std::move(letters)) {
    for (std::int8_t v : letters_)
        if (v != 1 && v != -1) throw std::invalid_argument("word letters must be +1 or -1");
}

std::string BinaryWord::to_ab_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (std::int8_t v : letters_) s += (v == 1 ? 'a' : 'b');
    return s;
}

std::string BinaryWord::to_sign_string() const {
    std::string s;
    s.reserve(letters_.size() * 3);
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) s += ',';
        s += (letters_[k] == 1 ? "+1" : "-1");
    }
    return s;
}

BinaryWord word_step(const BinaryWord& w, int family) {
    check_family(family);
    if (w.empty()) throw std::invalid_argument("word_step requires a nonempty word");
    BinaryWord out;
    out.letters_.reserve(w.size() * 2 * static_cast<std::size_t>(family));
    for (int rep = 0; rep < family; ++rep)
        out.letters_.insert(out.letters_.end(), w.letters_.begin(), w.letters_.end());
    const std::size_t half = out.letters_.size();
    out.letters_.resize(2 * half);
    for (std::size_t k = 0; k < half; ++k)
        out.letters_[half + k] = static_cast<std::int8_t>(-out.letters_[k]);
    return out;
}

BinaryWord word_prefix(int family, std::size_t length) {
    check_family(family);
    if (length < 1) throw std::invalid_argument("word prefix length must be >= 1");
    BinaryWord w(std::vector<std::int8_t>{1});
    while (w.size() < length) w = word_step(w, family);
    std::vector<std::int8_t> letters(w.letters().begin(), w.letters().begin() + static_cast<long>(length));
    return BinaryWord(std::move(letters));
}

int letter_at(int family, unsigned long long n) {
    check_family(family);
    if (n < 1) throw std::invalid_argument("letter index must be >= 1");
    const unsigned long long base = 2ull * static_cast<unsigned long long>(family);
    int swaps = 0;
    for (unsigned long long m = n - 1; m != 0; m /= base)
        if (m % base >= static_cast<unsigned long long>(family)) ++swaps;
    return (swaps % 2 == 0) ? 1 : -1;
}

}  // namespace tmcf
