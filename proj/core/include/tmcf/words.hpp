#ifndef TMCF_WORDS_HPP
#define TMCF_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tmcf {

/// Finite word over the alphabet {+1, -1}, with a rendered as +1 and b as -1.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(std::vector<std::int8_t> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    /// 1-based letter access, matching the series indexing w_1 w_2 ...
    int letter(std::size_t n) const { return letters_.at(n - 1); }
    std::span<const std::int8_t> letters() const { return letters_; }

    /// "abba..." rendering with a = +1, b = -1.
    std::string to_ab_string() const;
    /// "+1,-1,-1,+1" rendering.
    std::string to_sign_string() const;

    friend bool operator==(const BinaryWord& x, const BinaryWord& y) = default;

private:
    friend BinaryWord word_step(const BinaryWord& w, int family);
    std::vector<std::int8_t> letters_;
};

/// One step of the block recursion: i copies of w followed by the
/// letter-swapped copy of those i copies. The length multiplies by 2i.
BinaryWord word_step(const BinaryWord& w, int family);

/// First `length` letters of the infinite word W(family), obtained by
/// iterating word_step from the single letter a until long enough.
BinaryWord word_prefix(int family, std::size_t length);

/// n-th letter (1-based) of W(family) by the digit rule: write n-1 in base
/// 2*family; the letter is +1 exactly when the number of digits >= family
/// is even. Equivalent to the block recursion (checked in the test suite).
int letter_at(int family, unsigned long long n);

}  // namespace tmcf

#endif  // TMCF_WORDS_HPP
