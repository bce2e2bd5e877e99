#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace fpg {

/// The two-letter alphabet. Letter values double as term characters in the
/// textual encoding: '0' for x0, '1' for x1.
enum class Letter : std::uint8_t { x0 = 0, x1 = 1 };

/// A word over {x0, x1}, empty word included. Letters are packed into an
/// integer, letter k of the word in bit k, so words stay cheap value types.
/// Supports lengths up to 31, far beyond any truncation degree in use.
class Word {
 public:
  Word() = default;

  static Word from_string(std::string_view text);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  Letter at(std::size_t i) const {
    return static_cast<Letter>((bits_ >> i) & 1u);
  }

  std::size_t count_x0() const;
  std::size_t count_x1() const;

  /// Weighted degree: x0 counts 2, x1 counts 1.
  int wdeg() const { return static_cast<int>(2 * count_x0() + count_x1()); }

  Word prepended(Letter l) const {
    check_capacity(size_ + 1);
    Word w;
    w.bits_ = (bits_ << 1) | static_cast<std::uint32_t>(l);
    w.size_ = size_ + 1;
    return w;
  }

  Word appended(Letter l) const {
    check_capacity(size_ + 1);
    Word w;
    w.bits_ = bits_ | (static_cast<std::uint32_t>(l) << size_);
    w.size_ = size_ + 1;
    return w;
  }

  /// Drops the first letter; word must be non-empty.
  Word tail() const {
    if (empty()) throw InternalError("tail of empty word");
    Word w;
    w.bits_ = bits_ >> 1;
    w.size_ = size_ - 1;
    return w;
  }

  Letter head() const {
    if (empty()) throw InternalError("head of empty word");
    return at(0);
  }

  /// First `n` letters.
  Word prefix(std::size_t n) const {
    if (n > size_) throw InternalError("prefix longer than word");
    Word w;
    w.bits_ = bits_ & ((n >= 32) ? ~0u : ((1u << n) - 1u));
    w.size_ = static_cast<std::uint8_t>(n);
    return w;
  }

  /// Letters from position `n` to the end.
  Word suffix(std::size_t n) const {
    if (n > size_) throw InternalError("suffix start beyond word");
    Word w;
    w.bits_ = bits_ >> n;
    w.size_ = static_cast<std::uint8_t>(size_ - n);
    return w;
  }

  static Word concat(const Word& a, const Word& b) {
    check_capacity(a.size_ + b.size_);
    Word w;
    w.bits_ = a.bits_ | (b.bits_ << a.size_);
    w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
    return w;
  }

  /// Letters at the set bits of `mask`, in order (for coproduct splits).
  Word subword(std::uint32_t mask) const;

  /// Length-lexicographic order with x0 < x1; the canonical term order.
  std::strong_ordering operator<=>(const Word& other) const {
    if (size_ != other.size_) return size_ <=> other.size_;
    for (std::size_t i = 0; i < size_; ++i) {
      auto a = (bits_ >> i) & 1u, b = (other.bits_ >> i) & 1u;
      if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const Word& other) const {
    return size_ == other.size_ && bits_ == other.bits_;
  }

  /// Textual form over '0','1'; empty string for the empty word.
  std::string to_string() const;

  /// All words of weighted degree <= bound, in canonical order.
  static std::vector<Word> all_up_to_wdeg(int bound);

 private:
  static void check_capacity(std::size_t n) {
    if (n > 31) throw InternalError("word length limit exceeded");
  }

  std::uint32_t bits_ = 0;
  std::uint8_t size_ = 0;
};

inline std::size_t Word::count_x1() const {
  return static_cast<std::size_t>(__builtin_popcount(bits_));
}

inline std::size_t Word::count_x0() const { return size_ - count_x1(); }

}  // namespace fpg
