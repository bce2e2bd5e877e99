#pragma once

#include <map>
#include <utility>

#include "rational.hpp"
#include "word.hpp"

namespace fpg {

/// A noncommutative polynomial over {x0,x1} with exact rational
/// coefficients, truncated by weighted degree: every stored word satisfies
/// wdeg <= max_degree, and zero coefficients are never stored. The term map
/// iterates in canonical (length-lex, x0 < x1) order, so output is
/// deterministic.
class Series {
 public:
  using TermMap = std::map<Word, Rational>;

  explicit Series(int max_degree);

  /// Unit series r*empty-word at the given degree.
  static Series constant(const Rational& r, int max_degree);
  /// Singleton r*w.
  static Series monomial(const Word& w, const Rational& r, int max_degree);

  int max_degree() const { return max_degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient lookup; absent words read as zero.
  Rational at(const Word& w) const;
  /// True when the empty-word coefficient vanishes ("proper series").
  bool is_proper() const { return at(Word()) == 0; }

  /// Replaces the coefficient of w (erases on zero). Rejects wdeg(w) beyond
  /// the truncation degree.
  void set(const Word& w, const Rational& r);
  /// Accumulates into the coefficient of w; silently drops words beyond the
  /// truncation degree (every operation here is a truncated image).
  void add_term(const Word& w, const Rational& r);

  Series truncated_to(int degree) const;  // degree <= max_degree
  /// Same terms under a higher truncation bound (adds no information).
  Series extended_to(int degree) const;   // degree >= max_degree

  bool operator==(const Series& other) const = default;

 private:
  int max_degree_;
  TermMap terms_;
};

/// Linear-space operations; binary ones require matching truncation degrees.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& r);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Rational& r, const Series& a) { return scale(a, r); }

/// Shuffle product, the convolution dual of the unshuffle coproduct.
/// Requires matching truncation degrees.
Series shuffle(const Series& a, const Series& b);

/// Shuffle of two single words with multiplicity `coeff`, accumulated into
/// `out` (no truncation; wdeg is additive so the caller filters pairs).
void shuffle_words_into(Series::TermMap& out, const Word& u, const Word& v,
                        const Rational& coeff);

/// A formal sum of word-tensor pairs; the target of the unshuffle coproduct.
using WordTensor = std::map<std::pair<Word, Word>, Rational>;

/// Unshuffle coproduct of a word: the sum over all position subsets S of
/// (subword at S) x (subword at complement).
WordTensor unshuffle(const Word& w);

/// Shuffle-inverse of a series with nonzero empty-word coefficient:
/// c(1)^{-1} * sum_k (-c'/c(1))^{shuffle k}, finite under truncation.
/// Throws UsageError when c(1) = 0.
Series shuffle_inverse(const Series& c);

void require_same_degree(const Series& a, const Series& b);

}  // namespace fpg
