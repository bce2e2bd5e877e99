#pragma once

#include "series.hpp"

namespace fpg {

/// Two-channel series c1*e1 + c2*e2. Channel 1 is the multiplicative
/// channel (generator degree = wdeg), channel 2 the additive channel
/// (generator degree = wdeg + 1), so under one truncation bound D the
/// channel-1 part holds words of wdeg <= D and the channel-2 part words of
/// wdeg <= D - 1. The channel shift is what makes the triangle-action
/// solver unitriangular, so it is enforced, not advisory.
class Series2 {
 public:
  explicit Series2(int max_degree);
  Series2(Series c1, Series c2);  // degrees must be D and D-1

  static Series2 zero(int max_degree) { return Series2(max_degree); }

  int max_degree() const { return max_degree_; }
  const Series& c1() const { return c1_; }
  const Series& c2() const { return c2_; }
  Series& c1() { return c1_; }
  Series& c2() { return c2_; }

  bool operator==(const Series2& other) const = default;

 private:
  int max_degree_;
  Series c1_;
  Series c2_;
};

Series2 add(const Series2& a, const Series2& b);
Series2 sub(const Series2& a, const Series2& b);
Series2 scale(const Series2& a, const Rational& r);

void require_same_degree(const Series2& a, const Series2& b);

/// Element of the group G: channel 1 has unit constant term. Construction
/// validates, so holding a GroupElement is holding the invariant.
class GroupElement {
 public:
  explicit GroupElement(Series2 value);

  static GroupElement identity(int max_degree);

  const Series2& value() const { return value_; }
  const Series& c1() const { return value_.c1(); }
  const Series& c2() const { return value_.c2(); }
  int max_degree() const { return value_.max_degree(); }

  bool operator==(const GroupElement& other) const = default;

 private:
  Series2 value_;
};

/// Element of the Lie algebra g: channel 1 proper (the quotient by the
/// empty-word e1 line); channel 2 unrestricted.
class LieElement {
 public:
  explicit LieElement(Series2 value);

  static LieElement zero(int max_degree) {
    return LieElement(Series2::zero(max_degree));
  }
  /// Basis element (word)e_channel; rejects the empty word in channel 1.
  static LieElement basis(const Word& w, int channel, int max_degree);

  const Series2& value() const { return value_; }
  const Series& c1() const { return value_.c1(); }
  const Series& c2() const { return value_.c2(); }
  int max_degree() const { return value_.max_degree(); }
  bool is_zero() const { return c1().is_zero() && c2().is_zero(); }

  bool operator==(const LieElement& other) const = default;

 private:
  Series2 value_;
};

LieElement add(const LieElement& a, const LieElement& b);
LieElement sub(const LieElement& a, const LieElement& b);
LieElement scale(const LieElement& a, const Rational& r);

inline LieElement operator+(const LieElement& a, const LieElement& b) { return add(a, b); }
inline LieElement operator-(const LieElement& a, const LieElement& b) { return sub(a, b); }

/// The group element e + u (always valid: u has proper channel 1).
GroupElement group_from_lie(const LieElement& u);

}  // namespace fpg
