#include "series2.hpp"

#include "errors.hpp"

namespace fpg {

namespace {
int checked_degree(int max_degree) {
  if (max_degree < 1)
    throw UsageError("two-channel series need max_degree >= 1");
  return max_degree;
}
}  // namespace

Series2::Series2(int max_degree)
    : max_degree_(checked_degree(max_degree)),
      c1_(max_degree),
      c2_(max_degree - 1) {}

Series2::Series2(Series c1, Series c2)
    : max_degree_(checked_degree(c1.max_degree())),
      c1_(std::move(c1)),
      c2_(std::move(c2)) {
  if (c2_.max_degree() != max_degree_ - 1)
    throw UsageError("channel-2 truncation degree must be channel-1 minus one");
}

void require_same_degree(const Series2& a, const Series2& b) {
  if (a.max_degree() != b.max_degree())
    throw UsageError("mixed truncation degrees (" +
                     std::to_string(a.max_degree()) + " vs " +
                     std::to_string(b.max_degree()) + ")");
}

Series2 add(const Series2& a, const Series2& b) {
  require_same_degree(a, b);
  return Series2(add(a.c1(), b.c1()), add(a.c2(), b.c2()));
}

Series2 sub(const Series2& a, const Series2& b) {
  require_same_degree(a, b);
  return Series2(sub(a.c1(), b.c1()), sub(a.c2(), b.c2()));
}

Series2 scale(const Series2& a, const Rational& r) {
  return Series2(scale(a.c1(), r), scale(a.c2(), r));
}

GroupElement::GroupElement(Series2 value) : value_(std::move(value)) {
  if (value_.c1().at(Word()) != 1)
    throw UsageError("group element needs unit constant term in channel 1");
}

GroupElement GroupElement::identity(int max_degree) {
  Series2 v(max_degree);
  v.c1().set(Word(), Rational(1));
  return GroupElement(std::move(v));
}

LieElement::LieElement(Series2 value) : value_(std::move(value)) {
  if (!value_.c1().is_proper())
    throw UsageError("Lie element needs proper channel 1 (no empty-word e1 term)");
}

LieElement LieElement::basis(const Word& w, int channel, int max_degree) {
  if (channel != 1 && channel != 2) throw UsageError("channel must be 1 or 2");
  if (channel == 1 && w.empty())
    throw UsageError("empty-word e1 is not a Lie algebra element");
  Series2 v(max_degree);
  (channel == 1 ? v.c1() : v.c2()).set(w, Rational(1));
  return LieElement(std::move(v));
}

LieElement add(const LieElement& a, const LieElement& b) {
  return LieElement(add(a.value(), b.value()));
}

LieElement sub(const LieElement& a, const LieElement& b) {
  return LieElement(sub(a.value(), b.value()));
}

LieElement scale(const LieElement& a, const Rational& r) {
  return LieElement(scale(a.value(), r));
}

GroupElement group_from_lie(const LieElement& u) {
  Series2 v = u.value();
  v.c1().set(Word(), Rational(1));
  return GroupElement(std::move(v));
}

}  // namespace fpg
