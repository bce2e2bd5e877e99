#include "compose.hpp"

#include "errors.hpp"

namespace fpg {

namespace {

Series prepend_letter(Letter l, const Series& s, int degree) {
  Series out(degree);
  for (const auto& [w, r] : s.terms()) out.add_term(w.prepended(l), r);
  return out;
}

// Word-level recursion with per-invocation memoization on suffixes; the
// recursion revisits suffixes exponentially otherwise.
class WordComposer {
 public:
  // Plain composition: x1 branch uses x0(d sh -).
  WordComposer(const Series& d, int degree)
      : mixed_(false), x1_series_(d), x0_series_(d), degree_(degree) {}
  // Mixed composition: x1 branch uses x1(d1 sh -) + x0(d2 sh -).
  WordComposer(const Series2& d, int degree)
      : mixed_(true),
        x1_series_(d.c1()),
        x0_series_(d.c2().extended_to(degree)),
        degree_(degree) {}

  Series apply(const Series& c) {
    Series out(degree_);
    for (const auto& [w, r] : c.terms())
      out = add(out, scale(word_image(w), r));
    return out;
  }

 private:
  const Series& word_image(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Series value(degree_);
    if (w.empty()) {
      value.set(Word(), Rational(1));
    } else {
      const Series& rest = word_image(w.tail());
      if (w.head() == Letter::x0) {
        value = prepend_letter(Letter::x0, rest, degree_);
      } else if (mixed_) {
        value = prepend_letter(Letter::x1, shuffle(x1_series_, rest), degree_);
        value = add(value,
                    prepend_letter(Letter::x0, shuffle(x0_series_, rest), degree_));
      } else {
        value = prepend_letter(Letter::x0, shuffle(x0_series_, rest), degree_);
      }
    }
    return memo_.emplace(w, std::move(value)).first->second;
  }

  bool mixed_;
  Series x1_series_;
  Series x0_series_;
  int degree_;
  std::map<Word, Series> memo_;
};

}  // namespace

Series compose(const Series& c, const Series& d) {
  require_same_degree(c, d);
  WordComposer composer(d, c.max_degree());
  return composer.apply(c);
}

Series mixed_compose(const Series& c, const Series2& d) {
  if (c.max_degree() != d.max_degree())
    throw UsageError("mixed truncation degrees (" +
                     std::to_string(c.max_degree()) + " vs " +
                     std::to_string(d.max_degree()) + ")");
  WordComposer composer(d, c.max_degree());
  return composer.apply(c);
}

Series2 triangle(const Series2& c, const Series2& d) {
  require_same_degree(c, d);
  WordComposer composer(d, c.max_degree());
  Series top = composer.apply(c.c1());
  Series bottom = composer.apply(c.c2().extended_to(c.max_degree()))
                      .truncated_to(c.max_degree() - 1);
  return Series2(std::move(top), std::move(bottom));
}

GroupElement triangle(const GroupElement& c, const GroupElement& d) {
  return GroupElement(triangle(c.value(), d.value()));
}

}  // namespace fpg
