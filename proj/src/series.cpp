#include "series.hpp"

#include "errors.hpp"

namespace fpg {

Series::Series(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 0) throw UsageError("negative truncation degree");
}

Series Series::constant(const Rational& r, int max_degree) {
  Series s(max_degree);
  s.set(Word(), r);
  return s;
}

Series Series::monomial(const Word& w, const Rational& r, int max_degree) {
  Series s(max_degree);
  s.set(w, r);
  return s;
}

Rational Series::at(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::set(const Word& w, const Rational& r) {
  if (w.wdeg() > max_degree_)
    throw UsageError("word '" + w.to_string() + "' exceeds truncation degree " +
                     std::to_string(max_degree_));
  if (r == 0)
    terms_.erase(w);
  else
    terms_[w] = r;
}

void Series::add_term(const Word& w, const Rational& r) {
  if (w.wdeg() > max_degree_ || r == 0) return;
  auto [it, inserted] = terms_.emplace(w, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::truncated_to(int degree) const {
  if (degree > max_degree_)
    throw UsageError("truncate_to target exceeds current degree");
  Series s(degree);
  for (const auto& [w, r] : terms_)
    if (w.wdeg() <= degree) s.terms_[w] = r;
  return s;
}

Series Series::extended_to(int degree) const {
  if (degree < max_degree_)
    throw UsageError("extended_to target below current degree");
  Series s(degree);
  s.terms_ = terms_;
  return s;
}

void require_same_degree(const Series& a, const Series& b) {
  if (a.max_degree() != b.max_degree())
    throw UsageError("mixed truncation degrees (" +
                     std::to_string(a.max_degree()) + " vs " +
                     std::to_string(b.max_degree()) + ")");
}

Series add(const Series& a, const Series& b) {
  require_same_degree(a, b);
  Series s = a;
  for (const auto& [w, r] : b.terms()) s.add_term(w, r);
  return s;
}

Series sub(const Series& a, const Series& b) {
  require_same_degree(a, b);
  Series s = a;
  for (const auto& [w, r] : b.terms()) s.add_term(w, -r);
  return s;
}

Series scale(const Series& a, const Rational& r) {
  Series s(a.max_degree());
  if (r == 0) return s;
  for (const auto& [w, c] : a.terms()) s.set(w, c * r);
  return s;
}

namespace {

// Recursion on first letters with a left-to-right prefix accumulator:
// (au') sh (bv') = a (u' sh bv') + b (au' sh v').
void shuffle_rec(Series::TermMap& out, const Word& prefix, const Word& u,
                 const Word& v, const Rational& coeff) {
  if (u.empty() || v.empty()) {
    const Word& rest = u.empty() ? v : u;
    auto [it, inserted] = out.emplace(Word::concat(prefix, rest), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) out.erase(it);
    }
    return;
  }
  shuffle_rec(out, prefix.appended(u.head()), u.tail(), v, coeff);
  shuffle_rec(out, prefix.appended(v.head()), u, v.tail(), coeff);
}

}  // namespace

void shuffle_words_into(Series::TermMap& out, const Word& u, const Word& v,
                        const Rational& coeff) {
  shuffle_rec(out, Word(), u, v, coeff);
}

namespace {

// Word-pair products recur constantly in the property suites, so small ones
// are cached per thread (shuffle is commutative; keys are ordered pairs).
// Results are stored untruncated, which is fine below the size cap.
constexpr int kShuffleCacheWdegCap = 12;

const Series::TermMap& cached_word_shuffle(const Word& u, const Word& v) {
  thread_local std::map<std::pair<Word, Word>, Series::TermMap> cache;
  auto key = (v < u) ? std::make_pair(v, u) : std::make_pair(u, v);
  auto it = cache.find(key);
  if (it == cache.end()) {
    Series::TermMap product;
    shuffle_words_into(product, key.first, key.second, Rational(1));
    it = cache.emplace(std::move(key), std::move(product)).first;
  }
  return it->second;
}

}  // namespace

Series shuffle(const Series& a, const Series& b) {
  require_same_degree(a, b);
  Series result(a.max_degree());
  for (const auto& [u, cu] : a.terms()) {
    int budget = a.max_degree() - u.wdeg();
    for (const auto& [v, cv] : b.terms()) {
      if (v.wdeg() > budget) continue;  // wdeg is additive under shuffle
      const Rational factor = cu * cv;
      if (u.wdeg() + v.wdeg() <= kShuffleCacheWdegCap) {
        for (const auto& [w, r] : cached_word_shuffle(u, v))
          result.add_term(w, r * factor);
      } else {
        Series::TermMap acc;
        shuffle_words_into(acc, u, v, factor);
        for (const auto& [w, r] : acc) result.add_term(w, r);
      }
    }
  }
  return result;
}

WordTensor unshuffle(const Word& w) {
  WordTensor t;
  const std::uint32_t full = (w.size() >= 32) ? ~0u : (1u << w.size()) - 1u;
  for (std::uint32_t mask = 0;; ++mask) {
    auto key = std::make_pair(w.subword(mask), w.subword(~mask & full));
    auto [it, inserted] = t.emplace(std::move(key), Rational(1));
    if (!inserted) it->second += 1;
    if (mask == full) break;
  }
  return t;
}

Series shuffle_inverse(const Series& c) {
  Rational c0 = c.at(Word());
  if (c0 == 0)
    throw UsageError("series with zero constant term is not shuffle-invertible");
  const int degree = c.max_degree();
  Rational inv0 = 1 / c0;
  // u = -c'/c(1) is proper, so its k-th shuffle power has wdeg >= k and the
  // geometric sum is finite under truncation.
  Series u = scale(c, -inv0);
  u.set(Word(), Rational(0));
  Series acc = Series::constant(Rational(1), degree);
  Series power = Series::constant(Rational(1), degree);
  for (int k = 1; k <= degree && !power.is_zero(); ++k) {
    power = shuffle(power, u);
    acc = add(acc, power);
  }
  return scale(acc, inv0);
}

}  // namespace fpg
