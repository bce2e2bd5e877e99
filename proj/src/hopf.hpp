#pragma once

#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "series2.hpp"

namespace fpg {

/// Coordinate-function generator (word)eps_channel. The pair (empty word,
/// channel 1) is not a generator: it is identified with the algebra unit, so
/// constructing it is rejected and formulas producing it rewrite to the unit.
struct Generator {
  Word word;
  int channel = 1;

  Generator() = default;
  Generator(Word w, int c);

  /// wdeg of the word, plus one for the additive channel.
  int degree() const { return word.wdeg() + (channel == 2 ? 1 : 0); }

  std::string to_string() const;
  static Generator from_string(std::string_view token);

  auto sort_key() const { return std::make_tuple(degree(), channel, word); }
  bool operator==(const Generator& other) const {
    return channel == other.channel && word == other.word;
  }
  bool operator<(const Generator& other) const {
    return sort_key() < other.sort_key();
  }
};

/// Commutative monomial: a sorted multiset of generators (empty = unit).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Generator g) : factors_{std::move(g)} {}

  static Monomial unit() { return Monomial(); }

  const std::vector<Generator>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const;

  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  bool operator<(const Monomial& other) const;

 private:
  std::vector<Generator> factors_;
};

/// Linear combination of monomials with exact rational coefficients.
class HElement {
 public:
  explicit HElement(int max_degree) : max_degree_(max_degree) {}

  static HElement unit_element(int max_degree) {
    HElement h(max_degree);
    h.add_term(Monomial::unit(), Rational(1));
    return h;
  }
  static HElement generator(const Generator& g, int max_degree) {
    HElement h(max_degree);
    h.add_term(Monomial(g), Rational(1));
    return h;
  }

  int max_degree() const { return max_degree_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational at(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& r);

  bool operator==(const HElement& other) const = default;

 private:
  int max_degree_;
  std::map<Monomial, Rational> terms_;
};

HElement add(const HElement& a, const HElement& b);
HElement scale(const HElement& a, const Rational& r);
HElement multiply(const HElement& a, const HElement& b);

/// Linear combination of monomial pairs; the target of delta, rho, Delta.
class TensorElement {
 public:
  using Key = std::pair<Monomial, Monomial>;

  explicit TensorElement(int max_degree) : max_degree_(max_degree) {}

  static TensorElement unit_tensor(int max_degree) {
    TensorElement t(max_degree);
    t.add_term(Monomial::unit(), Monomial::unit(), Rational(1));
    return t;
  }

  int max_degree() const { return max_degree_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& left, const Monomial& right, const Rational& r);

  bool operator==(const TensorElement& other) const = default;

 private:
  int max_degree_;
  std::map<Key, Rational> terms_;
};

TensorElement add(const TensorElement& a, const TensorElement& b);
TensorElement scale(const TensorElement& a, const Rational& r);
/// Componentwise product in H (x) H.
TensorElement multiply(const TensorElement& a, const TensorElement& b);

/// The coordinate Hopf algebra of the post-group, with the two coproducts
/// (delta dual to the dot product, Delta dual to the Grossman-Larson
/// product) and the coaction rho dual to the triangle action. Delta is only
/// ever assembled through the cointeraction composite
///   Delta = (id (x) mult) o (rho (x) id) o delta,
/// which is what the duality suite validates. Per-generator tables are
/// computed at construction; instances are immutable afterwards and safe to
/// share read-only.
class HopfAlgebra {
 public:
  explicit HopfAlgebra(int max_degree = 5);

  int max_degree() const { return max_degree_; }

  /// All generators of degree <= bound, ordered (degree, channel, word).
  std::vector<Generator> generators_up_to(int bound) const;

  TensorElement delta(const Generator& g) const;
  TensorElement delta(const HElement& h) const;

  TensorElement rho(const Generator& g) const;
  TensorElement rho(const HElement& h) const;

  TensorElement coproduct(const Generator& g) const;
  TensorElement coproduct(const HElement& h) const;

  HElement antipode(const Generator& g) const;
  HElement antipode(const HElement& h) const;

  /// Counit: coefficient of the unit monomial. Under the 1eps1 = unit
  /// identification this is also evaluation at the group identity.
  Rational counit(const HElement& h) const;

  /// Character evaluation: generators read series coefficients, monomials
  /// multiply. Requires every coefficient to be determined at the series
  /// truncation (channel 1: wdeg <= D; channel 2: wdeg <= D-1).
  Rational evaluate(const HElement& h, const GroupElement& c) const;
  Rational evaluate_generator(const Generator& g, const GroupElement& c) const;

  /// Pairing sum coeff * evaluate(left, c) * evaluate(right, d).
  Rational pair(const TensorElement& t, const GroupElement& c,
                const GroupElement& d) const;

 private:
  TensorElement rho_of_generator(const Generator& g) const;
  /// rho of an (eps_i-decorated) word leg, with the unit identification.
  TensorElement rho_of_leg(const Word& w, int channel) const;

  int max_degree_;
  mutable std::map<Generator, TensorElement> rho_cache_;
  mutable std::map<Generator, HElement> antipode_cache_;
};

}  // namespace fpg
