#include "hopf.hpp"

#include <algorithm>

#include "errors.hpp"

namespace fpg {

Generator::Generator(Word w, int c) : word(std::move(w)), channel(c) {
  if (channel != 1 && channel != 2) throw UsageError("channel must be 1 or 2");
  if (channel == 1 && word.empty())
    throw UsageError("(empty,1) is the algebra unit, not a generator");
}

std::string Generator::to_string() const {
  return word.to_string() + ":" + std::to_string(channel);
}

Generator Generator::from_string(std::string_view token) {
  auto colon = token.rfind(':');
  if (colon == std::string_view::npos)
    throw ParseError("generator token needs '<word>:<channel>'");
  Word w = Word::from_string(token.substr(0, colon));
  std::string_view ch = token.substr(colon + 1);
  if (ch == "1") return Generator(w, 1);
  if (ch == "2") return Generator(w, 2);
  throw ParseError("generator channel must be 1 or 2");
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& g : factors_) d += g.degree();
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  std::merge(factors_.begin(), factors_.end(), other.factors_.begin(),
             other.factors_.end(), std::back_inserter(m.factors_));
  return m;
}

bool Monomial::operator<(const Monomial& other) const {
  return std::lexicographical_compare(factors_.begin(), factors_.end(),
                                      other.factors_.begin(),
                                      other.factors_.end());
}

Rational HElement::at(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void HElement::add_term(const Monomial& m, const Rational& r) {
  if (r == 0) return;
  if (m.degree() > max_degree_)
    throw InternalError("monomial degree exceeds the algebra bound");
  auto [it, inserted] = terms_.emplace(m, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

HElement add(const HElement& a, const HElement& b) {
  HElement h = a;
  for (const auto& [m, r] : b.terms()) h.add_term(m, r);
  return h;
}

HElement scale(const HElement& a, const Rational& r) {
  HElement h(a.max_degree());
  if (r == 0) return h;
  for (const auto& [m, c] : a.terms()) h.add_term(m, c * r);
  return h;
}

HElement multiply(const HElement& a, const HElement& b) {
  HElement h(a.max_degree());
  for (const auto& [ma, ra] : a.terms())
    for (const auto& [mb, rb] : b.terms()) h.add_term(ma.times(mb), ra * rb);
  return h;
}

void TensorElement::add_term(const Monomial& left, const Monomial& right,
                             const Rational& r) {
  if (r == 0) return;
  if (left.degree() > max_degree_ || right.degree() > max_degree_)
    throw InternalError("tensor leg degree exceeds the algebra bound");
  auto [it, inserted] = terms_.emplace(Key(left, right), r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement add(const TensorElement& a, const TensorElement& b) {
  TensorElement t = a;
  for (const auto& [k, r] : b.terms()) t.add_term(k.first, k.second, r);
  return t;
}

TensorElement scale(const TensorElement& a, const Rational& r) {
  TensorElement t(a.max_degree());
  if (r == 0) return t;
  for (const auto& [k, c] : a.terms()) t.add_term(k.first, k.second, c * r);
  return t;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  TensorElement t(a.max_degree());
  for (const auto& [ka, ra] : a.terms())
    for (const auto& [kb, rb] : b.terms())
      t.add_term(ka.first.times(kb.first), ka.second.times(kb.second), ra * rb);
  return t;
}

namespace {

/// (word)eps_1 as a monomial, with the empty word rewritten to the unit.
Monomial eps1_monomial(const Word& w) {
  return w.empty() ? Monomial::unit() : Monomial(Generator(w, 1));
}

Monomial eps_monomial(const Word& w, int channel) {
  return channel == 1 ? eps1_monomial(w) : Monomial(Generator(w, 2));
}

/// theta_j on a unit-or-single-generator monomial: prepends the letter to
/// the word, treating the unit as the identified generator (empty)eps_1.
Generator theta_applied(const Monomial& m, Letter l) {
  if (m.is_unit()) return Generator(Word().prepended(l), 1);
  if (m.factors().size() != 1)
    throw InternalError("theta applied to a non-linear coaction leg");
  const Generator& g = m.factors().front();
  return Generator(g.word.prepended(l), g.channel);
}

}  // namespace

HopfAlgebra::HopfAlgebra(int max_degree) : max_degree_(max_degree) {
  if (max_degree < 1) throw UsageError("Hopf truncation degree must be >= 1");
  // Tables are filled up front; afterwards every method is read-only and an
  // instance can be shared across threads.
  for (const Generator& g : generators_up_to(max_degree_)) {
    rho(g);
    antipode(g);
  }
}

std::vector<Generator> HopfAlgebra::generators_up_to(int bound) const {
  if (bound > max_degree_)
    throw UsageError("generator bound exceeds the algebra degree");
  std::vector<Generator> gens;
  for (const Word& w : Word::all_up_to_wdeg(bound)) {
    if (!w.empty()) gens.emplace_back(w, 1);
    if (w.wdeg() + 1 <= bound) gens.emplace_back(w, 2);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

TensorElement HopfAlgebra::delta(const Generator& g) const {
  TensorElement t(max_degree_);
  if (g.channel == 1) {
    // delta(h eps1) = unshuffle(h) decorated (eps1 (x) eps1)
    for (const auto& [split, coeff] : unshuffle(g.word))
      t.add_term(eps1_monomial(split.first), eps1_monomial(split.second), coeff);
  } else {
    // delta(h eps2) = unshuffle(h)(eps1 (x) eps2) + h eps2 (x) unit
    for (const auto& [split, coeff] : unshuffle(g.word))
      t.add_term(eps1_monomial(split.first),
                 Monomial(Generator(split.second, 2)), coeff);
    t.add_term(Monomial(g), Monomial::unit(), Rational(1));
  }
  return t;
}

TensorElement HopfAlgebra::delta(const HElement& h) const {
  TensorElement out(max_degree_);
  for (const auto& [m, r] : h.terms()) {
    TensorElement product = TensorElement::unit_tensor(max_degree_);
    for (const auto& g : m.factors()) product = multiply(product, delta(g));
    out = add(out, scale(product, r));
  }
  return out;
}

TensorElement HopfAlgebra::rho_of_leg(const Word& w, int channel) const {
  if (w.empty() && channel == 1) return TensorElement::unit_tensor(max_degree_);
  return rho(Generator(w, channel));
}

TensorElement HopfAlgebra::rho_of_generator(const Generator& g) const {
  // Base case of the coaction recursion.
  if (g.channel == 2 && g.word.empty()) {
    TensorElement t(max_degree_);
    t.add_term(Monomial(g), Monomial::unit(), Rational(1));
    return t;
  }

  // g = theta_j(tail eps_i); the recursion dualizes the triangle action.
  const Letter j = g.word.head();
  const Word tail = g.word.tail();
  const int i = g.channel;
  TensorElement out(max_degree_);

  if (j == Letter::x0) {
    // (theta_0 (x) id) rho(tail eps_i)
    const TensorElement tail_rho = rho_of_leg(tail, i);
    for (const auto& [k, r] : tail_rho.terms())
      out.add_term(Monomial(theta_applied(k.first, Letter::x0)), k.second, r);
  }
  // (theta_1 (x) mult)(rho (x) id) of unshuffle(tail)(eps_i (x) eps_s)
  // with eps_s = eps_2 for the x0 step and eps_1 for the x1 step.
  const int s = (j == Letter::x0) ? 2 : 1;
  for (const auto& [split, coeff] : unshuffle(tail)) {
    Monomial right = eps_monomial(split.second, s);
    const TensorElement left_rho = rho_of_leg(split.first, i);
    for (const auto& [k, r] : left_rho.terms())
      out.add_term(Monomial(theta_applied(k.first, Letter::x1)),
                   k.second.times(right), coeff * r);
  }
  return out;
}

TensorElement HopfAlgebra::rho(const Generator& g) const {
  auto it = rho_cache_.find(g);
  if (it != rho_cache_.end()) return it->second;
  TensorElement t = rho_of_generator(g);
  rho_cache_.emplace(g, t);
  return t;
}

TensorElement HopfAlgebra::rho(const HElement& h) const {
  TensorElement out(max_degree_);
  for (const auto& [m, r] : h.terms()) {
    TensorElement product = TensorElement::unit_tensor(max_degree_);
    for (const auto& g : m.factors()) product = multiply(product, rho(g));
    out = add(out, scale(product, r));
  }
  return out;
}

TensorElement HopfAlgebra::coproduct(const Generator& g) const {
  // Delta = (id (x) mult) o (rho (x) id) o delta, the cointeraction relation.
  TensorElement out(max_degree_);
  const TensorElement delta_g = delta(g);
  for (const auto& [k, coeff] : delta_g.terms()) {
    TensorElement rho_left = TensorElement::unit_tensor(max_degree_);
    for (const auto& f : k.first.factors())
      rho_left = multiply(rho_left, rho(f));
    for (const auto& [rk, r] : rho_left.terms())
      out.add_term(rk.first, rk.second.times(k.second), coeff * r);
  }
  return out;
}

TensorElement HopfAlgebra::coproduct(const HElement& h) const {
  TensorElement out(max_degree_);
  for (const auto& [m, r] : h.terms()) {
    TensorElement product = TensorElement::unit_tensor(max_degree_);
    for (const auto& g : m.factors()) product = multiply(product, coproduct(g));
    out = add(out, scale(product, r));
  }
  return out;
}

HElement HopfAlgebra::antipode(const Generator& g) const {
  auto it = antipode_cache_.find(g);
  if (it != antipode_cache_.end()) return it->second;

  // Connected graded recursion from the reduced coproduct:
  // S(g) = -g - sum S(left) * right over terms with both legs proper.
  HElement s(max_degree_);
  s.add_term(Monomial(g), Rational(-1));
  const Monomial self(g);
  const TensorElement delta_star = coproduct(g);
  for (const auto& [k, coeff] : delta_star.terms()) {
    if (k.first == self && k.second.is_unit()) continue;
    if (k.first.is_unit() && k.second == self) continue;
    if (k.first.is_unit() || k.second.is_unit())
      throw InternalError("reduced coproduct has an improper term");
    HElement left(max_degree_);
    left.add_term(Monomial::unit(), coeff);
    for (const auto& f : k.first.factors()) left = multiply(left, antipode(f));
    HElement right(max_degree_);
    right.add_term(k.second, Rational(1));
    s = add(s, scale(multiply(left, right), Rational(-1)));
  }
  antipode_cache_.emplace(g, s);
  return s;
}

HElement HopfAlgebra::antipode(const HElement& h) const {
  // H is commutative, so the antipode is an algebra morphism.
  HElement out(max_degree_);
  for (const auto& [m, r] : h.terms()) {
    HElement product(max_degree_);
    product.add_term(Monomial::unit(), r);
    for (const auto& g : m.factors()) product = multiply(product, antipode(g));
    out = add(out, product);
  }
  return out;
}

Rational HopfAlgebra::counit(const HElement& h) const {
  return h.at(Monomial::unit());
}

Rational HopfAlgebra::evaluate_generator(const Generator& g,
                                         const GroupElement& c) const {
  const Series& channel = g.channel == 1 ? c.c1() : c.c2();
  if (g.word.wdeg() > channel.max_degree())
    throw UsageError("series truncation does not determine coefficient of " +
                     g.to_string());
  return channel.at(g.word);
}

Rational HopfAlgebra::evaluate(const HElement& h, const GroupElement& c) const {
  Rational total(0);
  for (const auto& [m, r] : h.terms()) {
    Rational value = r;
    for (const auto& g : m.factors()) value *= evaluate_generator(g, c);
    total += value;
  }
  return total;
}

Rational HopfAlgebra::pair(const TensorElement& t, const GroupElement& c,
                           const GroupElement& d) const {
  Rational total(0);
  for (const auto& [k, r] : t.terms()) {
    HElement left(max_degree_), right(max_degree_);
    left.add_term(k.first, Rational(1));
    right.add_term(k.second, Rational(1));
    total += r * evaluate(left, c) * evaluate(right, d);
  }
  return total;
}

}  // namespace fpg
