#include "postlie.hpp"

#include <vector>

#include "compose.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace fpg {

namespace {

Series prepend_letter(Letter l, const Series& s, int degree) {
  Series out(degree);
  for (const auto& [w, r] : s.terms()) out.add_term(w.prepended(l), r);
  return out;
}

// Channel-free core of the post-Lie recursion: the left channel only rides
// along, the right channel only selects the prefix of the shuffle term.
Series act_word(const Word& u, const Word& z, int right_channel, int degree) {
  if (u.empty()) return Series(degree);
  const Series rest = act_word(u.tail(), z, right_channel, degree);
  if (u.head() == Letter::x0) return prepend_letter(Letter::x0, rest, degree);
  Series::TermMap sh;
  shuffle_words_into(sh, u.tail(), z, Rational(1));
  Series shuffled(degree);
  for (const auto& [w, r] : sh) shuffled.add_term(w, r);
  Series extra = prepend_letter(right_channel == 1 ? Letter::x1 : Letter::x0,
                                shuffled, degree);
  return add(prepend_letter(Letter::x1, rest, degree), extra);
}

// Accumulates coeff * (series e_channel) into a two-channel value.
void add_into(Series2& acc, const Series& s, int channel, const Rational& coeff) {
  if (channel == 1) {
    acc.c1() = add(acc.c1(), scale(s, coeff));
  } else {
    acc.c2() = add(acc.c2(), scale(s, coeff).truncated_to(acc.max_degree() - 1));
  }
}

}  // namespace

LieElement lie_bracket(const LieElement& u, const LieElement& v) {
  require_same_degree(u.value(), v.value());
  const int degree = u.max_degree();
  // Only mixed-channel basis pairs survive: [u,v] = (u1 sh v2 - v1 sh u2) e2.
  Series u1 = u.c1().truncated_to(degree - 1);
  Series v1 = v.c1().truncated_to(degree - 1);
  Series bottom = sub(shuffle(u1, v.c2()), shuffle(v1, u.c2()));
  return LieElement(Series2(Series(degree), std::move(bottom)));
}

LieElement post_lie_act(const LieElement& u, const LieElement& v) {
  require_same_degree(u.value(), v.value());
  const int degree = u.max_degree();
  Series2 acc(degree);
  auto accumulate = [&](const Series& left, int left_channel) {
    for (const auto& [uw, uc] : left.terms()) {
      for (const auto& [zw, zc] : v.c1().terms())
        add_into(acc, act_word(uw, zw, 1, degree), left_channel, uc * zc);
      for (const auto& [zw, zc] : v.c2().terms())
        add_into(acc, act_word(uw, zw, 2, degree), left_channel, uc * zc);
    }
  };
  accumulate(u.c1(), 1);
  accumulate(u.c2(), 2);
  return LieElement(std::move(acc));
}

LieElement derived_bracket(const LieElement& u, const LieElement& v) {
  return add(sub(post_lie_act(u, v), post_lie_act(v, u)), lie_bracket(u, v));
}

LieElement bullet(const LieElement& u, const LieElement& v) {
  require_same_degree(u.value(), v.value());
  const int degree = u.max_degree();
  // Shuffle term (u1 sh v1) e1 + (u1 sh v2) e2 (delta on the left channel).
  Series top = shuffle(u.c1(), v.c1());
  Series bottom = shuffle(u.c1().truncated_to(degree - 1), v.c2());
  LieElement sh_part(Series2(std::move(top), std::move(bottom)));
  return add(post_lie_act(u, v), sh_part);
}

LieElement linearize_action(const LieElement& u, const LieElement& v) {
  require_same_degree(u.value(), v.value());
  const int degree = u.max_degree();
  const int samples = degree + 2;  // polynomial degree in s is <= D+1

  const GroupElement base = group_from_lie(u);
  std::vector<Series2> deviations;
  deviations.reserve(samples);
  for (int s = 0; s < samples; ++s) {
    GroupElement right = group_from_lie(scale(v, Rational(s)));
    Series2 acted = triangle(base, right).value();
    deviations.push_back(sub(acted, base.value()));
  }

  // Newton forward differences: the s^1 coefficient of a polynomial with
  // samples p(0..m) is sum_k (-1)^{k-1} D^k p(0) / k.
  Series2 result(degree);
  for (int k = 1; k < samples; ++k) {
    for (int j = static_cast<int>(deviations.size()) - 1; j >= k; --j)
      deviations[j] = sub(deviations[j], deviations[j - 1]);
    Rational weight = make_rational(k % 2 == 1 ? 1 : -1, k);
    result = add(result, scale(deviations[k], weight));
  }
  return LieElement(std::move(result));
}

std::string first_difference(const LieElement& a, const LieElement& b) {
  for (int channel = 1; channel <= 2; ++channel) {
    const Series& sa = channel == 1 ? a.c1() : a.c2();
    const Series& sb = channel == 1 ? b.c1() : b.c2();
    auto ia = sa.terms().begin();
    auto ib = sb.terms().begin();
    while (ia != sa.terms().end() || ib != sb.terms().end()) {
      if (ib == sb.terms().end() ||
          (ia != sa.terms().end() && ia->first < ib->first)) {
        return std::to_string(channel) + ":" + ia->first.to_string();
      }
      if (ia == sa.terms().end() || ib->first < ia->first) {
        return std::to_string(channel) + ":" + ib->first.to_string();
      }
      if (ia->second != ib->second)
        return std::to_string(channel) + ":" + ia->first.to_string();
      ++ia;
      ++ib;
    }
  }
  return "none";
}

namespace {

std::string render(const LieElement& e);

std::optional<AxiomWitness> check_identity(const char* name,
                                           const LieElement& lhs,
                                           const LieElement& rhs) {
  if (lhs == rhs) return std::nullopt;
  return AxiomWitness{name, first_difference(lhs, rhs), render(lhs), render(rhs)};
}

std::string render(const LieElement& e) {
  std::string out;
  for (int channel = 1; channel <= 2; ++channel) {
    const Series& s = channel == 1 ? e.c1() : e.c2();
    for (const auto& [w, r] : s.terms()) {
      if (!out.empty()) out += " + ";
      out += rational_to_string(r) + "*" + w.to_string() + ":" +
             std::to_string(channel);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::optional<AxiomWitness> check_post_lie(const LieElement& x,
                                           const LieElement& y,
                                           const LieElement& z) {
  // [x,y]^z = [x^z, y] + [x, y^z]
  LieElement lhs1 = post_lie_act(lie_bracket(x, y), z);
  LieElement rhs1 = add(lie_bracket(post_lie_act(x, z), y),
                        lie_bracket(x, post_lie_act(y, z)));
  if (auto w = check_identity("bracket-derivation", lhs1, rhs1)) return w;

  // z^[x,y] = a(z,x,y) - a(z,y,x) with a the associator of ^.
  auto associator = [](const LieElement& a, const LieElement& b,
                       const LieElement& c) {
    return sub(post_lie_act(post_lie_act(a, b), c),
               post_lie_act(a, post_lie_act(b, c)));
  };
  LieElement lhs2 = post_lie_act(z, lie_bracket(x, y));
  LieElement rhs2 = sub(associator(z, x, y), associator(z, y, x));
  return check_identity("associator-antisymmetry", lhs2, rhs2);
}

}  // namespace fpg
