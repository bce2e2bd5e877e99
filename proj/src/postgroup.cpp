#include "postgroup.hpp"

#include "errors.hpp"

namespace fpg {

GroupElement dot_mul(const GroupElement& c, const GroupElement& d) {
  require_same_degree(c.value(), d.value());
  const int degree = c.max_degree();
  Series top = shuffle(c.c1(), d.c1());
  Series bottom = add(c.c2(), shuffle(c.c1().truncated_to(degree - 1),
                                      d.c2()));
  return GroupElement(Series2(std::move(top), std::move(bottom)));
}

GroupElement dot_inv(const GroupElement& c) {
  const int degree = c.max_degree();
  Series inv1 = shuffle_inverse(c.c1());
  Series bottom = scale(shuffle(inv1.truncated_to(degree - 1), c.c2()),
                        Rational(-1));
  return GroupElement(Series2(std::move(inv1), std::move(bottom)));
}

GroupElement star_mul(const GroupElement& c, const GroupElement& d) {
  require_same_degree(c.value(), d.value());
  const int degree = c.max_degree();
  GroupElement via_action = dot_mul(triangle(c, d), d);

  // Explicit form: [(c1 |> d) sh d1, c2 |> d + (c1 |> d) sh d2].
  Series c1d = mixed_compose(c.c1(), d.value());
  Series c2d = mixed_compose(c.c2().extended_to(degree), d.value())
                   .truncated_to(degree - 1);
  Series top = shuffle(c1d, d.c1());
  Series bottom = add(c2d, shuffle(c1d.truncated_to(degree - 1), d.c2()));
  GroupElement explicit_form(Series2(std::move(top), std::move(bottom)));

  if (!(via_action == explicit_form))
    throw InternalError("Grossman-Larson product paths disagree");
  return via_action;
}

GroupElement r_tri_solve(const GroupElement& y, const GroupElement& d) {
  require_same_degree(y.value(), d.value());
  const int degree = y.max_degree();
  GroupElement x = y;
  for (int pass = 0; pass <= degree + 1; ++pass) {
    Series2 acted = triangle(x, d).value();
    Series2 next = sub(y.value(), sub(acted, x.value()));
    if (next == x.value()) return x;
    x = GroupElement(std::move(next));
  }
  throw InternalError("triangle-action solve did not stabilize in D+2 passes");
}

GroupElement star_inv(const GroupElement& c) {
  return r_tri_solve(dot_inv(c), c);
}

GroupElement opposite_act(const GroupElement& a, const GroupElement& b) {
  return dot_mul(dot_mul(dot_inv(b), triangle(a, b)), b);
}

Series pi1(const GroupElement& c) { return c.c1(); }

GroupElement embed(const Series& c) {
  Series top = Series::constant(Rational(1), c.max_degree() + 1);
  return GroupElement(Series2(std::move(top), c));
}

}  // namespace fpg
