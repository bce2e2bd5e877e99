#pragma once

#include "series2.hpp"

namespace fpg {

/// Composition product: linear in c, and on words
///   empty o d = empty,  x0.h o d = x0(h o d),  x1.h o d = x0(d sh (h o d)).
/// The right argument is unrestricted; the recursion is well defined under
/// truncation. Requires matching degrees.
Series compose(const Series& c, const Series& d);

/// Mixed composition product: linear in c, and on words
///   x0.h |> d = x0(h |> d),
///   x1.h |> d = x1(d1 sh (h |> d)) + x0(d2 sh (h |> d)).
Series mixed_compose(const Series& c, const Series2& d);

/// Componentwise mixed composition [c1 |> d, c2 |> d]; acts on the group as
/// the triangle action and preserves the unit constant term of channel 1.
Series2 triangle(const Series2& c, const Series2& d);

/// Triangle action on group elements (refinement-preserving wrapper).
GroupElement triangle(const GroupElement& c, const GroupElement& d);

}  // namespace fpg
