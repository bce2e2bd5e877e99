#pragma once

#include "compose.hpp"

namespace fpg {

/// The group product on G: c.d = [c1 sh d1, c2 + c1 sh d2].
GroupElement dot_mul(const GroupElement& c, const GroupElement& d);

/// Inverse for the dot product: [c1^{sh-1}, -c1^{sh-1} sh c2].
GroupElement dot_inv(const GroupElement& c);

/// Grossman-Larson product c * d = (c <| d) . d, the affine feedback group
/// product. Computed both as the action-then-multiply form and as the
/// explicit componentwise formula; the two must agree (internal check).
GroupElement star_mul(const GroupElement& c, const GroupElement& d);

/// Solves x <| d = y for x by the unitriangular fixed point
/// x <- y - (x <| d - x); the action minus the identity strictly raises the
/// channel-shifted degree, so the iteration stabilizes in <= D+1 passes.
/// Non-stabilization is an internal invariant violation.
GroupElement r_tri_solve(const GroupElement& y, const GroupElement& d);

/// Star-inverse via the post-group formula: the inverse right-action
/// applied to the dot-inverse, i.e. r_tri_solve(dot_inv(c), c).
GroupElement star_inv(const GroupElement& c);

/// Action of the opposite post-group: a <<| b = b^{.-1} . (a <| b) . b.
/// With the opposite product a o b := b.a this satisfies both post-group
/// axioms and integrates to the same Grossman-Larson product,
/// b . (a <<| b) = a * b.
GroupElement opposite_act(const GroupElement& a, const GroupElement& b);

/// Projection onto the multiplicative channel (a dot-to-shuffle group
/// homomorphism) and the section embedding c -> [1, c] of the additive
/// normal subgroup.
Series pi1(const GroupElement& c);
GroupElement embed(const Series& c);

}  // namespace fpg
