#pragma once

#include <optional>
#include <string>

#include "series2.hpp"

namespace fpg {

/// Lie bracket of (G, dot) on basis pairs
///   [h e_i, z e_j] = (h sh z) e_j d_{i,1} - (h sh z) e_i d_{j,1},
/// extended bilinearly; vanishes when both channels agree.
LieElement lie_bracket(const LieElement& u, const LieElement& v);

/// Post-Lie product, inductively on the left word:
///   empty e_i ^ z e_j   = 0
///   x0.h e_i ^ z e_j    = x0(h e_i ^ z e_j)
///   x1.h e_i ^ z e_1    = x1(h e_i ^ z e_1) + x1(h sh z) e_i
///   x1.h e_i ^ z e_2    = x1(h e_i ^ z e_2) + x0(h sh z) e_i
/// Graded: deg(u ^ v) = deg(u) + deg(v) on homogeneous inputs.
LieElement post_lie_act(const LieElement& u, const LieElement& v);

/// Derived bracket [[u,v]] = u^v - v^u + [u,v]; the Lie bracket of the
/// Grossman-Larson group.
LieElement derived_bracket(const LieElement& u, const LieElement& v);

/// Linearized Grossman-Larson product:
///   h e_i . z e_j = (h e_i ^ z e_j) + (h sh z) e_j d_{i,1}.
LieElement bullet(const LieElement& u, const LieElement& v);

/// Independent oracle for the post-Lie product: samples the group action
/// (e+u) <| (e+s v) at s = 0..D+1, interpolates each coefficient as an exact
/// polynomial in s, and returns the degree-one coefficient. Must agree with
/// post_lie_act.
LieElement linearize_action(const LieElement& u, const LieElement& v);

/// Structured witness for a failed identity: the first differing
/// (channel, word) plus both full values, rendered for CI triage.
struct AxiomWitness {
  std::string identity;
  std::string first_difference;
  std::string left;
  std::string right;
};

/// Checks both post-Lie axioms on a triple; nullopt = pass.
std::optional<AxiomWitness> check_post_lie(const LieElement& x,
                                           const LieElement& y,
                                           const LieElement& z);

/// Renders "none" or the first differing channel:word between two elements.
std::string first_difference(const LieElement& a, const LieElement& b);

}  // namespace fpg
