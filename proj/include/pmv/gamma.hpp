#pragma once

#include "pmv/core.hpp"
#include "pmv/lgroups.hpp"

namespace pmv {

/// The interval [0,u] of a unital l-group as a pseudo MV-algebra:
/// x (+) y = (x+y) ^ u, x^- = u-x, x^~ = -x+u.
PseudoMV gamma(const UnitalLGroup& g, SamplerConfig sampler = {});

/// (x v 0) ^ u
GroupElement clamp_to_unit(const UnitalLGroup& g, const GroupElement& x);

}  // namespace pmv
