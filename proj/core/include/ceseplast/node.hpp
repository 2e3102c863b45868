#pragma once

#include "ceseplast/system.hpp"

namespace ceseplast {

/// CESE unknowns at one mesh node: the conserved triple and its x-derivative.
struct NodeSolution {
  ConservedState u = ConservedState::Zero();
  Vec3 ux = Vec3::Zero();
};

}  // namespace ceseplast
