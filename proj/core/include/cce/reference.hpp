#pragma once

#include "cce/digraph.hpp"

namespace cce {

/// Nine-vertex (2,2) digraph whose CCE graph is a triangle plus six isolated
/// vertices. Labels: triangle 1..3, their common prey 4..6, their common
/// predators 7..9. Minimal, and the triangle has exactly six outside
/// neighbors, none of which is both a prey and a predator of it.
Digraph acyclic_triangle_witness();

/// Eleven-vertex (2,2) digraph whose CCE graph is a 4-cycle plus seven
/// isolated vertices. Labels: cycle 1..4, vertex 5 is both a prey and a
/// predator of the cycle, 6..8 are further prey, 9..11 further predators.
Digraph acyclic_square_witness();

}  // namespace cce
