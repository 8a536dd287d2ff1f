#pragma once

#include <cstdint>

#include "cce/digraph.hpp"
#include "cce/enumerate.hpp"
#include "cce/report.hpp"

namespace cce {

/// True iff deleting any single arc changes the CCE graph. Deleting arcs can
/// only remove CCE edges, so a spanning subdigraph with the same CCE graph
/// exists iff a single-arc deletion keeps it.
/// Throws NotA22Digraph unless d is acyclic with in/out-degree at most two.
bool is_minimal(const Digraph& d);

/// Deletes arcs in ascending order whenever the CCE graph survives. One pass
/// suffices: an arc kept once stays necessary in every later subdigraph.
Digraph minimize(const Digraph& d);

/// Degree-two structure of CCE graphs of digraphs with in/out-degree at most
/// two, as conditional assertions: components are paths and cycles; a vertex
/// of CCE degree two has in/out-degree two and a unique common prey and
/// predator with each neighbor; two nonadjacent prey (or predators) of a
/// vertex have CCE degree at most one; common prey propagate along paths;
/// pair witnesses along a component are distinct and only neighbor each other.
/// Throws NotBounded if d exceeds in/out-degree two.
VerificationReport check_structure_props(const Digraph& d);

/// Acyclic-case assertions: sinks and sources are isolated; no arc joins two
/// vertices of a CCE cycle C; |N+(C) u N-(C)| >= |C|+3 and
/// |N+(C) n N-(C)| <= |C|-3; and, when d is minimal, the single/double parent
/// rules and "at most one common prey and one common predator".
/// Throws NotA22Digraph.
VerificationReport check_acyclic_props(const Digraph& d);

/// Algebraic laws of the CCE operator: invariance under reversal, disjoint
/// unions map to disjoint unions, deleting an arc only removes edges, and
/// every CCE edge is a competition edge.
VerificationReport check_cce_laws(const Digraph& d, const Digraph& other);

struct SweepOptions {
    /// Each worker takes an interleaved sub-shard of `shard`.
    int workers = 1;
    Shard shard{};
};

/// Sweeps every digraph with in/out-degree at most two on 1..n_max vertices
/// (one per isomorphism class) and asserts that its CCE graph is a union of
/// paths and cycles that never has exactly one path component of size >= 2.
/// Conversely, every spec of at most n_max vertices is realized by the sweep
/// iff it is accepted, and synthesis round-trips for every accepted spec.
/// The realized-spec comparisons need the whole stream and are skipped when
/// the sweep is sharded.
VerificationReport verify_path_cycle_characterization(int n_max, const SweepOptions& opts = {});

/// No acyclic digraph with in/out-degree at most two on <= n_max vertices has
/// a cycle in its CCE graph. Requires 1 <= n_max <= 8.
VerificationReport verify_small_acyclic_no_cycle(int n_max, const SweepOptions& opts = {});

/// check_structure_props (and check_acyclic_props when acyclic) over every
/// isomorphism class on n vertices.
VerificationReport verify_props_exhaustive(int n, bool acyclic, const SweepOptions& opts = {});

/// `samples` random digraphs on n vertices, alternating acyclic and general:
/// structure props, CCE laws, and for acyclic samples the acyclic props of
/// the sample and of its minimized subdigraph.
VerificationReport verify_props_random(int n, std::uint64_t samples, std::uint64_t seed,
                                       const SweepOptions& opts = {});

/// Pseudo-random digraph with in/out-degree at most two, deterministic in
/// (n, acyclic, seed) on every platform. Acyclic samples only point forward
/// along a random vertex order. Requires n >= 1.
Digraph random_22(int n, bool acyclic, std::uint64_t seed);

}  // namespace cce
