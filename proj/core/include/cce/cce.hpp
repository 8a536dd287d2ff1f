#pragma once

#include <span>
#include <vector>

#include "cce/digraph.hpp"
#include "cce/graph.hpp"

namespace cce {

/// Competition-common-enemy graph: u ~ v iff they share a prey and a predator.
UndirectedGraph cce_graph(const Digraph& d);

/// Competition graph: u ~ v iff they share a prey.
UndirectedGraph competition_graph(const Digraph& d);

/// Vertices outside X that some member of X points to. Ascending.
/// Throws InvalidVertex for labels outside 1..n.
std::vector<Vertex> out_neighbors_of_set(const Digraph& d, std::span<const Vertex> set);
/// Vertices outside X that point to some member of X. Ascending.
std::vector<Vertex> in_neighbors_of_set(const Digraph& d, std::span<const Vertex> set);

/// Common prey / predators of adjacent vertices (v_i, v_{i+1}) along a path or
/// cycle component of the CCE graph. Sets, not single vertices: uniqueness is a
/// property to check.
struct PairWitness {
    struct Entry {
        int index = 0;  // 1-based position i of the pair (v_i, v_{i+1})
        Vertex first = 0;
        Vertex second = 0;
        std::vector<Vertex> prey;
        std::vector<Vertex> predators;

        bool unique() const { return prey.size() == 1 && predators.size() == 1; }
    };

    bool is_cycle = false;
    std::vector<Entry> entries;

    bool all_unique() const;
};

/// `component` lists the vertices of a path (end to end) or cycle component of
/// cce_graph(d) in traversal order; for a cycle the closing pair (v_m, v_1) is
/// included. Throws NotAComponent otherwise.
PairWitness pair_witnesses(const Digraph& d, std::span<const Vertex> component, bool is_cycle);

/// Same, against a precomputed CCE graph of d.
PairWitness pair_witnesses(const Digraph& d, const UndirectedGraph& cce,
                           std::span<const Vertex> component, bool is_cycle);

/// Sorted intersection of two ascending vertex lists.
std::vector<Vertex> common(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace cce
