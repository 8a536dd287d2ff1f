#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cce/digraph.hpp"
#include "cce/reference.hpp"
#include "cce/shape.hpp"
#include "cce/synth.hpp"
#include "cce/verify.hpp"
#include "oracles.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) { return std::string(CCE_DATA_DIR) + "/" + name; }

inline cce::Digraph d5() { return cce::acyclic_triangle_witness(); }
inline cce::Digraph d6() { return cce::acyclic_square_witness(); }

inline oracle::EdgeSet edges_of(const cce::UndirectedGraph& g) {
    oracle::EdgeSet s;
    for (const auto& e : g.edges()) s.insert({e.u, e.v});
    return s;
}

inline std::vector<std::pair<int, int>> items_of(const cce::ComponentSpec& spec) {
    std::vector<std::pair<int, int>> items;
    for (const auto& it : spec.items())
        items.emplace_back(it.kind == cce::ComponentKind::Cycle ? 0 : 1, it.size);
    std::sort(items.begin(), items.end());
    return items;
}

// Small (2,2) digraphs with at most 12 arcs: the two reference digraphs'
// relatives, hand-made corner cases, and seeded random samples.
inline std::vector<cce::Digraph> minimality_fixtures(int random_count) {
    std::vector<cce::Digraph> out{
        d5(),
        cce::Digraph(4),
        cce::Digraph(2, {{1, 2}}),
        cce::Digraph(4, {{1, 3}, {2, 3}, {4, 1}, {4, 2}}),
        cce::Digraph(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {5, 1}, {5, 2}}),
        cce::reverse(d5()),
    };
    for (std::uint64_t seed = 1; static_cast<int>(out.size()) < random_count + 6; ++seed) {
        const int n = 5 + static_cast<int>(seed % 6);
        cce::Digraph d = cce::random_22(n, true, seed);
        if (d.arc_count() <= 12) out.push_back(std::move(d));
    }
    return out;
}

}  // namespace fixtures
