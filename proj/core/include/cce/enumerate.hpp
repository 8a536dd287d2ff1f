#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cce/digraph.hpp"

namespace cce {

inline constexpr int kMaxEnumerationOrder = 9;
/// Isomorph rejection is only attempted up to this order.
inline constexpr int kMaxCanonicalOrder = 7;

/// Vertex i (0-based) of a small digraph; bit j of out[i] means arc i -> j.
struct BitDigraph {
    using Mask = std::uint16_t;

    int n = 0;
    std::array<Mask, kMaxEnumerationOrder> out{};
    std::array<Mask, kMaxEnumerationOrder> in{};

    void add_arc(int tail, int head) {
        out[tail] |= static_cast<Mask>(1u << head);
        in[head] |= static_cast<Mask>(1u << tail);
    }
    bool has_arc(int tail, int head) const { return (out[tail] >> head) & 1u; }

    /// Throws BadParameters when d has more than kMaxEnumerationOrder vertices.
    static BitDigraph from_digraph(const Digraph& d);
    Digraph to_digraph() const;

    /// CCE adjacency: bit j of result[i] iff i ~ j.
    std::array<Mask, kMaxEnumerationOrder> cce_adjacency() const;

    friend bool operator==(const BitDigraph& a, const BitDigraph& b) {
        return a.n == b.n && a.out == b.out;
    }
};

/// Work partition: a digraph belongs to shard `index` of `total`.
struct Shard {
    int index = 0;
    int total = 1;
};

struct EnumerationConfig {
    int n = 0;
    bool acyclic = false;
    /// Yield one representative per isomorphism class (n <= kMaxCanonicalOrder).
    /// Above that order, non-acyclic enumeration runs labeled and acyclic
    /// enumeration yields every topologically sorted labeling (each class at
    /// least once).
    bool isomorph_reduction = false;
    DegreeBound bound = kBound22;
    Shard shard{};
};

/// Throws BadParameters for n outside 0..kMaxEnumerationOrder, negative
/// bounds, or an invalid shard.
void validate(const EnumerationConfig& cfg);

/// Streams every digraph selected by cfg, in deterministic order: vertices in
/// increasing label order, each choosing its out-neighborhood in lexicographic
/// order. Returns the number of digraphs yielded.
std::uint64_t for_each_bitdigraph(const EnumerationConfig& cfg,
                                  const std::function<void(const BitDigraph&)>& visit);
std::uint64_t for_each_digraph(const EnumerationConfig& cfg,
                               const std::function<void(const Digraph&)>& visit);
std::vector<Digraph> enumerate(const EnumerationConfig& cfg);

/// True iff g is the representative of its isomorphism class: its labeling
/// respects an isomorphism-invariant vertex coloring and no other such
/// labeling has a smaller adjacency encoding.
bool is_canonical(const BitDigraph& g);

/// Variant for digraphs whose arcs all go from lower to higher labels: the
/// candidate labelings are restricted to topological orders, so the
/// representative is itself topologically sorted.
bool is_canonical_topological(const BitDigraph& g);

}  // namespace cce
