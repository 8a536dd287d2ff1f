#include "cce/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "cce/errors.hpp"

namespace cce {

using Mask = BitDigraph::Mask;
using Colors = std::array<std::uint8_t, kMaxEnumerationOrder>;

BitDigraph BitDigraph::from_digraph(const Digraph& d) {
    if (d.order() > kMaxEnumerationOrder)
        throw BadParameters("bit digraphs hold at most " + std::to_string(kMaxEnumerationOrder) +
                            " vertices");
    BitDigraph g;
    g.n = d.order();
    for (const Arc& a : d.arcs()) g.add_arc(a.tail - 1, a.head - 1);
    return g;
}

Digraph BitDigraph::to_digraph() const {
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (has_arc(i, j)) arcs.push_back({i + 1, j + 1});
    return Digraph(n, arcs);
}

std::array<Mask, kMaxEnumerationOrder> BitDigraph::cce_adjacency() const {
    std::array<Mask, kMaxEnumerationOrder> adj{};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((out[i] & out[j]) && (in[i] & in[j])) {
                adj[i] |= static_cast<Mask>(1u << j);
                adj[j] |= static_cast<Mask>(1u << i);
            }
    return adj;
}

void validate(const EnumerationConfig& cfg) {
    if (cfg.n < 0 || cfg.n > kMaxEnumerationOrder)
        throw BadParameters("enumeration order must be in 0.." +
                            std::to_string(kMaxEnumerationOrder));
    if (cfg.bound.in < 0 || cfg.bound.out < 0)
        throw BadParameters("degree bounds must be nonnegative");
    if (cfg.shard.total < 1 || cfg.shard.index < 0 || cfg.shard.index >= cfg.shard.total)
        throw BadParameters("shard must satisfy 0 <= index < total");
}

namespace {

// ---------------------------------------------------------------------------
// Isomorphism-invariant vertex coloring (degree pair, then color refinement).

template <typename Key>
Colors rank_keys(const std::array<Key, kMaxEnumerationOrder>& keys, int n) {
    std::array<Key, kMaxEnumerationOrder> sorted = keys;
    std::sort(sorted.begin(), sorted.begin() + n);
    const auto last = std::unique(sorted.begin(), sorted.begin() + n);
    Colors colors{};
    for (int v = 0; v < n; ++v)
        colors[v] = static_cast<std::uint8_t>(std::lower_bound(sorted.begin(), last, keys[v]) -
                                              sorted.begin());
    return colors;
}

int class_count(const Colors& colors, int n) {
    int best = -1;
    for (int v = 0; v < n; ++v) best = std::max(best, static_cast<int>(colors[v]));
    return best + 1;
}

std::array<unsigned, kMaxEnumerationOrder> degree_keys(const BitDigraph& g) {
    std::array<unsigned, kMaxEnumerationOrder> keys{};
    for (int v = 0; v < g.n; ++v)
        keys[v] = static_cast<unsigned>(std::popcount(g.in[v])) * 16u +
                  static_cast<unsigned>(std::popcount(g.out[v]));
    return keys;
}

// Neighbor colors (+1, 4 bits each), sorted descending: an order-free summary.
std::uint32_t pack_colors(Mask nbrs, const Colors& colors) {
    std::array<std::uint8_t, kMaxEnumerationOrder> list{};
    int count = 0;
    for (Mask m = nbrs; m; m &= static_cast<Mask>(m - 1))
        list[count++] = static_cast<std::uint8_t>(colors[std::countr_zero(m)] + 1);
    std::sort(list.begin(), list.begin() + count, std::greater<>());
    std::uint32_t packed = 0;
    for (int i = 0; i < count; ++i) packed = (packed << 4) | list[i];
    return packed;
}

Colors refined_colors(const BitDigraph& g) {
    Colors colors = rank_keys(degree_keys(g), g.n);
    int classes = class_count(colors, g.n);
    while (classes < g.n) {
        std::array<std::pair<std::uint64_t, std::uint32_t>, kMaxEnumerationOrder> sig{};
        for (int v = 0; v < g.n; ++v)
            sig[v] = {(static_cast<std::uint64_t>(colors[v]) << 32) | pack_colors(g.out[v], colors),
                      pack_colors(g.in[v], colors)};
        Colors next = rank_keys(sig, g.n);
        const int next_classes = class_count(next, g.n);
        colors = next;
        if (next_classes == classes) break;
        classes = next_classes;
    }
    return colors;
}

// ---------------------------------------------------------------------------
// Adjacency encoding read in "growing corner" order: position k contributes
// bits (0,k),(k,0),(1,k),(k,1),...,(k-1,k),(k,k-1), most significant first.
// Once labels 0..k are fixed the prefix through position k is fixed, which
// lets the search prune partial labelings.

std::uint32_t segment(const BitDigraph& g, const std::array<int, kMaxEnumerationOrder>& perm,
                      int k, int w) {
    std::uint32_t seg = 0;
    for (int j = 0; j < k; ++j) {
        seg = (seg << 1) | (g.has_arc(perm[j], w) ? 1u : 0u);
        seg = (seg << 1) | (g.has_arc(w, perm[j]) ? 1u : 0u);
    }
    return seg;
}

class CanonicalSearch {
public:
    CanonicalSearch(const BitDigraph& g, const Colors& colors, bool topological)
        : g_(g), colors_(colors), topological_(topological) {
        std::iota(identity_.begin(), identity_.end(), 0);
        for (int k = 0; k < g.n; ++k) identity_seg_[k] = segment(g, identity_, k, k);
    }

    // False as soon as some admissible labeling encodes smaller than the identity.
    bool identity_is_minimal() { return search(0); }

private:
    bool admissible(int w, int k) const {
        if ((used_ >> w) & 1u) return false;
        if (!topological_) return colors_[w] == colors_[k];
        if (g_.in[w] & ~used_) return false;
        // Must carry the smallest color among currently available vertices.
        for (int x = 0; x < g_.n; ++x)
            if (!((used_ >> x) & 1u) && !(g_.in[x] & ~used_) && colors_[x] < colors_[w])
                return false;
        return true;
    }

    bool search(int k) {
        if (k == g_.n) return true;
        for (int w = 0; w < g_.n; ++w) {
            if (!admissible(w, k)) continue;
            const std::uint32_t seg = segment(g_, perm_, k, w);
            if (seg < identity_seg_[k]) return false;
            if (seg > identity_seg_[k]) continue;
            perm_[k] = w;
            used_ |= static_cast<Mask>(1u << w);
            const bool minimal = search(k + 1);
            used_ &= static_cast<Mask>(~(1u << w));
            if (!minimal) return false;
        }
        return true;
    }

    const BitDigraph& g_;
    const Colors& colors_;
    bool topological_;
    std::array<int, kMaxEnumerationOrder> identity_{};
    std::array<int, kMaxEnumerationOrder> perm_{};
    std::array<std::uint32_t, kMaxEnumerationOrder> identity_seg_{};
    Mask used_ = 0;
};

template <typename Key>
bool sorted_by(const std::array<Key, kMaxEnumerationOrder>& keys, int n) {
    for (int v = 1; v < n; ++v)
        if (keys[v] < keys[v - 1]) return false;
    return true;
}

// Identity must be a minimal-color-first topological order.
template <typename Key>
bool topological_by(const BitDigraph& g, const std::array<Key, kMaxEnumerationOrder>& keys) {
    Mask placed = 0;
    for (int k = 0; k < g.n; ++k) {
        for (int w = k + 1; w < g.n; ++w)
            if (!(g.in[w] & ~placed) && keys[w] < keys[k]) return false;
        placed |= static_cast<Mask>(1u << k);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Generation.

std::vector<Mask> out_choices(int n, int v, int max_out, bool upper) {
    std::vector<Mask> choices;
    auto extend = [&](auto&& self, int start, Mask mask, int size) -> void {
        choices.push_back(mask);
        if (size == max_out) return;
        for (int x = start; x < n; ++x) {
            if (x == v) continue;
            self(self, x + 1, static_cast<Mask>(mask | (1u << x)), size + 1);
        }
    };
    extend(extend, upper ? v + 1 : 0, 0, 0);
    return choices;
}

// Smallest-label-first topological order of g must be exactly `order`.
bool is_min_topological_order(const BitDigraph& g, const std::array<int, kMaxEnumerationOrder>& order) {
    Mask placed = 0;
    for (int k = 0; k < g.n; ++k) {
        int smallest = -1;
        for (int w = 0; w < g.n; ++w)
            if (!((placed >> w) & 1u) && !(g.in[w] & ~placed)) {
                smallest = w;
                break;
            }
        if (smallest != order[k]) return false;
        placed |= static_cast<Mask>(1u << smallest);
    }
    return true;
}

class Generator {
public:
    Generator(const EnumerationConfig& cfg, const std::function<void(const BitDigraph&)>& visit)
        : cfg_(cfg), visit_(visit) {
        for (int v = 0; v < cfg.n; ++v)
            choices_.push_back(out_choices(cfg.n, v, cfg.bound.out, cfg.acyclic));
        // Shard on a prefix of vertex choices, deep enough to spread the work.
        std::uint64_t combos = 1;
        prefix_depth_ = 0;
        while (prefix_depth_ < cfg.n && combos < 64ull * static_cast<std::uint64_t>(cfg.shard.total)) {
            combos *= choices_[prefix_depth_].size();
            ++prefix_depth_;
        }
        graph_.n = cfg.n;
    }

    std::uint64_t run() {
        descend(0, 0);
        return yielded_;
    }

private:
    void descend(int v, std::uint64_t rank) {
        if (v == prefix_depth_ &&
            rank % static_cast<std::uint64_t>(cfg_.shard.total) !=
                static_cast<std::uint64_t>(cfg_.shard.index))
            return;
        if (v == cfg_.n) {
            emit();
            return;
        }
        const auto& options = choices_[v];
        for (std::size_t idx = 0; idx < options.size(); ++idx) {
            const Mask mask = options[idx];
            bool fits = true;
            for (Mask m = mask; m; m &= static_cast<Mask>(m - 1))
                if (std::popcount(graph_.in[std::countr_zero(m)]) >= cfg_.bound.in) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            graph_.out[v] = mask;
            for (Mask m = mask; m; m &= static_cast<Mask>(m - 1))
                graph_.in[std::countr_zero(m)] |= static_cast<Mask>(1u << v);
            descend(v + 1, v < prefix_depth_ ? rank * options.size() + idx : rank);
            for (Mask m = mask; m; m &= static_cast<Mask>(m - 1))
                graph_.in[std::countr_zero(m)] &= static_cast<Mask>(~(1u << v));
            graph_.out[v] = 0;
        }
    }

    void yield(const BitDigraph& g) {
        ++yielded_;
        visit_(g);
    }

    void emit() {
        const bool reduce = cfg_.isomorph_reduction;
        if (!cfg_.acyclic) {
            if (!reduce || cfg_.n > kMaxCanonicalOrder || is_canonical(graph_)) yield(graph_);
            return;
        }
        if (reduce) {
            if (cfg_.n > kMaxCanonicalOrder || is_canonical_topological(graph_)) yield(graph_);
            return;
        }
        // Labeled acyclic digraphs: relabel the topologically sorted graph by
        // every permutation and keep a relabeling only when the permutation is
        // its smallest-label-first topological order. Each labeled digraph
        // arises exactly once this way.
        std::array<int, kMaxEnumerationOrder> perm{};
        std::iota(perm.begin(), perm.begin() + cfg_.n, 0);
        do {
            BitDigraph relabeled;
            relabeled.n = cfg_.n;
            for (int i = 0; i < cfg_.n; ++i)
                for (Mask m = graph_.out[i]; m; m &= static_cast<Mask>(m - 1))
                    relabeled.add_arc(perm[i], perm[std::countr_zero(m)]);
            if (is_min_topological_order(relabeled, perm)) yield(relabeled);
        } while (std::next_permutation(perm.begin(), perm.begin() + cfg_.n));
    }

    const EnumerationConfig& cfg_;
    const std::function<void(const BitDigraph&)>& visit_;
    std::vector<std::vector<Mask>> choices_;
    int prefix_depth_ = 0;
    BitDigraph graph_;
    std::uint64_t yielded_ = 0;
};

}  // namespace

bool is_canonical(const BitDigraph& g) {
    if (!sorted_by(degree_keys(g), g.n)) return false;
    const Colors colors = refined_colors(g);
    if (!sorted_by(colors, g.n)) return false;
    return CanonicalSearch(g, colors, false).identity_is_minimal();
}

bool is_canonical_topological(const BitDigraph& g) {
    if (!topological_by(g, degree_keys(g))) return false;
    const Colors colors = refined_colors(g);
    if (!topological_by(g, colors)) return false;
    return CanonicalSearch(g, colors, true).identity_is_minimal();
}

std::uint64_t for_each_bitdigraph(const EnumerationConfig& cfg,
                                  const std::function<void(const BitDigraph&)>& visit) {
    validate(cfg);
    return Generator(cfg, visit).run();
}

std::uint64_t for_each_digraph(const EnumerationConfig& cfg,
                               const std::function<void(const Digraph&)>& visit) {
    return for_each_bitdigraph(cfg, [&](const BitDigraph& g) { visit(g.to_digraph()); });
}

std::vector<Digraph> enumerate(const EnumerationConfig& cfg) {
    std::vector<Digraph> result;
    for_each_digraph(cfg, [&](const Digraph& d) { result.push_back(d); });
    return result;
}

}  // namespace cce
