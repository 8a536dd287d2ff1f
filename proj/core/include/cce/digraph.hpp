#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace cce {

/// Vertex label. Labels are 1-based: a digraph of order n has vertices 1..n.
using Vertex = int;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Upper bounds on indegree and outdegree.
struct DegreeBound {
    int in = 2;
    int out = 2;

    friend bool operator==(const DegreeBound&, const DegreeBound&) = default;
};

inline constexpr DegreeBound kBound22{2, 2};

/// Finite simple digraph: no loops, no parallel arcs. Opposite arcs (u,v), (v,u)
/// may both be present. Immutable once constructed; arcs are kept sorted by
/// (tail, head).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int order);

    /// Throws InvalidVertex for out-of-range endpoints or loops and ParseError
    /// for repeated arcs.
    Digraph(int order, std::span<const Arc> arcs);
    Digraph(int order, std::initializer_list<Arc> arcs)
        : Digraph(order, std::span<const Arc>(arcs.begin(), arcs.size())) {}

    int order() const noexcept { return order_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_vertex(Vertex v) const noexcept { return v >= 1 && v <= order_; }
    bool has_arc(Vertex tail, Vertex head) const;

    /// Prey of v, ascending.
    std::span<const Vertex> out_neighbors(Vertex v) const;
    /// Predators of v, ascending.
    std::span<const Vertex> in_neighbors(Vertex v) const;

    int out_degree(Vertex v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_neighbors(v).size()); }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.order_ == b.order_ && a.arcs_ == b.arcs_;
    }

private:
    static std::uint64_t key(Vertex u, Vertex v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }
    void check_vertex(Vertex v) const;

    int order_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::unordered_set<std::uint64_t> arc_keys_;
};

bool is_bounded(const Digraph& d, DegreeBound bound);
bool is_acyclic(const Digraph& d);

/// Same vertex set, every arc reversed.
Digraph reverse(const Digraph& d);

/// Vertices of `second` are shifted by first.order().
Digraph disjoint_union(const Digraph& first, const Digraph& second);

/// Throws MissingArc if any listed arc is absent.
Digraph remove_arcs(const Digraph& d, std::span<const Arc> arcs);

/// Relabels vertex v as perm[v - 1] (perm is a permutation of 1..n).
Digraph relabel(const Digraph& d, std::span<const Vertex> perm);

std::vector<Vertex> sources(const Digraph& d);
std::vector<Vertex> sinks(const Digraph& d);

// Text format:
//   digraph <n>
//   <u> <v>        one arc per line; '#' lines and blank lines are ignored
Digraph read_digraph(std::istream& in);
Digraph parse_digraph(const std::string& text);
Digraph load_digraph(const std::string& path);

/// Writes the header, then `comments` as '#' lines, then one arc per line.
void write_digraph(std::ostream& out, const Digraph& d,
                   std::span<const std::string> comments = {});
std::string format_digraph(const Digraph& d, std::span<const std::string> comments = {});

void write_dot(std::ostream& out, const Digraph& d);

}  // namespace cce
