#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cce/digraph.hpp"

namespace cce {

/// Unordered pair with u < v after construction through UndirectedGraph.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n; edges are stored normalized (u < v)
/// and sorted.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int order);

    /// Endpoints may be given in either order. Throws InvalidVertex for
    /// self-edges or out-of-range endpoints and ParseError for repeated edges.
    UndirectedGraph(int order, std::span<const Edge> edges);
    UndirectedGraph(int order, std::initializer_list<Edge> edges)
        : UndirectedGraph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return order_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_vertex(Vertex v) const noexcept { return v >= 1 && v <= order_; }
    bool has_edge(Vertex u, Vertex v) const;

    /// Ascending.
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const;

    int order_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

UndirectedGraph disjoint_union(const UndirectedGraph& first, const UndirectedGraph& second);
UndirectedGraph relabel(const UndirectedGraph& g, std::span<const Vertex> perm);

// Text format:
//   graph <n>
//   <u> <v>        one edge per line, written with u < v
UndirectedGraph read_graph(std::istream& in);
UndirectedGraph parse_graph(const std::string& text);
UndirectedGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const UndirectedGraph& g);
std::string format_graph(const UndirectedGraph& g);

void write_dot(std::ostream& out, const UndirectedGraph& g);

}  // namespace cce
