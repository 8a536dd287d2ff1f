#include "cce/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cce/errors.hpp"
#include "text_io.hpp"

namespace cce {

UndirectedGraph::UndirectedGraph(int order) : UndirectedGraph(order, std::span<const Edge>{}) {}

UndirectedGraph::UndirectedGraph(int order, std::span<const Edge> edges)
    : order_(order), adj_(order < 0 ? 0 : order) {
    if (order < 0) throw BadParameters("graph order must be nonnegative");
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        check_vertex(e.u);
        check_vertex(e.v);
        if (e.u == e.v) throw InvalidVertex("self-edge at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw ParseError("duplicate edge " + std::to_string(dup->u) + " " +
                         std::to_string(dup->v));
    for (const Edge& e : edges_) {
        adj_[e.u - 1].push_back(e.v);
        adj_[e.v - 1].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

void UndirectedGraph::check_vertex(Vertex v) const {
    if (!has_vertex(v))
        throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(order_));
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nbrs = adj_[u - 1];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::span<const Vertex> UndirectedGraph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v - 1];
}

int UndirectedGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, nbrs.size());
    return static_cast<int>(best);
}

UndirectedGraph disjoint_union(const UndirectedGraph& first, const UndirectedGraph& second) {
    std::vector<Edge> edges = first.edges();
    const int shift = first.order();
    for (const Edge& e : second.edges()) edges.push_back({e.u + shift, e.v + shift});
    return UndirectedGraph(first.order() + second.order(), edges);
}

UndirectedGraph relabel(const UndirectedGraph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw BadParameters("permutation size does not match graph order");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u - 1], perm[e.v - 1]});
    return UndirectedGraph(g.order(), edges);
}

UndirectedGraph read_graph(std::istream& in) {
    detail::PairFile file = detail::read_pair_file(in, "graph");
    std::vector<Edge> edges;
    edges.reserve(file.pairs.size());
    for (const auto& [line, u, v] : file.pairs) {
        if (u < 1 || u > file.order || v < 1 || v > file.order)
            throw ParseError("line " + std::to_string(line) + ": vertex out of range 1.." +
                             std::to_string(file.order));
        if (u == v) throw ParseError("line " + std::to_string(line) + ": self-edge");
        edges.push_back({u, v});
    }
    return UndirectedGraph(file.order, edges);
}

UndirectedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

UndirectedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const UndirectedGraph& g) {
    out << "graph " << g.order() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const UndirectedGraph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

void write_dot(std::ostream& out, const UndirectedGraph& g) {
    out << "graph G {\n";
    for (Vertex v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

}  // namespace cce
