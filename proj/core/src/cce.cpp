#include "cce/cce.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "cce/errors.hpp"

namespace cce {
namespace {

bool intersects(std::span<const Vertex> a, std::span<const Vertex> b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return false;
}

std::vector<bool> membership(const Digraph& d, std::span<const Vertex> set) {
    std::vector<bool> in_set(d.order() + 1, false);
    for (Vertex v : set) {
        if (!d.has_vertex(v))
            throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(d.order()));
        in_set[v] = true;
    }
    return in_set;
}

}  // namespace

std::vector<Vertex> common(std::span<const Vertex> a, std::span<const Vertex> b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

namespace {

// Pairs u < v with a common prey, each once, ascending. Work is proportional
// to the sum of squared indegrees, not to n^2.
template <class Keep>
UndirectedGraph co_prey_graph(const Digraph& d, Keep keep) {
    std::vector<Edge> edges;
    std::vector<Vertex> last_seen(static_cast<std::size_t>(d.order()) + 1, 0);
    for (Vertex u = 1; u <= d.order(); ++u)
        for (Vertex x : d.out_neighbors(u))
            for (Vertex v : d.in_neighbors(x)) {
                if (v <= u || last_seen[v] == u) continue;
                last_seen[v] = u;
                if (keep(u, v)) edges.push_back({u, v});
            }
    std::sort(edges.begin(), edges.end());
    return UndirectedGraph(d.order(), edges);
}

}  // namespace

UndirectedGraph cce_graph(const Digraph& d) {
    return co_prey_graph(d, [&](Vertex u, Vertex v) { return intersects(d.in_neighbors(u), d.in_neighbors(v)); });
}

UndirectedGraph competition_graph(const Digraph& d) {
    return co_prey_graph(d, [](Vertex, Vertex) { return true; });
}

std::vector<Vertex> out_neighbors_of_set(const Digraph& d, std::span<const Vertex> set) {
    auto in_set = membership(d, set);
    std::vector<bool> hit(d.order() + 1, false);
    for (Vertex x : set)
        for (Vertex y : d.out_neighbors(x))
            if (!in_set[y]) hit[y] = true;
    std::vector<Vertex> result;
    for (Vertex v = 1; v <= d.order(); ++v)
        if (hit[v]) result.push_back(v);
    return result;
}

std::vector<Vertex> in_neighbors_of_set(const Digraph& d, std::span<const Vertex> set) {
    auto in_set = membership(d, set);
    std::vector<bool> hit(d.order() + 1, false);
    for (Vertex x : set)
        for (Vertex y : d.in_neighbors(x))
            if (!in_set[y]) hit[y] = true;
    std::vector<Vertex> result;
    for (Vertex v = 1; v <= d.order(); ++v)
        if (hit[v]) result.push_back(v);
    return result;
}

bool PairWitness::all_unique() const {
    return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.unique(); });
}

PairWitness pair_witnesses(const Digraph& d, std::span<const Vertex> component, bool is_cycle) {
    return pair_witnesses(d, cce_graph(d), component, is_cycle);
}

PairWitness pair_witnesses(const Digraph& d, const UndirectedGraph& g,
                           std::span<const Vertex> component, bool is_cycle) {
    const int m = static_cast<int>(component.size());
    auto reject = [](const std::string& why) { throw NotAComponent(why); };
    if (m == 0) reject("empty vertex list");
    if (g.order() != d.order()) reject("CCE graph does not match digraph order");
    if (is_cycle && m < 3) reject("a cycle needs at least 3 vertices");

    std::vector<bool> listed(d.order() + 1, false);
    for (Vertex v : component) {
        if (!d.has_vertex(v)) reject("vertex " + std::to_string(v) + " out of range");
        if (listed[v]) reject("vertex " + std::to_string(v) + " listed twice");
        listed[v] = true;
    }
    // Closed under adjacency, consecutive vertices adjacent, and no other edges
    // inside: then the list is exactly a path/cycle component in this order.
    std::size_t inner_edges = 0;
    for (Vertex v : component)
        for (Vertex w : g.neighbors(v)) {
            if (!listed[w])
                reject("vertex " + std::to_string(v) + " has neighbor " + std::to_string(w) +
                       " outside the list");
            ++inner_edges;
        }
    inner_edges /= 2;
    const int pair_count = is_cycle ? m : m - 1;
    for (int i = 0; i < pair_count; ++i) {
        Vertex a = component[i];
        Vertex b = component[(i + 1) % m];
        if (!g.has_edge(a, b))
            reject("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                   " are not adjacent");
    }
    if (inner_edges != static_cast<std::size_t>(pair_count))
        reject("listed vertices carry extra edges");

    PairWitness result;
    result.is_cycle = is_cycle;
    for (int i = 0; i < pair_count; ++i) {
        PairWitness::Entry e;
        e.index = i + 1;
        e.first = component[i];
        e.second = component[(i + 1) % m];
        e.prey = common(d.out_neighbors(e.first), d.out_neighbors(e.second));
        e.predators = common(d.in_neighbors(e.first), d.in_neighbors(e.second));
        result.entries.push_back(std::move(e));
    }
    return result;
}

}  // namespace cce
