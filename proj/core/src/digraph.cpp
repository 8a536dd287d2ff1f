#include "cce/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <istream>
#include <ostream>
#include <sstream>

#include "cce/errors.hpp"
#include "text_io.hpp"

namespace cce {

Digraph::Digraph(int order) : Digraph(order, std::span<const Arc>{}) {}

Digraph::Digraph(int order, std::span<const Arc> arcs)
    : order_(order), arcs_(arcs.begin(), arcs.end()), out_(order < 0 ? 0 : order),
      in_(order < 0 ? 0 : order) {
    if (order < 0) throw BadParameters("digraph order must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    arc_keys_.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        check_vertex(a.tail);
        check_vertex(a.head);
        if (a.tail == a.head)
            throw InvalidVertex("loop at vertex " + std::to_string(a.tail));
        if (!arc_keys_.insert(key(a.tail, a.head)).second)
            throw ParseError("duplicate arc " + std::to_string(a.tail) + " " +
                             std::to_string(a.head));
        out_[a.tail - 1].push_back(a.head);
        in_[a.head - 1].push_back(a.tail);
    }
    // out_ lists come out sorted from the sorted arc order; in_ lists need it.
    for (auto& preds : in_) std::sort(preds.begin(), preds.end());
}

void Digraph::check_vertex(Vertex v) const {
    if (!has_vertex(v))
        throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(order_));
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
    return arc_keys_.contains(key(tail, head));
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
    check_vertex(v);
    return out_[v - 1];
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    return in_[v - 1];
}

bool is_bounded(const Digraph& d, DegreeBound bound) {
    for (Vertex v = 1; v <= d.order(); ++v)
        if (d.in_degree(v) > bound.in || d.out_degree(v) > bound.out) return false;
    return true;
}

bool is_acyclic(const Digraph& d) {
    // Kahn: the digraph is acyclic iff every vertex gets peeled.
    std::vector<int> indeg(d.order());
    std::vector<Vertex> ready;
    for (Vertex v = 1; v <= d.order(); ++v) {
        indeg[v - 1] = d.in_degree(v);
        if (indeg[v - 1] == 0) ready.push_back(v);
    }
    int peeled = 0;
    while (!ready.empty()) {
        Vertex v = ready.back();
        ready.pop_back();
        ++peeled;
        for (Vertex w : d.out_neighbors(v))
            if (--indeg[w - 1] == 0) ready.push_back(w);
    }
    return peeled == d.order();
}

Digraph reverse(const Digraph& d) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) arcs.push_back({a.head, a.tail});
    return Digraph(d.order(), arcs);
}

Digraph disjoint_union(const Digraph& first, const Digraph& second) {
    std::vector<Arc> arcs = first.arcs();
    const int shift = first.order();
    for (const Arc& a : second.arcs()) arcs.push_back({a.tail + shift, a.head + shift});
    return Digraph(first.order() + second.order(), arcs);
}

Digraph remove_arcs(const Digraph& d, std::span<const Arc> arcs) {
    std::vector<Arc> doomed(arcs.begin(), arcs.end());
    std::sort(doomed.begin(), doomed.end());
    doomed.erase(std::unique(doomed.begin(), doomed.end()), doomed.end());
    for (const Arc& a : doomed)
        if (!d.has_arc(a.tail, a.head))
            throw MissingArc("arc " + std::to_string(a.tail) + " " + std::to_string(a.head) +
                             " is not in the digraph");
    std::vector<Arc> kept;
    kept.reserve(d.arc_count() - doomed.size());
    std::set_difference(d.arcs().begin(), d.arcs().end(), doomed.begin(), doomed.end(),
                        std::back_inserter(kept));
    return Digraph(d.order(), kept);
}

Digraph relabel(const Digraph& d, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != d.order())
        throw BadParameters("permutation size does not match digraph order");
    std::vector<bool> seen(d.order() + 1, false);
    for (Vertex v : perm) {
        if (v < 1 || v > d.order() || seen[v]) throw BadParameters("not a permutation");
        seen[v] = true;
    }
    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) arcs.push_back({perm[a.tail - 1], perm[a.head - 1]});
    return Digraph(d.order(), arcs);
}

std::vector<Vertex> sources(const Digraph& d) {
    std::vector<Vertex> result;
    for (Vertex v = 1; v <= d.order(); ++v)
        if (d.in_degree(v) == 0) result.push_back(v);
    return result;
}

std::vector<Vertex> sinks(const Digraph& d) {
    std::vector<Vertex> result;
    for (Vertex v = 1; v <= d.order(); ++v)
        if (d.out_degree(v) == 0) result.push_back(v);
    return result;
}

Digraph read_digraph(std::istream& in) {
    detail::PairFile file = detail::read_pair_file(in, "digraph");
    std::vector<Arc> arcs;
    arcs.reserve(file.pairs.size());
    for (const auto& [line, u, v] : file.pairs) {
        if (u < 1 || u > file.order || v < 1 || v > file.order)
            throw ParseError("line " + std::to_string(line) + ": vertex out of range 1.." +
                             std::to_string(file.order));
        if (u == v) throw ParseError("line " + std::to_string(line) + ": loop arc");
        arcs.push_back({u, v});
    }
    return Digraph(file.order, arcs);
}

Digraph parse_digraph(const std::string& text) {
    std::istringstream in(text);
    return read_digraph(in);
}

Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d, std::span<const std::string> comments) {
    out << "digraph " << d.order() << '\n';
    for (const std::string& c : comments) out << "# " << c << '\n';
    for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

std::string format_digraph(const Digraph& d, std::span<const std::string> comments) {
    std::ostringstream out;
    write_digraph(out, d, comments);
    return out.str();
}

void write_dot(std::ostream& out, const Digraph& d) {
    out << "digraph D {\n";
    for (Vertex v = 1; v <= d.order(); ++v) out << "  " << v << ";\n";
    for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
    out << "}\n";
}

}  // namespace cce
