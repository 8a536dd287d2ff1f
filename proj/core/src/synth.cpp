#include "cce/synth.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

#include "cce/errors.hpp"

namespace cce {

std::string_view to_string(RecognitionReason reason) {
    switch (reason) {
        case RecognitionReason::AllGood:
            return "AllGood";
        case RecognitionReason::SingleNontrivialPath:
            return "SingleNontrivialPath";
        case RecognitionReason::NotPathsAndCycles:
            return "NotPathsAndCycles";
        case RecognitionReason::HoleForbidden:
            return "HoleForbidden";
    }
    return "Unknown";
}

RecognitionResult recognize_22(const ComponentSpec& spec) {
    const auto paths = spec.path_sizes();
    if (paths.size() == 1 && paths.front() >= 2)
        return {false, RecognitionReason::SingleNontrivialPath};
    return {};
}

RecognitionResult recognize_22_interval(const ComponentSpec& spec) {
    RecognitionResult base = recognize_22(spec);
    if (!base.answer) return base;
    for (int size : spec.cycle_sizes())
        if (size != 3) return {false, RecognitionReason::HoleForbidden};
    return {};
}

namespace {

template <typename Recognizer>
RecognitionResult recognize_graph(const UndirectedGraph& g, Recognizer recognize) {
    ComponentSpec spec;
    try {
        spec = to_spec(g);
    } catch (const NotPathsAndCycles&) {
        return {false, RecognitionReason::NotPathsAndCycles};
    }
    return recognize(spec);
}

int wrap(int index, int m) { return ((index - 1) % m + m) % m + 1; }

std::string arc_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

std::vector<Arc> rotation_arcs(int m, int t) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        arcs.push_back({k, wrap(k + t, m)});
        arcs.push_back({k, wrap(k + t + 1, m)});
    }
    return arcs;
}

std::string rotation_text(int m, int t) {
    return "rotation digraph on " + std::to_string(m) + " vertices, shift " + std::to_string(t);
}

Witness two_paths(int m, int n) {
    if (m < 1 || n < 1) throw BadParameters("path sizes must be positive");
    if (m == 1 && n == 1) return {Digraph(2), {"P1 + P1: two isolated vertices"}};
    if (m == 1) std::swap(m, n);
    // Deleting (1, m) removes exactly the CCE edges {1, m+n} and {m, m+1},
    // splitting the cycle into 1..m and m+1..m+n.
    const Arc cut{1, m};
    Digraph d = remove_arcs(build_rotation(m + n, m - 1), std::span<const Arc>(&cut, 1));
    return {std::move(d),
            {"P" + std::to_string(m) + " + P" + std::to_string(n) + ": " +
             rotation_text(m + n, m - 1) + ", minus arc " + arc_text(cut.tail, cut.head)}};
}

Witness twin_paths_plus(int m, int n) {
    if (m < 1 || n < 1) throw BadParameters("path sizes must be positive");
    if (m == 1) {
        Witness w = two_paths(n, 1);
        w.digraph = disjoint_union(w.digraph, Digraph(1));
        w.recipe.push_back("plus one isolated vertex " + std::to_string(w.digraph.order()));
        return w;
    }
    const std::vector<Arc> cuts{{1, m}, {m + 1, 2 * m}};
    Digraph d = remove_arcs(build_rotation(2 * m + n, m - 1), cuts);
    return {std::move(d),
            {"2xP" + std::to_string(m) + " + P" + std::to_string(n) + ": " +
             rotation_text(2 * m + n, m - 1) + ", minus arcs " + arc_text(1, m) + " " +
             arc_text(m + 1, 2 * m)}};
}

// Requires 1 < l < m < n. Glues a trimmed rotation digraph on u_1..u_{l+m}
// to a trimmed rotation digraph on v_1..v_{m+n}, identifying u_{l+i} with
// v_{m+n+1-i} for 1 <= i <= m. Output labels: u_k -> k, v_j (j <= n) -> l+m+j.
Witness three_paths_gadget(int l, int m, int n) {
    std::set<Arc> first_removed;
    for (int i = 1; i <= m - l + 1; ++i) first_removed.insert({l + i, 2 * l - 1 + i});
    for (int i = 1; i <= m - l; ++i) first_removed.insert({l + i, 2 * l + i});

    std::set<Arc> second_removed;
    for (int i = 1; i <= l; ++i) second_removed.insert({n + i, n + m - l + i});
    for (int i = 1; i <= l - 1; ++i) second_removed.insert({n + i, n + m - l + 1 + i});

    auto v_label = [&](int j) { return j <= n ? l + m + j : l + m + n + 1 - j; };

    std::set<Arc> arcs;
    for (const Arc& a : rotation_arcs(l + m, l - 1)) {
        if (first_removed.contains(a)) continue;
        arcs.insert(a);
    }
    for (const Arc& a : rotation_arcs(m + n, m - l)) {
        if (second_removed.contains(a)) continue;
        if (!arcs.insert({v_label(a.tail), v_label(a.head)}).second)
            throw std::logic_error("three-path gadget produced a parallel arc");
    }
    std::vector<Arc> arc_list(arcs.begin(), arcs.end());

    const std::string sizes =
        "P" + std::to_string(l) + " + P" + std::to_string(m) + " + P" + std::to_string(n);
    return {Digraph(l + m + n, arc_list),
            {sizes + ": glue of two trimmed rotation digraphs",
             "  part A: " + rotation_text(l + m, l - 1) + " on 1.." + std::to_string(l + m) +
                 ", minus " + std::to_string(first_removed.size()) + " arcs leaving " +
                 std::to_string(l + 1) + ".." + std::to_string(l + m),
             "  part B: " + rotation_text(m + n, m - l) + ", minus " +
                 std::to_string(second_removed.size()) + " arcs; its vertex n+m+1-i is " +
                 "identified with part A vertex l+i (1 <= i <= " + std::to_string(m) +
                 "), its vertices 1.." + std::to_string(n) + " become " +
                 std::to_string(l + m + 1) + ".." + std::to_string(l + m + n)}};
}

Witness three_paths(int l, int m, int n) {
    if (l < 1 || m < 1 || n < 1) throw BadParameters("path sizes must be positive");
    std::array<int, 3> s{l, m, n};
    std::sort(s.begin(), s.end());
    const auto [a, b, c] = s;
    if (a == b) return twin_paths_plus(a, c);
    if (b == c) return twin_paths_plus(b, a);
    if (a == 1) {
        Witness w = two_paths(b, c);
        w.digraph = disjoint_union(Digraph(1), w.digraph);
        w.recipe.insert(w.recipe.begin(), "isolated vertex 1, then (shifted by 1):");
        return w;
    }
    return three_paths_gadget(a, b, c);
}

}  // namespace

RecognitionResult recognize_22(const UndirectedGraph& g) {
    return recognize_graph(g, [](const ComponentSpec& s) { return recognize_22(s); });
}

RecognitionResult recognize_22_interval(const UndirectedGraph& g) {
    return recognize_graph(g, [](const ComponentSpec& s) { return recognize_22_interval(s); });
}

Digraph build_rotation(int m, int t) {
    if (m < 3 || t < 1 || t > m - 2)
        throw BadParameters("rotation digraph needs m >= 3 and 1 <= t <= m-2 (got m=" +
                            std::to_string(m) + ", t=" + std::to_string(t) + ")");
    return Digraph(m, rotation_arcs(m, t));
}

Digraph synth_cycle(int m) {
    if (m < 3) throw BadParameters("cycle length must be at least 3");
    return build_rotation(m, 1);
}

Digraph synth_two_paths(int m, int n) { return two_paths(m, n).digraph; }

Digraph synth_twin_paths_plus(int m, int n) { return twin_paths_plus(m, n).digraph; }

Digraph synth_three_paths(int l, int m, int n) { return three_paths(l, m, n).digraph; }

Witness synthesize_witness(const ComponentSpec& spec) {
    const RecognitionResult verdict = recognize_22(spec);
    if (!verdict.answer)
        throw NotRealizable("'" + spec.str() + "' is not realizable (" +
                            std::string(to_string(verdict.reason)) + ")");

    Witness result{Digraph(0), {"witness for " + spec.str()}};
    auto append = [&](Witness block) {
        const int first = result.digraph.order() + 1;
        const int last = result.digraph.order() + block.digraph.order();
        result.recipe.push_back("vertices " + std::to_string(first) + ".." +
                                std::to_string(last) + ":");
        for (std::string& line : block.recipe) result.recipe.push_back("  " + line);
        result.digraph = disjoint_union(result.digraph, block.digraph);
    };

    for (int m : spec.cycle_sizes())
        append({synth_cycle(m), {"C" + std::to_string(m) + ": " + rotation_text(m, 1)}});

    std::vector<int> paths = spec.path_sizes();
    std::sort(paths.begin(), paths.end(), std::greater<>());
    const std::size_t k = paths.size();
    if (k == 1) {
        append({Digraph(1), {"P1: isolated vertex"}});
    } else if (k >= 2) {
        const std::size_t pairs_end = k % 2 == 0 ? k : k - 3;
        for (std::size_t i = 0; i < pairs_end; i += 2) append(two_paths(paths[i], paths[i + 1]));
        if (k % 2 == 1) append(three_paths(paths[k - 3], paths[k - 2], paths[k - 1]));
    }
    return result;
}

Digraph synthesize(const ComponentSpec& spec) { return synthesize_witness(spec).digraph; }

}  // namespace cce
