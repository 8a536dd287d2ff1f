#include "cce/verify.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "cce/cce.hpp"
#include "cce/errors.hpp"
#include "cce/shape.hpp"
#include "cce/synth.hpp"

namespace cce {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = BitDigraph::Mask;

std::string list_text(std::span<const Vertex> vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "}";
}

std::string pair_text(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void require_22(const Digraph& d) {
    if (!is_bounded(d, kBound22) || !is_acyclic(d))
        throw NotA22Digraph("expected an acyclic digraph with in/out-degree at most two");
}

std::optional<Vertex> sole(const std::vector<Vertex>& vs) {
    if (vs.size() != 1) return std::nullopt;
    return vs.front();
}

std::optional<Vertex> pair_prey(const Digraph& d, Vertex a, Vertex b) {
    return sole(common(d.out_neighbors(a), d.out_neighbors(b)));
}

std::optional<Vertex> pair_predator(const Digraph& d, Vertex a, Vertex b) {
    return sole(common(d.in_neighbors(a), d.in_neighbors(b)));
}

// Maximal simple walks inside a path or cycle component, one per start
// vertex and direction. Every path of the graph is a prefix of one of these.
std::vector<std::vector<Vertex>> directed_walks(const ClassifiedComponent& c) {
    std::vector<std::vector<Vertex>> walks;
    const auto& seq = c.vertices;
    const std::size_t m = seq.size();
    for (std::size_t s = 0; s < m; ++s) {
        if (c.kind == ShapeKind::Cycle) {
            std::vector<Vertex> fwd, bwd;
            for (std::size_t k = 0; k < m; ++k) {
                fwd.push_back(seq[(s + k) % m]);
                bwd.push_back(seq[(s + m - k) % m]);
            }
            walks.push_back(std::move(fwd));
            walks.push_back(std::move(bwd));
        } else {
            walks.emplace_back(seq.begin() + static_cast<std::ptrdiff_t>(s), seq.end());
            std::vector<Vertex> bwd(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(s) + 1);
            std::reverse(bwd.begin(), bwd.end());
            walks.push_back(std::move(bwd));
        }
    }
    return walks;
}

// Longest simple walk x, y, ... in a graph of maximum degree two.
std::vector<Vertex> walk_through(const UndirectedGraph& g, Vertex x, Vertex y) {
    std::vector<Vertex> walk{x, y};
    Vertex prev = x, cur = y;
    while (true) {
        Vertex next = 0;
        for (Vertex w : g.neighbors(cur))
            if (w != prev) next = w;
        if (next == 0 || next == x) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    return walk;
}

class StructureChecker {
public:
    StructureChecker(const Digraph& d, VerificationReport& report)
        : d_(d), g_(cce_graph(d)), report_(report) {}

    void run() {
        for (Vertex v = 1; v <= g_.order(); ++v)
            if (g_.degree(v) > 2) {
                fail("max-degree: vertex " + std::to_string(v) + " has CCE degree " +
                     std::to_string(g_.degree(v)));
                return;  // everything below assumes paths and cycles
            }
        comps_ = classify_components(g_);
        degree_two();
        nonadjacent_parents();
        for (const auto& c : comps_) {
            if (c.vertices.size() < 3) continue;
            const auto walks = directed_walks(c);
            for (const auto& w : walks) {
                if (w.size() < 3) continue;
                prey_propagation(w);
                self_propagation(w);
            }
            witness_layout(c);
        }
    }

private:
    void fail(std::string detail) { report_.add_violation(d_, std::move(detail)); }

    void degree_two() {
        for (Vertex v = 1; v <= g_.order(); ++v) {
            if (g_.degree(v) != 2) continue;
            if (d_.out_degree(v) != 2 || d_.in_degree(v) != 2)
                fail("degree-two-arcs: vertex " + std::to_string(v) + " has CCE degree 2 but d+=" +
                     std::to_string(d_.out_degree(v)) + " d-=" + std::to_string(d_.in_degree(v)));
            for (Vertex u : g_.neighbors(v)) {
                if (u < v) continue;
                const auto prey = common(d_.out_neighbors(u), d_.out_neighbors(v));
                const auto preds = common(d_.in_neighbors(u), d_.in_neighbors(v));
                if (prey.size() != 1 || preds.size() != 1)
                    fail("unique-pair-witness: pair " + pair_text(u, v) + " has prey " +
                         list_text(prey) + " and predators " + list_text(preds));
            }
        }
    }

    // Two prey of a vertex that are not CCE-adjacent have CCE degree <= 1;
    // likewise for two predators.
    void nonadjacent_parents() {
        for (Vertex w = 1; w <= d_.order(); ++w) {
            for (int side = 0; side < 2; ++side) {
                const auto nbrs = side == 0 ? d_.out_neighbors(w) : d_.in_neighbors(w);
                if (nbrs.size() != 2 || g_.has_edge(nbrs[0], nbrs[1])) continue;
                for (Vertex x : nbrs)
                    if (g_.degree(x) > 1)
                        fail(std::string("nonadjacent-") + (side == 0 ? "prey" : "predators") +
                             ": " + list_text(nbrs) + " of vertex " + std::to_string(w) +
                             " but vertex " + std::to_string(x) + " has CCE degree " +
                             std::to_string(g_.degree(x)));
            }
        }
    }

    // If u1,u2 -> x and u2 -> y with x ~ y, then along the walk u and the walk
    // x, y, ... the common prey of (u_i, u_{i+1}) is the i-th walk vertex.
    void prey_propagation(const std::vector<Vertex>& u) {
        const auto x = pair_prey(d_, u[0], u[1]);
        if (!x) return;
        for (Vertex y : g_.neighbors(*x)) {
            if (!d_.has_arc(u[1], y)) continue;
            const auto v = walk_through(g_, *x, y);
            const std::size_t limit = std::min(u.size() - 1, v.size());
            for (std::size_t i = 1; i <= limit; ++i) {
                const auto p = pair_prey(d_, u[i - 1], u[i]);
                if (p != v[i - 1]) {
                    fail("prey-propagation: walk " + list_text(u) + " onto walk " + list_text(v) +
                         " breaks at pair " + pair_text(u[i - 1], u[i]));
                    break;
                }
            }
        }
    }

    // If the common prey of (v_1, v_2) is v_t with t >= 3 on the same walk,
    // then prey of (v_i, v_{i+1}) is v_{t+i-1} and predator of
    // (v_{t+i-2}, v_{t+i-1}) is v_i.
    void self_propagation(const std::vector<Vertex>& v) {
        const auto x = pair_prey(d_, v[0], v[1]);
        if (!x) return;
        const auto it = std::find(v.begin() + 2, v.end(), *x);
        if (it == v.end()) return;
        const std::size_t t = static_cast<std::size_t>(it - v.begin()) + 1;
        const std::size_t m = v.size();
        for (std::size_t i = 1; i + t <= m + 1; ++i) {
            const auto p = pair_prey(d_, v[i - 1], v[i]);
            const auto q = pair_predator(d_, v[t + i - 3], v[t + i - 2]);
            if (p != v[t + i - 2] || q != v[i - 1]) {
                fail("self-propagation: walk " + list_text(v) + " with prey of first pair at " +
                     "position " + std::to_string(t) + " breaks at step " + std::to_string(i));
                break;
            }
        }
    }

    void witness_layout(const ClassifiedComponent& c) {
        const bool cycle = c.kind == ShapeKind::Cycle;
        const PairWitness pw = pair_witnesses(d_, g_, c.vertices, cycle);
        if (!pw.all_unique()) return;  // reported by degree_two
        std::vector<Vertex> prey, preds;
        for (const auto& e : pw.entries) {
            prey.push_back(e.prey.front());
            preds.push_back(e.predators.front());
        }
        const std::string where = list_text(c.vertices);
        for (const auto* list : {&prey, &preds}) {
            std::vector<Vertex> sorted = *list;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                fail(std::string("distinct-witnesses: repeated ") +
                     (list == &prey ? "prey " : "predators ") + list_text(*list) + " along " + where);
        }
        // Pair i (0-based) may only neighbor pairs i-1 and i+1.
        const std::size_t k = pw.entries.size();
        const std::size_t first = cycle ? 0 : 1;
        const std::size_t last = cycle ? k : (k >= 2 ? k - 1 : 0);
        for (const auto* list : {&prey, &preds}) {
            for (std::size_t i = first; i < last; ++i) {
                const Vertex w = (*list)[i];
                const Vertex before = (*list)[(i + k - 1) % k];
                const Vertex after = (*list)[(i + 1) % k];
                for (Vertex z : g_.neighbors(w))
                    if (z != before && z != after)
                        fail(std::string("witness-neighbors: ") +
                             (list == &prey ? "prey " : "predator ") + std::to_string(w) +
                             " of pair " + std::to_string(i + 1) + " along " + where +
                             " is adjacent to " + std::to_string(z));
            }
        }
    }

    const Digraph& d_;
    UndirectedGraph g_;
    VerificationReport& report_;
    std::vector<ClassifiedComponent> comps_;
};

void check_minimal_rules(const Digraph& d, const UndirectedGraph& g, VerificationReport& report) {
    auto fail = [&](std::string detail) { report.add_violation(d, std::move(detail)); };
    for (Vertex v = 1; v <= d.order(); ++v) {
        for (int side = 0; side < 2; ++side) {
            // side 0: predators of v; side 1: prey of v.
            const auto parents = side == 0 ? d.in_neighbors(v) : d.out_neighbors(v);
            const char* what = side == 0 ? "predator" : "prey";
            if (parents.size() == 1) {
                const Vertex p = parents[0];
                const auto siblings = side == 0 ? d.out_neighbors(p) : d.in_neighbors(p);
                bool sibling_adjacent = false;
                for (Vertex s : siblings)
                    if (s != v && g.has_edge(s, v)) sibling_adjacent = true;
                if (g.degree(v) != 1 || !sibling_adjacent)
                    fail(std::string("minimal-single-") + what + ": vertex " + std::to_string(v) +
                         " has CCE degree " + std::to_string(g.degree(v)));
            } else if (parents.size() == 2) {
                if (g.degree(v) != 2 && !g.has_edge(parents[0], parents[1]))
                    fail(std::string("minimal-two-") + what + ": vertex " + std::to_string(v) +
                         " with " + list_text(parents));
            }
        }
    }
    for (Vertex a = 1; a <= d.order(); ++a)
        for (Vertex b = a + 1; b <= d.order(); ++b) {
            if (common(d.out_neighbors(a), d.out_neighbors(b)).size() > 1 ||
                common(d.in_neighbors(a), d.in_neighbors(b)).size() > 1)
                fail("minimal-common-pairs: " + pair_text(a, b) +
                     " share two prey or two predators");
        }
}

// Components of the CCE graph of a small digraph, straight from bit masks.
struct BitShape {
    bool degree_ok = true;
    std::vector<ComponentItem> items;
};

BitShape bit_shape(const BitDigraph& g) {
    const auto adj = g.cce_adjacency();
    BitShape shape;
    for (int v = 0; v < g.n; ++v)
        if (std::popcount(adj[v]) > 2) {
            shape.degree_ok = false;
            return shape;
        }
    Mask seen = 0;
    for (int v = 0; v < g.n; ++v) {
        if ((seen >> v) & 1u) continue;
        Mask comp = static_cast<Mask>(1u << v), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for (Mask m = frontier; m; m &= static_cast<Mask>(m - 1)) next |= adj[std::countr_zero(m)];
            frontier = static_cast<Mask>(next & ~comp);
            comp |= next;
        }
        seen |= comp;
        int degree_sum = 0;
        for (Mask m = comp; m; m &= static_cast<Mask>(m - 1)) degree_sum += std::popcount(adj[std::countr_zero(m)]);
        const int size = std::popcount(comp);
        const bool cycle = degree_sum / 2 == size;
        shape.items.push_back({cycle ? ComponentKind::Cycle : ComponentKind::Path, size});
    }
    return shape;
}

template <typename Result, typename Fn>
std::vector<Result> run_shards(const SweepOptions& opts, Fn fn) {
    if (opts.workers < 1) throw BadParameters("worker count must be at least 1");
    if (opts.shard.total < 1 || opts.shard.index < 0 || opts.shard.index >= opts.shard.total)
        throw BadParameters("shard must satisfy 0 <= index < total");
    const int w = opts.workers;
    std::vector<Result> results(static_cast<std::size_t>(w));
    auto sub = [&](int t) {
        return Shard{opts.shard.index + t * opts.shard.total, opts.shard.total * w};
    };
    if (w == 1) {
        results[0] = fn(opts.shard);
        return results;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(w));
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t)
        threads.emplace_back([&, t] {
            try {
                results[static_cast<std::size_t>(t)] = fn(sub(t));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

// Adds r's violations to `into` without touching its counts or timing.
void fold_violations(VerificationReport& into, const VerificationReport& r) {
    for (const Violation& v : r.violations) into.add_violation(v.digraph, v.detail);
    into.violation_total += r.violation_total - r.violations.size();
}

void stamp(VerificationReport& report, Clock::time_point start) {
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound) without relying on library distributions, whose
    // output differs between standard library implementations.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace

bool is_minimal(const Digraph& d) {
    require_22(d);
    const UndirectedGraph g = cce_graph(d);
    for (const Arc& a : d.arcs())
        if (cce_graph(remove_arcs(d, std::span<const Arc>(&a, 1))) == g) return false;
    return true;
}

Digraph minimize(const Digraph& d) {
    const UndirectedGraph g = cce_graph(d);
    Digraph current = d;
    for (const Arc& a : d.arcs()) {
        Digraph candidate = remove_arcs(current, std::span<const Arc>(&a, 1));
        if (cce_graph(candidate) == g) current = std::move(candidate);
    }
    return current;
}

VerificationReport check_structure_props(const Digraph& d) {
    const auto start = Clock::now();
    if (!is_bounded(d, kBound22)) throw NotBounded("expected in/out-degree at most two");
    VerificationReport report("structure-props");
    report.instances_checked = 1;
    StructureChecker(d, report).run();
    stamp(report, start);
    return report;
}

VerificationReport check_acyclic_props(const Digraph& d) {
    const auto start = Clock::now();
    require_22(d);
    VerificationReport report("acyclic-props");
    report.instances_checked = 1;
    auto fail = [&](std::string detail) { report.add_violation(d, std::move(detail)); };

    const UndirectedGraph g = cce_graph(d);
    for (Vertex v = 1; v <= d.order(); ++v)
        if ((d.out_degree(v) == 0 || d.in_degree(v) == 0) && g.degree(v) != 0)
            fail("sink-source-isolated: vertex " + std::to_string(v) + " has CCE degree " +
                 std::to_string(g.degree(v)));

    if (g.max_degree() <= 2) {
        for (const ClassifiedComponent& c : classify_components(g)) {
            if (c.kind != ShapeKind::Cycle) continue;
            const int m = static_cast<int>(c.vertices.size());
            std::vector<Vertex> members = c.vertices;
            std::sort(members.begin(), members.end());
            for (Vertex v : members)
                for (Vertex w : d.out_neighbors(v))
                    if (std::binary_search(members.begin(), members.end(), w))
                        fail("cycle-no-internal-arc: arc " + pair_text(v, w) + " inside cycle " +
                             list_text(c.vertices));
            const auto out = out_neighbors_of_set(d, members);
            const auto in = in_neighbors_of_set(d, members);
            std::vector<Vertex> both_sides, either_side;
            std::set_intersection(out.begin(), out.end(), in.begin(), in.end(),
                                  std::back_inserter(both_sides));
            std::set_union(out.begin(), out.end(), in.begin(), in.end(),
                           std::back_inserter(either_side));
            if (static_cast<int>(either_side.size()) < m + 3 ||
                static_cast<int>(both_sides.size()) > m - 3)
                fail("cycle-neighborhood-size: cycle " + list_text(c.vertices) + " has " +
                     std::to_string(either_side.size()) + " outside neighbors, " +
                     std::to_string(both_sides.size()) + " on both sides");
        }
    } else {
        fail("max-degree: CCE degree " + std::to_string(g.max_degree()));
    }

    if (is_minimal(d)) check_minimal_rules(d, g, report);
    stamp(report, start);
    return report;
}

VerificationReport check_cce_laws(const Digraph& d, const Digraph& other) {
    const auto start = Clock::now();
    VerificationReport report("cce-laws");
    report.instances_checked = 1;
    auto fail = [&](std::string detail) { report.add_violation(d, std::move(detail)); };

    const UndirectedGraph g = cce_graph(d);
    if (cce_graph(reverse(d)) != g) fail("reversal: CCE graph of the reverse differs");
    if (cce_graph(disjoint_union(d, other)) != disjoint_union(g, cce_graph(other)))
        fail("union: CCE graph of a disjoint union is not the union of CCE graphs");
    const UndirectedGraph comp = competition_graph(d);
    for (const Edge& e : g.edges())
        if (!comp.has_edge(e.u, e.v))
            fail("competition-contains: CCE edge " + pair_text(e.u, e.v) + " missing");
    for (const Arc& a : d.arcs()) {
        const UndirectedGraph smaller = cce_graph(remove_arcs(d, std::span<const Arc>(&a, 1)));
        for (const Edge& e : smaller.edges())
            if (!g.has_edge(e.u, e.v))
                fail("arc-monotone: deleting " + pair_text(a.tail, a.head) + " adds edge " +
                     pair_text(e.u, e.v));
    }
    stamp(report, start);
    return report;
}

VerificationReport verify_path_cycle_characterization(int n_max, const SweepOptions& opts) {
    const auto start = Clock::now();
    if (n_max < 1) throw BadParameters("n_max must be at least 1");
    const std::string name = "path-cycle-characterization";

    struct Partial {
        VerificationReport report;
        std::set<std::string> realized;
    };
    auto parts = run_shards<Partial>(opts, [&](Shard shard) {
        Partial part{VerificationReport(name), {}};
        for (int n = 1; n <= std::min(n_max, kMaxEnumerationOrder); ++n) {
            EnumerationConfig cfg;
            cfg.n = n;
            cfg.isomorph_reduction = true;
            cfg.shard = shard;
            part.report.instances_checked += for_each_bitdigraph(cfg, [&](const BitDigraph& g) {
                const BitShape shape = bit_shape(g);
                if (!shape.degree_ok) {
                    part.report.add_violation(g.to_digraph(), "CCE graph has a vertex of degree > 2");
                    return;
                }
                const ComponentSpec spec(shape.items);
                const auto verdict = recognize_22(spec);
                if (!verdict.answer)
                    part.report.add_violation(g.to_digraph(),
                                              "CCE graph " + spec.str() +
                                                  " has exactly one nontrivial path component");
                part.realized.insert(spec.str());
            });
        }
        return part;
    });

    VerificationReport report(name);
    std::set<std::string> realized;
    for (auto& p : parts) {
        report.absorb(p.report);
        realized.merge(p.realized);
    }

    const bool whole_stream = opts.shard.total == 1 && n_max <= kMaxEnumerationOrder;
    for (const ComponentSpec& spec : all_component_specs(n_max)) {
        ++report.instances_checked;
        const bool accepted = recognize_22(spec).answer;
        if (whole_stream && accepted != realized.contains(spec.str()))
            report.add_violation(Digraph(0), "spec " + spec.str() +
                                                 (accepted ? " accepted but never realized"
                                                           : " rejected but realized"));
        if (!accepted) continue;
        const Digraph w = synthesize(spec);
        if (!is_bounded(w, kBound22) || w.order() != spec.total_vertices() ||
            !spec_equal(cce_graph(w), spec))
            report.add_violation(w, "synthesized witness for " + spec.str() + " does not round-trip");
    }
    stamp(report, start);
    return report;
}

VerificationReport verify_small_acyclic_no_cycle(int n_max, const SweepOptions& opts) {
    const auto start = Clock::now();
    if (n_max < 1 || n_max > 8) throw BadParameters("n_max must be in 1..8");
    const std::string name = "acyclic-no-cycle";
    auto parts = run_shards<VerificationReport>(opts, [&](Shard shard) {
        VerificationReport part(name);
        for (int n = 1; n <= n_max; ++n) {
            EnumerationConfig cfg;
            cfg.n = n;
            cfg.acyclic = true;
            cfg.isomorph_reduction = true;
            cfg.shard = shard;
            part.instances_checked += for_each_bitdigraph(cfg, [&](const BitDigraph& g) {
                const BitShape shape = bit_shape(g);
                if (!shape.degree_ok) {
                    part.add_violation(g.to_digraph(), "CCE graph has a vertex of degree > 2");
                    return;
                }
                for (const ComponentItem& item : shape.items)
                    if (item.kind == ComponentKind::Cycle)
                        part.add_violation(g.to_digraph(),
                                           "CCE graph contains C" + std::to_string(item.size));
            });
        }
        return part;
    });
    VerificationReport report(name);
    for (const auto& p : parts) report.absorb(p);
    stamp(report, start);
    return report;
}

VerificationReport verify_props_exhaustive(int n, bool acyclic, const SweepOptions& opts) {
    const auto start = Clock::now();
    const std::string name = acyclic ? "acyclic-props-exhaustive" : "structure-props-exhaustive";
    auto parts = run_shards<VerificationReport>(opts, [&](Shard shard) {
        VerificationReport part(name);
        EnumerationConfig cfg;
        cfg.n = n;
        cfg.acyclic = acyclic;
        cfg.isomorph_reduction = true;
        cfg.shard = shard;
        part.instances_checked = for_each_digraph(cfg, [&](const Digraph& d) {
            fold_violations(part, check_structure_props(d));
            if (acyclic) fold_violations(part, check_acyclic_props(d));
        });
        return part;
    });
    VerificationReport report(name);
    for (const auto& p : parts) report.absorb(p);
    stamp(report, start);
    return report;
}

VerificationReport verify_props_random(int n, std::uint64_t samples, std::uint64_t seed,
                                       const SweepOptions& opts) {
    const auto start = Clock::now();
    if (n < 1) throw BadParameters("n must be at least 1");
    const std::string name = "props-random";
    auto parts = run_shards<VerificationReport>(opts, [&](Shard shard) {
        VerificationReport part(name);
        auto absorb_violations = [&](const VerificationReport& r) { fold_violations(part, r); };
        for (std::uint64_t k = static_cast<std::uint64_t>(shard.index); k < samples;
             k += static_cast<std::uint64_t>(shard.total)) {
            const bool acyclic = k % 2 == 1;
            const std::uint64_t sample_seed = seed * 0x9E3779B97F4A7C15ull + k;
            const Digraph d = random_22(n, acyclic, sample_seed);
            const Digraph other = random_22(1 + static_cast<int>(k % 5), !acyclic, sample_seed ^ 1);
            ++part.instances_checked;
            absorb_violations(check_structure_props(d));
            absorb_violations(check_cce_laws(d, other));
            if (acyclic) {
                absorb_violations(check_acyclic_props(d));
                const Digraph reduced = minimize(d);
                if (!is_minimal(reduced)) part.add_violation(d, "minimize: result is not minimal");
                if (is_minimal(reduced) != is_minimal(reverse(reduced)))
                    part.add_violation(d, "reverse-minimal: reversal changes minimality");
                absorb_violations(check_acyclic_props(reduced));
            }
        }
        return part;
    });
    VerificationReport report(name);
    for (const auto& p : parts) report.absorb(p);
    stamp(report, start);
    return report;
}

Digraph random_22(int n, bool acyclic, std::uint64_t seed) {
    if (n < 1) throw BadParameters("random digraph needs at least one vertex");
    SplitRng rng(seed);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<int> position(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Arc> arcs;
    for (Vertex v : order) {
        const std::uint64_t roll = rng.below(10);
        const std::size_t target = roll == 0 ? 0 : (roll < 3 ? 1 : 2);
        std::vector<Vertex> candidates;
        for (Vertex w = 1; w <= n; ++w) {
            if (w == v || indegree[static_cast<std::size_t>(w)] >= 2) continue;
            if (acyclic && position[static_cast<std::size_t>(w)] <= position[static_cast<std::size_t>(v)])
                continue;
            candidates.push_back(w);
        }
        const std::size_t take = std::min(target, candidates.size());
        for (std::size_t i = 0; i < take; ++i) {
            std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
            arcs.push_back({v, candidates[i]});
            ++indegree[static_cast<std::size_t>(candidates[i])];
        }
    }
    return Digraph(n, arcs);
}

}  // namespace cce
