// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// `--long` adds the acyclic n = 8 sweep to criterion 6.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "cce/cce.hpp"
#include "cce/digraph.hpp"
#include "cce/enumerate.hpp"
#include "cce/shape.hpp"
#include "cce/synth.hpp"
#include "cce/verify.hpp"
#include "fixtures.hpp"

using namespace cce;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (ok) notes << "failed: ";
            else notes << "; ";
            notes << what;
            ok = false;
        }
    }
};

int failures = 0;

void criterion(int k, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_s) c.expect(false, "over time budget of " + std::to_string(budget_s) + " s");
    if (!c.ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", c.ok ? "PASS" : "FAIL", k, title.c_str(), secs,
                c.notes.str().empty() ? "" : " ", c.notes.str().c_str());
    std::fflush(stdout);
}

bool interval_or_many(const UndirectedGraph& g) {
    const auto spec = to_spec(g);
    return spec.component_count() > 7 || is_interval_bounded_degree(g);
}

// Vertex i of a cycle listed 1..m, indices taken mod m.
Vertex at(long i, int m) { return static_cast<Vertex>(((i - 1) % m + m) % m + 1); }

}  // namespace

int main(int argc, char** argv) {
    const bool long_run = argc > 1 && std::string(argv[1]) == "--long";

    criterion(1, "triangle witness reproduces C3 + 6xP1 and is minimal", 1.0, [](Check& c) {
        const Digraph d = fixtures::d5();
        const auto g = cce_graph(d);
        c.expect(to_spec(g).str() == "C3 + 6xP1", "spec is " + to_spec(g).str());
        c.expect(is_bounded(d, kBound22), "bounded");
        c.expect(is_acyclic(d), "acyclic");
        c.expect(is_minimal(d), "minimal");
        c.expect(check_structure_props(d).passed(), "structure props");
        c.expect(check_acyclic_props(d).passed(), "acyclic props");
        const std::vector<Vertex> tri{1, 2, 3};
        const auto out = out_neighbors_of_set(d, tri);
        const auto in = in_neighbors_of_set(d, tri);
        std::set<Vertex> uni(out.begin(), out.end());
        uni.insert(in.begin(), in.end());
        c.expect(uni.size() == 6, "|N+ u N-| = " + std::to_string(uni.size()));
        c.expect(common(out, in).empty(), "N+ n N- nonempty");
    });

    criterion(2, "square witness gives C4 + 7xP1, not interval; acyclic ones with <= 7 components are interval", 1.0,
              [](Check& c) {
                  const auto g = cce_graph(fixtures::d6());
                  const auto spec = to_spec(g);
                  c.expect(spec.str() == "C4 + 7xP1", "spec is " + spec.str());
                  c.expect(spec.component_count() == 8, "component count");
                  c.expect(!is_interval_bounded_degree(g), "interval");
                  c.expect(is_bounded(fixtures::d6(), kBound22) && is_acyclic(fixtures::d6()), "(2,2)");
                  std::uint64_t seen = 0;
                  for (int n = 1; n <= 7; ++n)
                      for_each_digraph({.n = n, .acyclic = true, .isomorph_reduction = true},
                                       [&](const Digraph& d) {
                                           ++seen;
                                           c.expect(interval_or_many(cce_graph(d)), format_digraph(d));
                                       });
                  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
                      const Digraph d = random_22(6 + static_cast<int>(seed % 10), true, seed);
                      ++seen;
                      c.expect(interval_or_many(cce_graph(d)), format_digraph(d));
                      c.expect(interval_or_many(cce_graph(minimize(d))), format_digraph(minimize(d)));
                  }
                  c.expect(seen > 0, "nothing checked");
              });

    criterion(3, "rotation digraphs give C_m with the predicted pair witnesses, 3 <= m <= 50", 5.0,
              [](Check& c) {
                  for (int m = 3; m <= 50; ++m) {
                      std::vector<Vertex> cycle(static_cast<std::size_t>(m));
                      std::iota(cycle.begin(), cycle.end(), 1);
                      std::vector<Edge> edges;
                      for (int i = 1; i <= m; ++i) edges.push_back({i, at(i + 1, m)});
                      const UndirectedGraph cm(m, edges);
                      for (int t = 1; t <= m - 2; ++t) {
                          const Digraph d = build_rotation(m, t);
                          const auto g = cce_graph(d);
                          const std::string tag = " m=" + std::to_string(m) + " t=" + std::to_string(t);
                          c.expect(g == cm, "cycle" + tag);
                          c.expect(is_bounded(d, kBound22), "bounded" + tag);
                          if (g != cm) continue;
                          const auto w = pair_witnesses(d, g, cycle, true);
                          c.expect(static_cast<int>(w.entries.size()) == m, "entries" + tag);
                          for (const auto& e : w.entries) {
                              const std::vector<Vertex> prey{at(e.index + t + 1, m)};
                              const std::vector<Vertex> pred{at(e.index - t, m)};
                              c.expect(e.prey == prey && e.predators == pred,
                                       "pair " + std::to_string(e.index) + tag);
                          }
                      }
                  }
              });

    criterion(4, "every accepted spec up to 12 vertices is synthesized; rejected ones never occur", 600.0,
              [](Check& c) {
                  int accepted = 0, rejected = 0;
                  std::set<std::vector<std::pair<int, int>>> realized;
                  for (int n = 1; n <= 6; ++n)
                      for_each_digraph({.n = n, .isomorph_reduction = true}, [&](const Digraph& d) {
                          const auto shape = oracle::shape_of(n, oracle::cce_edges(n, oracle::arcs_of(d)));
                          if (shape.degree_ok) realized.insert(shape.items);
                      });
                  for (const auto& spec : all_component_specs(12)) {
                      const auto items = fixtures::items_of(spec);
                      if (recognize_22(spec).answer) {
                          ++accepted;
                          const Digraph d = synthesize(spec);
                          const int n = d.order();
                          const auto shape = oracle::shape_of(n, oracle::cce_edges(n, oracle::arcs_of(d)));
                          c.expect(oracle::degree_bounded(n, oracle::arcs_of(d)), "bounded " + spec.str());
                          c.expect(spec_equal(cce_graph(d), spec), "spec_equal " + spec.str());
                          c.expect(shape.degree_ok && shape.items == items, "oracle shape " + spec.str());
                      } else {
                          ++rejected;
                          if (spec.total_vertices() <= 6)
                              c.expect(!realized.contains(items), "realized " + spec.str());
                      }
                  }
                  c.expect(accepted > 0 && rejected > 0, "spec generation");
              });

    criterion(5, "every digraph with in/out-degree <= 2 on <= 6 vertices has a path-cycle CCE graph", 1800.0,
              [](Check& c) {
                  const auto r = verify_path_cycle_characterization(6);
                  c.expect(r.passed(), format_report_line(r));
                  c.expect(r.instances_checked > 0, "nothing checked");
              });

    criterion(6,
              std::string("no acyclic degree-two digraph on <= ") + (long_run ? "8" : "7") +
                  " vertices has a CCE cycle",
              1800.0, [long_run](Check& c) {
                  const auto r = verify_small_acyclic_no_cycle(long_run ? 8 : 7);
                  c.expect(r.passed(), format_report_line(r));
                  c.expect(r.instances_checked > 0, "nothing checked");
              });

    criterion(7, "structure, acyclic and law properties over 10^4 random digraphs at n = 12", 120.0,
              [](Check& c) {
                  const auto r = verify_props_random(12, 10000, 20240601);
                  c.expect(r.passed(), format_report_line(r));
                  c.expect(r.instances_checked == 10000, "instances " + std::to_string(r.instances_checked));
              });

    criterion(8, "single-arc minimality matches the all-subsets oracle", 300.0, [](Check& c) {
        const auto set = fixtures::minimality_fixtures(100);
        c.expect(set.size() >= 101, "fixture count");
        int minimal = 0;
        for (const Digraph& d : set) {
            c.expect(d.arc_count() <= 12, "arc count");
            const bool ours = is_minimal(d);
            minimal += ours ? 1 : 0;
            c.expect(ours == oracle::minimal_by_subsets(d.order(), oracle::arcs_of(d)), format_digraph(d));
        }
        c.expect(minimal > 0 && minimal < static_cast<int>(set.size()), "fixtures are all one kind");
    });

    std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "PASS" : "FAIL", failures);
    return failures == 0 ? 0 : 1;
}
