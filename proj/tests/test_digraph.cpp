#include <doctest.h>

#include <sstream>

#include "cce/digraph.hpp"
#include "cce/errors.hpp"
#include "cce/synth.hpp"
#include "fixtures.hpp"

using namespace cce;

TEST_SUITE("digraph") {

TEST_CASE("construction sorts arcs and indexes neighborhoods") {
    const Digraph d(4, {{3, 1}, {1, 2}, {1, 4}, {2, 1}});
    CHECK(d.order() == 4);
    CHECK(d.arc_count() == 4);
    CHECK(d.arcs() == std::vector<Arc>{{1, 2}, {1, 4}, {2, 1}, {3, 1}});
    CHECK(d.has_arc(3, 1));
    CHECK_FALSE(d.has_arc(1, 3));
    CHECK(std::vector<Vertex>(d.in_neighbors(1).begin(), d.in_neighbors(1).end()) ==
          std::vector<Vertex>{2, 3});
    CHECK(d.out_degree(1) == 2);
    CHECK(d.in_degree(4) == 1);
}

TEST_CASE("loops, out-of-range vertices and parallel arcs are rejected") {
    CHECK_THROWS_AS(Digraph(3, {{1, 1}}), InvalidVertex);
    CHECK_THROWS_AS(Digraph(3, {{1, 4}}), InvalidVertex);
    CHECK_THROWS_AS(Digraph(3, {{0, 1}}), InvalidVertex);
    CHECK_THROWS_AS(Digraph(3, {{1, 2}, {1, 2}}), ParseError);
    CHECK_THROWS_AS(Digraph(-1), BadParameters);
    CHECK_NOTHROW(Digraph(2, {{1, 2}, {2, 1}}));  // opposite arcs are simple
}

TEST_CASE("is_bounded") {
    CHECK(is_bounded(Digraph(5), kBound22));
    CHECK(is_bounded(fixtures::d5(), kBound22));
    const Digraph star(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK_FALSE(is_bounded(star, kBound22));
    CHECK(is_bounded(star, {1, 3}));
    CHECK(is_bounded(reverse(star), {3, 1}));
    CHECK_FALSE(is_bounded(star, {0, 3}));  // leaves have indegree one
}

TEST_CASE("is_acyclic") {
    CHECK(is_acyclic(Digraph(1)));
    CHECK(is_acyclic(fixtures::d5()));
    CHECK_FALSE(is_acyclic(build_rotation(3, 1)));
    CHECK_FALSE(is_acyclic(Digraph(2, {{1, 2}, {2, 1}})));
    for (int n = 2; n <= 4; ++n)
        for (const auto& arcs : oracle::all_labeled(n, false)) {
            std::vector<Arc> list;
            for (auto [u, v] : arcs) list.push_back({u, v});
            REQUIRE(is_acyclic(Digraph(n, list)) == oracle::acyclic(n, arcs));
        }
}

TEST_CASE("reverse") {
    CHECK(reverse(Digraph(3)) == Digraph(3));
    CHECK(reverse(Digraph(2, {{1, 2}})) == Digraph(2, {{2, 1}}));
    CHECK(reverse(reverse(fixtures::d5())) == fixtures::d5());
}

TEST_CASE("disjoint_union") {
    const Digraph a(2, {{1, 2}});
    CHECK(disjoint_union(a, Digraph(0)) == a);
    CHECK(disjoint_union(Digraph(0), a) == a);
    CHECK(disjoint_union(a, a) == Digraph(4, {{1, 2}, {3, 4}}));
    const Digraph both = disjoint_union(fixtures::d5(), fixtures::d5());
    CHECK(both.order() == 18);
    CHECK(is_bounded(both, kBound22));
    CHECK(is_acyclic(both));
}

TEST_CASE("remove_arcs") {
    const Digraph d = build_rotation(3, 1);
    CHECK(remove_arcs(d, {}) == d);
    const Arc first{1, 2};
    CHECK(remove_arcs(d, std::span<const Arc>(&first, 1)).arc_count() == 5);
    const Digraph single(2, {{1, 2}});
    CHECK(remove_arcs(single, std::span<const Arc>(&first, 1)) == Digraph(2));
    const Arc missing{2, 1};
    CHECK_THROWS_AS(remove_arcs(single, std::span<const Arc>(&missing, 1)), MissingArc);
}

TEST_CASE("relabel, sources and sinks") {
    const Digraph d(3, {{1, 2}, {2, 3}});
    const std::vector<Vertex> perm{3, 1, 2};
    CHECK(relabel(d, perm) == Digraph(3, {{3, 1}, {1, 2}}));
    CHECK(sources(d) == std::vector<Vertex>{1});
    CHECK(sinks(d) == std::vector<Vertex>{3});
    const std::vector<Vertex> bad{1, 1, 2};
    CHECK_THROWS_AS(relabel(d, bad), BadParameters);
}

TEST_CASE("text format round-trips bit-exactly") {
    const std::string text = "digraph 3\n1 2\n2 3\n3 1\n";
    const Digraph d = parse_digraph(text);
    CHECK(format_digraph(d) == text);
    CHECK(parse_digraph("digraph 3\n\n# note\n3 1\n1 2\n   2 3\n") == d);
    const std::vector<std::string> notes{"hello"};
    CHECK(format_digraph(d, notes) == "digraph 3\n# hello\n1 2\n2 3\n3 1\n");
    CHECK(format_digraph(Digraph(0)) == "digraph 0\n");
}

TEST_CASE("text format errors") {
    CHECK_THROWS_AS(parse_digraph(""), ParseError);
    CHECK_THROWS_AS(parse_digraph("graph 3\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph x\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph 3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph 3\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph 3\n2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph 3\n1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_digraph("digraph 3\n1 b\n"), ParseError);
    CHECK_THROWS_AS(load_digraph("/nonexistent/file.dg"), ParseError);
}

TEST_CASE("reference data files match the built-in digraphs") {
    CHECK(load_digraph(fixtures::data_path("acyclic_triangle.dg")) == fixtures::d5());
    CHECK(load_digraph(fixtures::data_path("acyclic_square.dg")) == fixtures::d6());
}

TEST_CASE("dot output is deterministic") {
    std::ostringstream out;
    write_dot(out, Digraph(2, {{2, 1}}));
    CHECK(out.str() == "digraph D {\n  1;\n  2;\n  2 -> 1;\n}\n");
}

}  // TEST_SUITE
