#include <doctest.h>

#include <set>

#include "cce/cce.hpp"
#include "cce/enumerate.hpp"
#include "cce/errors.hpp"
#include "cce/verify.hpp"
#include "fixtures.hpp"

using namespace cce;

namespace {

std::set<oracle::ArcList> labeled_set(int n, bool acyclic) {
    std::set<oracle::ArcList> out;
    EnumerationConfig cfg;
    cfg.n = n;
    cfg.acyclic = acyclic;
    const auto count = for_each_digraph(cfg, [&](const Digraph& d) {
        REQUIRE(out.insert(oracle::arcs_of(d)).second);  // exactly once
    });
    REQUIRE(count == out.size());
    return out;
}

std::set<oracle::ArcList> oracle_set(int n, bool acyclic) {
    const auto all = oracle::all_labeled(n, acyclic);
    std::set<oracle::ArcList> out;
    for (auto arcs : all) {
        std::sort(arcs.begin(), arcs.end());
        out.insert(arcs);
    }
    return out;
}

std::size_t reduced_classes(int n, bool acyclic) {
    EnumerationConfig cfg;
    cfg.n = n;
    cfg.acyclic = acyclic;
    cfg.isomorph_reduction = true;
    std::set<std::string> forms;
    const auto count = for_each_digraph(cfg, [&](const Digraph& d) {
        REQUIRE(forms.insert(oracle::canonical(n, oracle::arcs_of(d))).second);
    });
    REQUIRE(count == forms.size());
    return forms.size();
}

BitDigraph permuted(const BitDigraph& g, const std::vector<int>& perm) {
    BitDigraph h;
    h.n = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.has_arc(i, j)) h.add_arc(perm[i], perm[j]);
    return h;
}

}  // namespace

TEST_SUITE("enumerate") {

TEST_CASE("closed-form counts for tiny orders") {
    EnumerationConfig cfg;
    cfg.n = 3;
    CHECK(for_each_bitdigraph(cfg, [](const BitDigraph&) {}) == 64);  // 4 choices per vertex
    cfg.n = 1;
    CHECK(enumerate(cfg).size() == 1);
    cfg.n = 0;
    CHECK(enumerate(cfg).size() == 1);
    cfg.n = 2;
    cfg.acyclic = true;
    const auto two = enumerate(cfg);
    CHECK(two.size() == 3);
    std::set<std::vector<Arc>> arcs;
    for (const auto& d : two) arcs.insert(d.arcs());
    CHECK(arcs == std::set<std::vector<Arc>>{{}, {{1, 2}}, {{2, 1}}});
}

TEST_CASE("labeled streams equal the all-subsets oracle") {
    for (int n = 1; n <= 4; ++n) {
        CHECK(labeled_set(n, false) == oracle_set(n, false));
        CHECK(labeled_set(n, true) == oracle_set(n, true));
    }
}

TEST_CASE("labeled acyclic counts match known totals") {
    // Labeled DAG counts 1, 3, 25; the degree bound only bites from n = 4.
    const std::size_t expected[] = {1, 3, 25};
    for (int n = 1; n <= 3; ++n) CHECK(labeled_set(n, true).size() == expected[n - 1]);
}

TEST_CASE("isomorph reduction yields one digraph per class") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(reduced_classes(n, false) == oracle::iso_classes(n, false));
        CHECK(reduced_classes(n, true) == oracle::iso_classes(n, true));
    }
    // Unlabeled digraphs and DAGs on three vertices: 16 and 6.
    CHECK(reduced_classes(3, false) == 16);
    CHECK(reduced_classes(3, true) == 6);
}

TEST_CASE("canonical labeling is unique among all relabelings") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const bool acyclic = seed % 2 == 0;
        const BitDigraph g = BitDigraph::from_digraph(random_22(n, acyclic, seed));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::vector<std::uint16_t>> canonical;
        do {
            const BitDigraph h = permuted(g, perm);
            if (is_canonical(h)) canonical.insert({h.out.begin(), h.out.begin() + n});
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(canonical.size() == 1);
    }
}

TEST_CASE("topological canonical labeling is unique among topological relabelings") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        const BitDigraph g = BitDigraph::from_digraph(random_22(n, true, seed));
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::vector<std::uint16_t>> canonical;
        do {
            const BitDigraph h = permuted(g, perm);
            bool sorted = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j <= i; ++j)
                    if (h.has_arc(i, j)) sorted = false;
            if (sorted && is_canonical_topological(h))
                canonical.insert({h.out.begin(), h.out.begin() + n});
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(canonical.size() == 1);
    }
}

TEST_CASE("stream order is deterministic and lexicographic per vertex") {
    EnumerationConfig cfg;
    cfg.n = 2;
    const auto two = enumerate(cfg);
    REQUIRE(two.size() == 4);
    CHECK(two[0].arcs().empty());
    CHECK(two[1].arcs() == std::vector<Arc>{{2, 1}});
    CHECK(two[2].arcs() == std::vector<Arc>{{1, 2}});
    CHECK(two[3].arcs() == std::vector<Arc>{{1, 2}, {2, 1}});
    cfg.n = 5;
    cfg.isomorph_reduction = true;
    CHECK(enumerate(cfg) == enumerate(cfg));
}

TEST_CASE("shards partition the stream") {
    for (bool reduce : {false, true})
        for (bool acyclic : {false, true}) {
            EnumerationConfig cfg;
            cfg.n = reduce ? 5 : 4;
            cfg.acyclic = acyclic;
            cfg.isomorph_reduction = reduce;
            std::set<std::vector<Arc>> whole;
            for (const auto& d : enumerate(cfg)) whole.insert(d.arcs());
            for (int total : {2, 3, 7}) {
                std::set<std::vector<Arc>> joined;
                std::size_t sum = 0;
                for (int i = 0; i < total; ++i) {
                    cfg.shard = {i, total};
                    const auto part = enumerate(cfg);
                    sum += part.size();
                    for (const auto& d : part) joined.insert(d.arcs());
                }
                cfg.shard = {};
                CHECK(sum == whole.size());  // disjoint
                CHECK(joined == whole);      // covering
            }
        }
}

TEST_CASE("above the canonical limit acyclic reduction keeps sorted representatives") {
    EnumerationConfig cfg;
    cfg.n = 8;
    cfg.acyclic = true;
    cfg.isomorph_reduction = true;
    cfg.shard = {0, 50};
    std::uint64_t seen = 0;
    for_each_bitdigraph(cfg, [&](const BitDigraph& g) {
        ++seen;
        for (int i = 0; i < g.n; ++i) REQUIRE((g.out[i] & ((1u << (i + 1)) - 1)) == 0);
    });
    CHECK(seen > 0);
}

TEST_CASE("config validation") {
    EnumerationConfig cfg;
    cfg.n = 10;
    CHECK_THROWS_AS(validate(cfg), BadParameters);
    cfg.n = -1;
    CHECK_THROWS_AS(validate(cfg), BadParameters);
    cfg.n = 3;
    cfg.shard = {2, 2};
    CHECK_THROWS_AS(enumerate(cfg), BadParameters);
    cfg.shard = {0, 0};
    CHECK_THROWS_AS(validate(cfg), BadParameters);
    cfg.shard = {};
    cfg.bound = {-1, 2};
    CHECK_THROWS_AS(validate(cfg), BadParameters);
}

TEST_CASE("bit digraphs") {
    const Digraph d = fixtures::d5();
    const BitDigraph g = BitDigraph::from_digraph(d);
    CHECK(g.to_digraph() == d);
    const auto adj = g.cce_adjacency();
    oracle::EdgeSet edges;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if ((adj[i] >> j) & 1u) edges.insert({i + 1, j + 1});
    CHECK(edges == oracle::cce_edges(d.order(), oracle::arcs_of(d)));
    CHECK_THROWS_AS(BitDigraph::from_digraph(Digraph(10)), BadParameters);
}

TEST_CASE("bounds other than two") {
    EnumerationConfig cfg;
    cfg.n = 3;
    cfg.bound = {1, 1};
    std::size_t brute = oracle::all_labeled(3, false, 1).size();
    CHECK(enumerate(cfg).size() == brute);
}

}  // TEST_SUITE
