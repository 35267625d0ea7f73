#include <doctest.h>

#include <algorithm>

#include "relroots/graph.hpp"
#include "relroots/rng.hpp"

using namespace relroots;

namespace {

Multigraph random_connected(SplitMix64& rng, int n, std::uint64_t threshold_bits) {
    for (;;) {
        Multigraph g;
        g.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((rng.next() >> 32) < threshold_bits) g.add_edge(i, j);
        if (is_connected(g)) return g;
    }
}

std::vector<int> sorted_degrees(const Multigraph& g) {
    std::vector<int> deg(g.n, 0);
    for (const auto& [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

}  // namespace

TEST_CASE("family constructions carry the advertised shapes") {
    auto c4 = make_cycle(4);
    CHECK(c4.graph.n == 4);
    CHECK(c4.graph.m() == 4);
    CHECK(c4.graph.corank() == 1);

    auto th = make_theta(1, 2, 2);
    CHECK(th.graph.n == 4);
    CHECK(th.graph.m() == 5);
    CHECK(th.graph.corank() == 2);
    CHECK(is_connected(th.graph));

    auto hk = make_hk_gadget(3, 1);
    CHECK(hk.graph.n == 4);
    CHECK(hk.graph.m() == 4);
    REQUIRE(hk.terminals.has_value());
    CHECK(hk.terminals->s == 0);
    CHECK(hk.terminals->t == 2);

    auto hk42 = make_hk_gadget(4, 2);
    CHECK(hk42.graph.n == 5);
    CHECK(hk42.graph.m() == 2 + 3);

    auto k4e = make_k4_minus_e();
    CHECK(k4e.graph.n == 4);
    CHECK(k4e.graph.m() == 5);
    CHECK_FALSE(k4e.graph.has_edge(0, 1));  // u, v are the nonadjacent pair

    CHECK(make_complete(4).graph.m() == 6);
    CHECK(make_bundle(2).graph.m() == 2);
    CHECK_FALSE(is_simple(make_bundle(2).graph));
    CHECK(make_path(5).graph.m() == 4);

    // Theta with two unit paths is a genuine multigraph.
    auto th114 = make_theta(1, 1, 4);
    CHECK(th114.graph.n == 5);
    CHECK(th114.graph.m() == 6);
    CHECK_FALSE(is_simple(th114.graph));
}

TEST_CASE("family parameter validation") {
    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_bundle(0), std::invalid_argument);
    CHECK_THROWS_AS(make_path(1), std::invalid_argument);
    CHECK_THROWS_AS(make_theta(2, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_hk_gadget(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_hk_gadget(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_erdos_renyi(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("family specs parse") {
    auto fg = make_family(parse_family_spec("theta:1,2,2"));
    CHECK(fg.graph.n == 4);
    CHECK(make_family(parse_family_spec("cycle:5")).graph.m() == 5);
    CHECK(make_family(parse_family_spec("k4me")).graph.m() == 5);
    CHECK(make_family(parse_family_spec("hk:4,2")).graph.n == 5);
    CHECK(make_family(parse_family_spec("tree:6")).graph.m() == 5);
    CHECK_THROWS_AS(parse_family_spec("nope:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("cycle:3,4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("cycle:x"), std::invalid_argument);

    // Seeded Erdos-Renyi is reproducible.
    auto a = make_family(parse_family_spec("er:10,0.5,7"));
    auto b = make_erdos_renyi(10, 0.5, 7);
    CHECK(a.graph.edges == b.graph.edges);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(make_cycle(3).graph));
    CHECK(is_connected(make_theta(1, 2, 2).graph));
    Multigraph two;
    two.n = 2;
    CHECK_FALSE(is_connected(two));
    Multigraph one;
    one.n = 1;
    CHECK(is_connected(one));
}

TEST_CASE("bridges") {
    auto path3 = make_path(3).graph;
    CHECK(bridges(path3).size() == 2);
    CHECK(bridges(make_cycle(5).graph).empty());
    CHECK(bridges(make_bundle(2).graph).empty());
    Multigraph two;
    two.n = 2;
    CHECK_THROWS_AS(bridges(two), std::invalid_argument);

    // Definition cross-check: e is a bridge iff deleting it splits the graph.
    SplitMix64 rng{31};
    for (int round = 0; round < 25; ++round) {
        Multigraph g = random_connected(rng, 6, 0x60000000u);
        auto bs = bridges(g);
        for (int e = 0; e < g.m(); ++e) {
            bool listed = std::find(bs.begin(), bs.end(), e) != bs.end();
            bool splits = component_count(delete_edge(g, e)) == 2;
            CHECK(listed == splits);
        }
    }
}

TEST_CASE("cutset counts") {
    CHECK(count_cutsets(make_cycle(3).graph, 2) == 3);
    CHECK(count_cutsets(make_complete(4).graph, 2) == 0);
    CHECK(count_cutsets(make_theta(1, 2, 2).graph, 2) == 2);
    CHECK(count_cutsets(make_theta(1, 1, 4).graph, 2) == 6);
    CHECK(count_cutsets(make_path(3).graph, 1) == 2);
    CHECK(count_cutsets(make_cycle(4).graph, 0) == 0);
    CHECK_THROWS_AS(count_cutsets(make_cycle(4).graph, 5), std::invalid_argument);

    // i <= 2 works beyond the enumeration cap, larger i refuses.
    auto k8 = make_complete(8).graph;  // m = 28
    CHECK(count_cutsets(k8, 2) == 0);
    CHECK_THROWS_AS(count_cutsets(k8, 3), std::invalid_argument);
}

TEST_CASE("delete and contract") {
    auto tri = make_cycle(3).graph;
    auto contracted = contract_edge(tri, 2);
    CHECK(contracted.n == 2);
    CHECK(contracted.m() == 2);  // parallel pair; the loop copy is dropped

    auto b2 = make_bundle(2).graph;
    CHECK(delete_edge(b2, 0).m() == 1);

    auto p3 = make_path(3).graph;
    auto c = contract_edge(p3, 0);
    CHECK(c.n == 2);
    CHECK(c.m() == 1);

    CHECK_THROWS_AS(delete_edge(p3, 9), std::invalid_argument);
    CHECK_THROWS_AS(contract_edge(p3, -1), std::invalid_argument);
}

TEST_CASE("edge substitution") {
    // Single edge with a triangle whose terminals are adjacent: a triangle.
    auto g = make_path(2).graph;
    auto tri = make_cycle(3).graph;
    auto sub = edge_substitute(g, tri, Terminals{0, 1});
    CHECK(sub.n == 3);
    CHECK(sub.m() == 3);
    CHECK(is_connected(sub));
    CHECK(is_simple(sub));

    // Bundle(2) with K4-e: simple, n = 6, m = 10.
    auto k4e = make_k4_minus_e();
    auto sub2 = edge_substitute(make_bundle(2).graph, k4e.graph, *k4e.terminals);
    CHECK(sub2.n == 6);
    CHECK(sub2.m() == 10);
    CHECK(is_simple(sub2));

    // Cycle(3) with the (3,1) gadget: n = 9, m = 12.
    auto hk = make_hk_gadget(3, 1);
    auto sub3 = edge_substitute(make_cycle(3).graph, hk.graph, *hk.terminals);
    CHECK(sub3.n == 9);
    CHECK(sub3.m() == 12);
    CHECK(is_connected(sub3));

    // Substituting a single edge changes nothing structurally.
    SplitMix64 rng{77};
    for (int round = 0; round < 10; ++round) {
        Multigraph base = random_connected(rng, 6, 0x70000000u);
        auto same = edge_substitute(base, make_path(2).graph, Terminals{0, 1});
        CHECK(same.n == base.n);
        CHECK(sorted_degrees(same) == sorted_degrees(base));
    }

    CHECK_THROWS_AS(edge_substitute(g, tri, Terminals{1, 1}), std::invalid_argument);
    Multigraph disc;
    disc.n = 3;
    disc.add_edge(0, 1);
    CHECK_THROWS_AS(edge_substitute(g, disc, Terminals{0, 1}), std::invalid_argument);
}

TEST_CASE("edge list round trips and rejects malformed input") {
    auto tri = parse_edge_list("3 3\n0 1\n1 2\n0 2\n");
    CHECK(tri.n == 3);
    CHECK(tri.m() == 3);

    auto b2 = parse_edge_list("2 2\n0 1\n0 1");
    CHECK_FALSE(is_simple(b2));

    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1\n1 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);

    auto g = make_theta(2, 2, 3).graph;
    auto round = parse_edge_list(to_edge_list(g));
    CHECK(round.n == g.n);
    CHECK(round.edges == g.edges);
}

TEST_CASE("graph6 decoding matches hand-checked strings") {
    auto p3 = parse_graph6("Bg");  // 2-path on 3 vertices
    CHECK(p3.n == 3);
    CHECK(p3.m() == 2);

    auto k3 = parse_graph6("Bw");
    CHECK(k3.n == 3);
    CHECK(k3.m() == 3);

    auto k4 = parse_graph6("C~");
    CHECK(k4.n == 4);
    CHECK(k4.m() == 6);

    CHECK(parse_graph6(">>graph6<<C~").m() == 6);

    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // truncated bits
    CHECK_THROWS_AS(parse_graph6("C~~"), std::invalid_argument);  // oversized
    CHECK_THROWS_AS(parse_graph6("B\x1f"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);  // long form
}

TEST_CASE("graph6 round trip preserves adjacency") {
    CHECK(to_graph6(parse_graph6("Bw")) == "Bw");
    SplitMix64 rng{123};
    for (int round = 0; round < 30; ++round) {
        Multigraph g = random_connected(rng, 3 + static_cast<int>(rng.next_below(8)), 0x60000000u);
        Multigraph back = parse_graph6(to_graph6(g));
        auto se = g.edges;
        std::sort(se.begin(), se.end());
        auto be = back.edges;
        std::sort(be.begin(), be.end());
        CHECK(back.n == g.n);
        CHECK(se == be);
    }
    CHECK_THROWS_AS(to_graph6(make_bundle(2).graph), std::invalid_argument);
}
