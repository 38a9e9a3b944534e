#include "fixtures.hpp"

#include "bpoly/error.hpp"
#include "bpoly/format.hpp"

#include <doctest.h>

using namespace bpoly;

TEST_CASE("build_digraph validates endpoints") {
    CHECK(fx::A1().num_arcs() == 1);
    CHECK_THROWS_AS(build_digraph(2, {{1, 3}}), PreconditionError);
    CHECK_THROWS_AS(build_digraph(2, {{0, 1}}), PreconditionError);
}

TEST_CASE("modify examples") {
    Digraph a = modify(fx::A1(), {}, {0}, {});
    CHECK(a.num_vertices() == 1);
    CHECK(a.num_arcs() == 0);

    Digraph r = modify(fx::T_ac(), {}, {}, {0, 1, 2});
    CHECK(r == build_digraph(3, {{2, 1}, {3, 2}, {3, 1}}));

    Digraph l = modify(fx::T_cyc(), {}, {0, 1}, {});
    CHECK(l == build_digraph(1, {{1, 1}}));

    CHECK_THROWS_AS(modify(fx::T_ac(), {0}, {0}, {}), PreconditionError);
    CHECK_THROWS_AS(modify(fx::T_ac(), {5}, {}, {}), PreconditionError);
}

TEST_CASE("contraction renumbers by smallest merged label") {
    Digraph d = build_digraph(4, {{2, 4}, {1, 3}, {3, 4}});
    Digraph c = modify(d, {}, {0}, {});
    // classes {1}, {2,4}, {3} -> 1, 2, 3
    CHECK(c == build_digraph(3, {{1, 3}, {3, 2}}));
}

TEST_CASE("deletion and contraction commute") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            int m = d.num_arcs();
            for (int del = 0; del < (1 << m); ++del)
                for (int con = 0; con < (1 << m); ++con) {
                    if (del & con) continue;
                    std::vector<int> dl, cl;
                    for (int i = 0; i < m; ++i) {
                        if (del >> i & 1) dl.push_back(i);
                        if (con >> i & 1) cl.push_back(i);
                    }
                    Digraph both = modify(d, dl, cl, {});
                    // delete first, then contract the surviving images
                    Digraph d1 = modify(d, dl, {}, {});
                    std::vector<int> cl1;
                    int k = 0;
                    for (int i = 0; i < m; ++i) {
                        if (del >> i & 1) continue;
                        if (con >> i & 1) cl1.push_back(k);
                        ++k;
                    }
                    CHECK(modify(d1, {}, cl1, {}) == both);
                    // contract first, then delete
                    Digraph d2 = modify(d, {}, cl, {});
                    std::vector<int> dl2;
                    k = 0;
                    for (int i = 0; i < m; ++i) {
                        if (con >> i & 1) continue;
                        if (del >> i & 1) dl2.push_back(k);
                        ++k;
                    }
                    CHECK(modify(d2, dl2, {}, {}) == both);
                }
        }
}

TEST_CASE("structure examples") {
    auto s = structure(fx::T_cyc());
    CHECK(s.components == 1);
    CHECK(s.scc_count == 1);
    CHECK_FALSE(s.is_acyclic);
    CHECK(s.is_totally_cyclic);
    CHECK_FALSE(s.longest_path_arcs.has_value());

    auto t = structure(fx::T_ac());
    CHECK(t.scc_count == 3);
    CHECK(t.is_acyclic);
    CHECK(t.longest_path_arcs == 2);
    CHECK(t.profile == std::vector<int>{1, 1, 1});

    auto p = structure(fx::P3());
    CHECK(p.profile == std::vector<int>{1, 1, 1});
    CHECK(p.longest_path_arcs == 2);

    auto j = structure(fx::Join());
    CHECK(j.profile == std::vector<int>{2, 1});

    auto loop = structure(build_digraph(1, {{1, 1}}));
    CHECK_FALSE(loop.is_acyclic);
    CHECK(loop.is_totally_cyclic);
}

TEST_CASE("structure invariants on small digraphs") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 4)) {
            auto s = structure(d);
            CHECK(s.is_acyclic == !linear_extensions(d).empty());
            CHECK(s.acyclic_quotient.num_vertices() == s.scc_count);
            CHECK(structure(s.acyclic_quotient).is_acyclic);
            if (s.is_acyclic && s.is_totally_cyclic) CHECK(d.num_arcs() == 0);
            // totally cyclic iff every arc lies on a directed cycle
            auto cyc = cyclic_arcs(d);
            bool all = std::all_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
            bool none = std::none_of(cyc.begin(), cyc.end(), [](bool b) { return b; });
            CHECK(all == s.is_totally_cyclic);
            CHECK(none == s.is_acyclic);
        }
}

TEST_CASE("orientations") {
    auto os = enumerate_orientations(fx::M1());
    REQUIRE(os.size() == 2);
    int acyclic = 0, cyclic = 0;
    for (const auto& o : os) {
        acyclic += is_acyclic(o);
        cyclic += is_totally_cyclic(o);
    }
    CHECK(acyclic == 1);
    CHECK(cyclic == 1);
    CHECK(os[0] == build_digraph(3, {{1, 2}, {1, 3}, {3, 2}}));

    Graph g(3, {{1, 2}, {2, 3}});
    CHECK(enumerate_orientations(MixedGraph::from_graph(g)).size() == 4);
    auto single = enumerate_orientations(MixedGraph::oriented(fx::T_ac()));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == fx::T_ac());
}

TEST_CASE("pairings") {
    auto ps = enumerate_pairings(fx::M1_digraph());
    CHECK(ps.size() == 2);
    auto loops = enumerate_pairings(build_digraph(1, {{1, 1}, {1, 1}, {1, 1}}));
    CHECK(loops.size() == 4);  // all singletons, or one of three pairs
    CHECK_THROWS_AS(MixedGraph(fx::T_ac(), {1, 0, -1}), PreconditionError);
}

TEST_CASE("linear extensions") {
    auto le = linear_extensions(build_digraph(3, {{1, 2}, {1, 3}}));
    CHECK(le == std::vector<std::vector<int>>{{1, 2, 3}, {1, 3, 2}});
    CHECK(linear_extensions(fx::T_cyc()).empty());
    CHECK(linear_extensions(fx::P3()) == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("digraph enumeration counts") {
    CHECK(enumerate_digraphs(1, 1).size() == 2);
    CHECK(enumerate_digraphs(2, 1).size() == 5);
    CHECK(enumerate_digraphs(2, 2).size() == 15);
    CHECK(enumerate_digraphs(4, 5).size() == 20349);
    DigraphStream s(2, 2);
    int k = 0;
    while (s.next()) ++k;
    s.reset();
    int k2 = 0;
    while (s.next()) ++k2;
    CHECK(k == k2);
    CHECK(enumerate_graphs(2, 2).size() == 10);
}

TEST_CASE("text formats round trip") {
    for (const auto& d : enumerate_digraphs(3, 2)) {
        CHECK(parse_digraph(render(d)) == d);
        CHECK(parse_digraph(render_inline(d)) == d);
    }
    MixedGraph m = fx::M1();
    CHECK(parse_mixed(render(m)) == m.normalized());
    CHECK(parse_mixed(render_inline(m)) == m.normalized());
    Graph g(3, {{1, 2}, {2, 2}});
    CHECK(parse_graph(render(g)) == g);
    auto in = parse_input("mixed 3\n1 -- 2\n1 -> 3\n3->2\n");
    REQUIRE(std::holds_alternative<MixedGraph>(in));
    CHECK(std::get<MixedGraph>(in) == fx::M1());
    CHECK(std::get<Digraph>(parse_input(R"({"n":2,"arcs":[[1,2]]})")) == fx::A1());
    CHECK_THROWS_AS(parse_input("digraph 2\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_input("graf 2\n"), ParseError);
    CHECK_THROWS_AS(parse_input("digraph 2\n1\n"), ParseError);
}
