#include "fixtures.hpp"

#include "bpoly/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace bpoly;
using fx::c;
using fx::q;
using fx::x;
using fx::y;
using fx::z;

TEST_CASE("b_poly reproduces the worked examples") {
    CHECK(b_poly(fx::A1()) == fx::B_A1());
    CHECK(b_poly(fx::T_ac()) == fx::B_Tac());
    CHECK(b_poly(fx::M1_digraph()) == fx::B_M1());
    CHECK(b_poly(fx::T_cyc()) == fx::B_Tcyc());
    CHECK(b_poly(build_digraph(1, {})) == q());
    CHECK(b_poly(Digraph(0, {})) == c(1));
}

TEST_CASE("b_poly enforces the vertex bound") {
    CHECK_THROWS_AS(b_poly(Digraph(5, {}), 4), PreconditionError);
    CHECK_THROWS_AS(b_eval_direct(Digraph(6, {}), 10, 1000), PreconditionError);
}

TEST_CASE("direct evaluation examples") {
    CHECK(b_eval_direct(fx::A1(), 2) == c(2) + y() + z());
    CHECK(b_eval_direct(fx::T_cyc(), 1) == c(1));
    CHECK(b_eval_direct(fx::T_ac(), 3) == fx::B_Tac().eval({{"q", 3}}));
}

TEST_CASE("surjection enumerations agree with each other and with direct colorings") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            MultiPoly b = b_poly(d);
            CHECK(b == b_poly_filtered(d));
            for (int qv = 1; qv <= 3; ++qv) CHECK(b.eval({{"q", qv}}) == b_eval_direct(d, qv));
        }
}

TEST_CASE("basic properties on small digraphs") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 3)) {
            MultiPoly b = b_poly(d);
            CHECK(b == b.rename("y", "t").rename("z", "y").rename("t", "z"));
            std::vector<int> all(d.num_arcs());
            std::iota(all.begin(), all.end(), 0);
            CHECK(b_poly(modify(d, {}, {}, all)) == b);
            CHECK(b.degree("q") == n);
            CHECK(b.eval({{"y", 1}, {"z", 1}}) == pow(q(), n));
            int comps = count_components(d);
            MultiPoly qc = pow(q(), comps);
            CHECK(b.eval({{"y", 0}, {"z", 0}}) == qc);
            CHECK_NOTHROW(exact_divide(b, qc));
            for (const auto& [k, coef] : falling_factorial_coeffs(b))
                for (const auto& [e, v] : coef.terms()) {
                    CHECK(v >= 0);
                    CHECK(v.get_den() == 1);
                }
            CHECK(b.value({{"q", 2}, {"y", 1}, {"z", 0}}) == Rational(count_directed_cuts(d)));
        }
}

TEST_CASE("loops and disjoint unions") {
    Digraph with_loop = build_digraph(2, {{1, 2}, {2, 2}});
    CHECK(b_poly(with_loop) == fx::B_A1());
    CHECK(b_poly(fx::A1().disjoint_union(fx::T_cyc())) == fx::B_A1() * fx::B_Tcyc());
}

TEST_CASE("potts and tutte examples") {
    Graph k2(2, {{1, 2}});
    CHECK(potts(k2) == q() + q() * (q() - c(1)) * y());
    CHECK(tutte(k2) == x());
    Graph tri(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(tutte(tri) == x() * x() + x() + y());
    CHECK(tutte(Graph(1, {{1, 1}})) == y());
    for (int qv = 1; qv <= 3; ++qv) CHECK(potts(tri).eval({{"q", qv}}) == potts_direct(tri, qv));
}

TEST_CASE("potts from b on every small graph") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : enumerate_graphs(n, 3)) {
            MultiPoly p = potts(g);
            // a doubled edge is one ascent plus one descent under any bichromatic coloring
            CHECK(b_poly(g.doubled()).eval({{"z", 1}}) == p);
            CHECK(b_poly(g.oriented()).substitute("z", y()) == p);
        }
}

TEST_CASE("chromatic variants") {
    CHECK(chromatic(fx::P3(), ChromaticKind::Strict) == fx::ff(3) * make_rational(1, 6));
    CHECK(chromatic(fx::T_cyc(), ChromaticKind::Strict).is_zero());
    CHECK(chromatic(fx::T_cyc(), ChromaticKind::Weak) == q());
    CHECK(chromatic(fx::P3(), ChromaticKind::Weak) == q() * (q() + c(1)) * (q() + c(2)) * make_rational(1, 6));
    CHECK(poly_from_binomial_counts(strict_chromatic_counts(fx::T_ac())) == chromatic(fx::T_ac(), ChromaticKind::Strict));
    CHECK(poly_from_binomial_counts(weak_chromatic_counts(fx::T_cyc())) == q());
    CHECK(chromatic(MixedGraph::from_graph(Graph(2, {{1, 2}}))) == q() * (q() - c(1)));
    CHECK(chromatic(fx::M1()) == mixed_chromatic_direct(fx::M1()));
}

TEST_CASE("t polynomials match the worked examples") {
    MixedGraph a1 = MixedGraph::oriented(fx::A1());
    CHECK(t_mixed(a1, 1) == (x() * y() + x() - y()) * make_rational(1, 2));
    CHECK(t_mixed(a1, 2) == x() * make_rational(1, 2));
    MixedGraph k2 = MixedGraph::from_graph(Graph(2, {{1, 2}}));
    CHECK(t_mixed(k2, 1) == x());
    CHECK(t_mixed(k2, 2) == x());

    auto X = x(), Y = y();
    MultiPoly t1 = (pow(X, 2) * pow(Y, 3) + c(2) * pow(X, 2) * pow(Y, 2) - c(2) * X * pow(Y, 3) + c(2) * pow(X, 2) * Y -
                    X * pow(Y, 2) + pow(Y, 3) + pow(X, 2) - X * Y - pow(Y, 2) + X + Y) *
                   make_rational(1, 6);
    MultiPoly t2 = (c(-1) * pow(X, 2) * pow(Y, 2) + c(2) * pow(X, 2) * Y - X * pow(Y, 2) + c(2) * pow(X, 2) +
                    c(2) * X * Y + c(2) * pow(Y, 2) + c(2) * X + c(2) * Y) *
                   make_rational(1, 12);
    // the displayed degree-5 polynomial is T^(1) of the transitive triangle
    CHECK(t_mixed(MixedGraph::oriented(fx::T_ac()), 1) == t1);
    MultiPoly m1 = (pow(X, 2) * pow(Y, 2) + c(4) * pow(X, 2) * Y + pow(X, 2) - c(2) * X * pow(Y, 2) + X * Y + X +
                    pow(Y, 2) + Y) *
                   make_rational(1, 6);
    CHECK(t_mixed(fx::M1(), 1) == m1);
    CHECK(t_mixed(fx::M1(), 2) == t2);
    CHECK(t_mixed(fx::M1(), 1).value({{"x", 2}, {"y", 0}}) == 1);
    CHECK(t_mixed(fx::M1(), 2).value({{"x", 0}, {"y", 2}}) == 1);
}

TEST_CASE("t polynomials of graphs are tutte polynomials") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& g : enumerate_graphs(n, 3)) {
            MixedGraph m = MixedGraph::from_graph(g);
            MultiPoly t = tutte(g);
            CHECK(t_mixed(m, 1) == t);
            CHECK(t_mixed(m, 2) == t);
        }
}

TEST_CASE("readoff examples") {
    auto r = readoff(fx::B_Tac(), fx::T_ac());
    CHECK(r.acyclic_arc_count == 3);
    CHECK(r.scc_count == 3);
    CHECK(r.max_path_condensation == 3);
    auto s = readoff(fx::B_Tcyc(), fx::T_cyc());
    CHECK(s.acyclic_arc_count == 0);
    CHECK(s.scc_count == 1);
    CHECK(readoff(fx::B_A1(), fx::A1()).directed_cut_count == 3);
}

TEST_CASE("readoffs agree with structure") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& d : enumerate_digraphs(n, 4)) {
            auto s = structure(d);
            auto r = readoff(b_poly(d), d);
            auto cyc = cyclic_arcs(d);
            CHECK(r.acyclic_arc_count == std::count(cyc.begin(), cyc.end(), false));
            CHECK(r.scc_count == s.scc_count);
            CHECK(r.max_path_condensation == *structure(s.acyclic_quotient).longest_path_arcs + 1);
        }
}

namespace {

MultiPoly permutation_sum(int n, int (*stat)(const std::vector<int>&)) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    int total = n * (n - 1) / 2;
    MultiPoly out;
    do {
        int k = stat(s);
        out += pow(y(), total - k) * pow(z(), k);
    } while (std::next_permutation(s.begin(), s.end()));
    return out;
}

int inversions(const std::vector<int>& s) {
    int k = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) k += s[i] > s[j];
    return k;
}

int major_index(const std::vector<int>& s) {
    int k = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) k += static_cast<int>(i) + 1;
    return k;
}

}  // namespace

TEST_CASE("top coefficient gives permutation statistics") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::pair<int, int>> tour, thick;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) tour.emplace_back(u, v);
        for (int i = 1; i < n; ++i)
            for (int k = 0; k < i; ++k) thick.emplace_back(i, i + 1);
        Rational nf(factorial(n));
        CHECK(b_poly(build_digraph(n, tour)).coeff("q", n) * nf == permutation_sum(n, inversions));
        CHECK(b_poly(build_digraph(n, thick)).coeff("q", n) * nf == permutation_sum(n, major_index));
    }
}
