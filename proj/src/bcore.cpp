#include "bpoly/bcore.hpp"

#include "bpoly/error.hpp"

#include <algorithm>

namespace bpoly {

namespace {

// Coefficients of binomial(q, p) in powers q^0..q^p.
const std::vector<Rational>& binomial_coeffs(int p) {
    thread_local std::vector<std::vector<Rational>> cache;
    while (static_cast<int>(cache.size()) <= p) {
        int k = static_cast<int>(cache.size());
        std::vector<Rational> c{Rational(1)};
        for (int i = 0; i < k; ++i) {
            // multiply by (q - i)
            std::vector<Rational> next(c.size() + 1, Rational(0));
            for (std::size_t j = 0; j < c.size(); ++j) {
                next[j + 1] += c[j];
                next[j] -= c[j] * i;
            }
            c = std::move(next);
        }
        Rational inv = Rational(1) / Rational(factorial(k));
        for (auto& x : c) x *= inv;
        cache.push_back(std::move(c));
    }
    return cache[p];
}

std::uint64_t checked_power(long base, int exp, std::uint64_t bound) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && r > bound / static_cast<std::uint64_t>(base)) return bound + 1;
        r *= static_cast<std::uint64_t>(base);
    }
    return r;
}

MultiPoly yz_poly(const std::vector<std::int64_t>& counts, int m) {
    MultiPoly p({"y", "z"});
    for (int a = 0; a <= m; ++a)
        for (int d = 0; d <= m; ++d)
            if (auto c = counts[a * (m + 1) + d]) p.add_term({a, d}, Rational(static_cast<long>(c)));
    return p;
}

}  // namespace

ColoringStats coloring_stats(const Digraph& d, const std::vector<int>& f) {
    ColoringStats s;
    for (const auto& a : d.arcs()) {
        int fu = f.at(a.tail - 1), fv = f.at(a.head - 1);
        if (fv > fu)
            ++s.ascents;
        else if (fv < fu)
            ++s.descents;
        else
            ++s.equals;
    }
    return s;
}

SurjectionTable surjection_table(const Digraph& d, bool filtered) {
    SurjectionTable t;
    t.n = d.num_vertices();
    t.m = d.num_arcs();
    t.counts.assign(static_cast<std::size_t>(t.n + 1) * (t.m + 1) * (t.m + 1), 0);
    std::vector<int> tails, heads;
    for (const auto& a : d.arcs()) {
        tails.push_back(a.tail - 1);
        heads.push_back(a.head - 1);
    }
    auto visit = [&](const std::vector<int>& g, int p) {
        int asc = 0, des = 0;
        for (std::size_t i = 0; i < tails.size(); ++i) {
            int gu = g[tails[i]], gv = g[heads[i]];
            asc += gv > gu;
            des += gv < gu;
        }
        ++t.at(p, asc, des);
    };
    if (filtered)
        for_each_surjection_filtered(t.n, visit);
    else
        for_each_surjection(t.n, visit);
    return t;
}

MultiPoly poly_from_table(const SurjectionTable& t) {
    MultiPoly out({"q", "y", "z"});
    Exponents e(3);
    for (int p = 0; p <= t.n; ++p) {
        const auto& bc = binomial_coeffs(p);
        for (int a = 0; a <= t.m; ++a)
            for (int d = 0; d <= t.m; ++d) {
                auto c = t.at(p, a, d);
                if (!c) continue;
                for (int j = 0; j <= p; ++j) {
                    if (sgn(bc[j]) == 0) continue;
                    e = {j, a, d};
                    out.add_term(e, bc[j] * static_cast<long>(c));
                }
            }
    }
    return out;
}

MultiPoly b_poly(const Digraph& d, int vertex_bound) {
    if (d.num_vertices() > vertex_bound)
        throw PreconditionError("b_poly: " + std::to_string(d.num_vertices()) + " vertices exceed the bound " +
                                std::to_string(vertex_bound));
    return poly_from_table(surjection_table(d));
}

MultiPoly b_poly_filtered(const Digraph& d) {
    if (d.num_vertices() > 6) throw PreconditionError("b_poly_filtered: at most 6 vertices");
    return poly_from_table(surjection_table(d, true));
}

MultiPoly b_eval_direct(const Digraph& d, long q, std::uint64_t work_bound) {
    int n = d.num_vertices(), m = d.num_arcs();
    if (q < 0) throw PreconditionError("b_eval_direct: negative q");
    if (checked_power(q, n, work_bound) > work_bound) throw PreconditionError("b_eval_direct: work bound exceeded");
    std::vector<std::int64_t> counts((m + 1) * (m + 1), 0);
    if (q == 0) return n == 0 ? MultiPoly::constant(1, {"y", "z"}) : MultiPoly({"y", "z"});
    std::vector<int> f(n, 1);
    while (true) {
        int asc = 0, des = 0;
        for (const auto& a : d.arcs()) {
            int fu = f[a.tail - 1], fv = f[a.head - 1];
            asc += fv > fu;
            des += fv < fu;
        }
        ++counts[asc * (m + 1) + des];
        int i = 0;
        while (i < n && f[i] == q) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    return yz_poly(counts, m);
}

MultiPoly b_poly_by_interpolation(const Digraph& d, std::uint64_t work_bound) {
    int n = d.num_vertices();
    std::vector<std::pair<Rational, MultiPoly>> pts;
    for (int q = 0; q <= n; ++q) pts.emplace_back(Rational(q), b_eval_direct(d, q, work_bound));
    return interpolate_in_q(pts, n).extended({"q", "y", "z"});
}

MultiPoly potts(const Graph& g) {
    int e = g.num_edges(), n = g.num_vertices();
    if (e > 24) throw PreconditionError("potts: too many edges for the subset expansion");
    // P_G(q,y) = sum_S q^{c(S)} (1-y)^{|S|} y^{|E|-|S|}
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(n + 1) * (e + 1), 0);
    std::vector<Arc> chosen;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        chosen.clear();
        for (int i = 0; i < e; ++i)
            if (mask >> i & 1) chosen.push_back({g.edges()[i].first, g.edges()[i].second});
        int c = count_components(n, chosen);
        ++cnt[c * (e + 1) + static_cast<int>(chosen.size())];
    }
    MultiPoly one_minus_y = MultiPoly::constant(1) - MultiPoly::variable("y");
    MultiPoly out({"q", "y"});
    for (int c = 0; c <= n; ++c)
        for (int s = 0; s <= e; ++s)
            if (auto k = cnt[c * (e + 1) + s])
                out += MultiPoly::monomial("q", c, static_cast<long>(k)) * pow(one_minus_y, s) *
                       MultiPoly::monomial("y", e - s);
    return out;
}

MultiPoly potts_direct(const Graph& g, long q) {
    int n = g.num_vertices(), e = g.num_edges();
    if (checked_power(q, n, default_work_bound) > default_work_bound)
        throw PreconditionError("potts_direct: work bound exceeded");
    std::vector<std::int64_t> counts(e + 1, 0);
    if (q <= 0) return n == 0 ? MultiPoly::constant(1, {"y"}) : MultiPoly({"y"});
    std::vector<int> f(n, 1);
    while (true) {
        int bi = 0;
        for (auto [u, v] : g.edges()) bi += f[u - 1] != f[v - 1];
        ++counts[bi];
        int i = 0;
        while (i < n && f[i] == q) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    MultiPoly out({"y"});
    for (int k = 0; k <= e; ++k)
        if (counts[k]) out.add_term({k}, Rational(static_cast<long>(counts[k])));
    return out;
}

MultiPoly tutte(const Graph& g) {
    int e = g.num_edges(), n = g.num_vertices();
    if (e > 24) throw PreconditionError("tutte: too many edges for the subset expansion");
    std::vector<Arc> all;
    for (auto [u, v] : g.edges()) all.push_back({u, v});
    int cE = count_components(n, all);
    // exponents: i = c(S) - c(E) in [0, n], j = |S| + c(S) - |V| in [0, e]
    std::vector<std::int64_t> cnt(static_cast<std::size_t>(n + 1) * (e + 1), 0);
    std::vector<Arc> chosen;
    for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
        chosen.clear();
        for (int i = 0; i < e; ++i)
            if (mask >> i & 1) chosen.push_back(all[i]);
        int c = count_components(n, chosen);
        ++cnt[(c - cE) * (e + 1) + static_cast<int>(chosen.size()) + c - n];
    }
    MultiPoly xm1 = MultiPoly::variable("x") - MultiPoly::constant(1);
    MultiPoly ym1 = MultiPoly::variable("y") - MultiPoly::constant(1);
    MultiPoly out({"y", "x"});
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= e; ++j)
            if (auto k = cnt[i * (e + 1) + j]) out += pow(xm1, i) * pow(ym1, j) * Rational(static_cast<long>(k));
    return out;
}

MultiPoly chromatic(const Digraph& d, ChromaticKind kind) {
    MultiPoly b = b_poly(d);
    switch (kind) {
        case ChromaticKind::Strict: return b.eval({{"z", 1}}).coeff("y", d.num_arcs());
        case ChromaticKind::Weak: return b.eval({{"y", 0}, {"z", 1}});
        case ChromaticKind::MixedStrict: return chromatic(MixedGraph::oriented(d));
    }
    return {};
}

MultiPoly mixed_chromatic_direct(const MixedGraph& m) {
    int n = m.num_vertices();
    const auto& arcs = m.digraph().arcs();
    std::vector<std::pair<Rational, MultiPoly>> pts;
    for (int q = 1; q <= n + 1; ++q) {
        if (checked_power(q, n, default_work_bound) > default_work_bound)
            throw PreconditionError("mixed chromatic: work bound exceeded");
        long count = 0;
        std::vector<int> f(n, 1);
        while (true) {
            bool ok = true;
            for (int i = 0; i < m.num_arcs() && ok; ++i) {
                int fu = f[arcs[i].tail - 1], fv = f[arcs[i].head - 1];
                ok = m.partner()[i] == -1 ? fu < fv : fu != fv;
            }
            count += ok;
            int i = 0;
            while (i < n && f[i] == q) f[i++] = 1;
            if (i == n) break;
            ++f[i];
        }
        pts.emplace_back(Rational(q), MultiPoly::constant(count));
    }
    if (n == 0) return MultiPoly::constant(1, {"q"});
    return interpolate_in_q(pts, n);
}

MultiPoly mixed_chromatic_from_t1(const MixedGraph& m) {
    MultiPoly t1 = t_mixed(m, 1);
    int c = count_components(m.digraph());
    MultiPoly at0 = t1.eval({{"y", 0}});
    MultiPoly one_minus_q = MultiPoly::constant(1) - MultiPoly::variable("q");
    MultiPoly out = at0.substitute("x", one_minus_q) * MultiPoly::monomial("q", c);
    if ((m.num_vertices() - c) % 2) out = -out;
    return out.extended(merge_vars(out.vars(), {"q"}));
}

MultiPoly chromatic(const MixedGraph& m) {
    MultiPoly direct = mixed_chromatic_direct(m);
    if (!(direct == mixed_chromatic_from_t1(m)))
        throw ArithmeticError("strictly-compatible chromatic polynomial disagrees with the T^(1) formula");
    return direct;
}

std::vector<std::int64_t> strict_chromatic_counts(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<std::int64_t> c(n + 1, 0);
    for (const auto& a : d.arcs())
        if (a.is_loop()) return c;
    for_each_surjection(n, [&](const std::vector<int>& g, int p) {
        for (const auto& a : d.arcs())
            if (g[a.tail - 1] >= g[a.head - 1]) return;
        ++c[p];
    });
    return c;
}

std::vector<std::int64_t> weak_chromatic_counts(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<std::int64_t> c(n + 1, 0);
    for_each_surjection(n, [&](const std::vector<int>& g, int p) {
        for (const auto& a : d.arcs())
            if (g[a.tail - 1] > g[a.head - 1]) return;
        ++c[p];
    });
    return c;
}

MultiPoly poly_from_binomial_counts(const std::vector<std::int64_t>& c, const std::string& var) {
    MultiPoly out({var});
    for (std::size_t p = 0; p < c.size(); ++p) {
        if (!c[p]) continue;
        const auto& bc = binomial_coeffs(static_cast<int>(p));
        for (std::size_t j = 0; j < bc.size(); ++j)
            out.add_term({static_cast<int>(j)}, bc[j] * static_cast<long>(c[p]));
    }
    return out;
}

MultiPoly t_mixed(const MixedGraph& m, int which) {
    if (which == 1) return t_mixed(m, 1, b_poly(m.digraph()));
    return t_mixed(m, which, MultiPoly());
}

MultiPoly t_mixed(const MixedGraph& m, int which, const MultiPoly& b_of_digraph) {
    if (which != 1 && which != 2) throw PreconditionError("t_mixed: which must be 1 or 2");
    const MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y"), one = MultiPoly::constant(1);
    int arcs = m.num_arcs(), edges = m.num_edges(), n = m.num_vertices();
    int c = count_components(m.digraph());
    MultiPoly s;
    if (which == 1) {
        MultiPoly b1 = b_of_digraph.eval({{"z", 1}});
        s = substitute_rational(b1, "y", one, y, arcs);
        if (arcs > edges) s = exact_divide(s, MultiPoly::monomial("y", arcs - edges));
    } else {
        s = MultiPoly({"q", "y"});
        for (const auto& o : enumerate_orientations(m)) {
            MultiPoly b1 = b_poly(o).eval({{"z", 1}});
            s += substitute_rational(b1, "y", MultiPoly::constant(2) - y, y, edges);
        }
        s *= Rational(1) / Rational(Integer(1) << edges);
    }
    s = s.substitute("q", (x - one) * (y - one));
    s = exact_divide(s, pow(y - one, n));
    s = exact_divide(s, pow(x - one, c));
    return s.extended(merge_vars(s.vars(), {"y", "x"}));
}

ReadoffReport readoff(const MultiPoly& b, const Digraph& d) {
    ReadoffReport r;
    MultiPoly b0 = b.eval({{"z", 0}});
    r.acyclic_arc_count = b0.degree("y");
    MultiPoly top = b0.coeff("y", r.acyclic_arc_count);
    r.scc_count = top.degree("q");
    int n = d.num_vertices();
    for (int q = 1; q <= n + 1; ++q) {
        if (top.value({{"q", q}}) != 0) {
            r.max_path_condensation = q;
            break;
        }
    }
    r.directed_cut_count = b.value({{"q", 2}, {"y", 1}, {"z", 0}}).get_num();
    return r;
}

std::vector<Integer> directed_cuts_by_size(const Digraph& d) {
    int n = d.num_vertices();
    if (n > 24) throw PreconditionError("directed cuts: too many vertices");
    std::vector<Integer> out(n + 1, 0);
    for (std::uint32_t u = 0; u < (1u << n); ++u) {
        bool ok = true;
        for (const auto& a : d.arcs()) {
            bool tin = u >> (a.tail - 1) & 1, hin = u >> (a.head - 1) & 1;
            if (!tin && hin) {
                ok = false;
                break;
            }
        }
        if (ok) out[__builtin_popcount(u)] += 1;
    }
    return out;
}

Integer count_directed_cuts(const Digraph& d) {
    Integer total = 0;
    for (const auto& c : directed_cuts_by_size(d)) total += c;
    return total;
}

}  // namespace bpoly
