#pragma once

#include "bpoly/digraph.hpp"
#include "bpoly/poly.hpp"

#include <cstdint>
#include <vector>

namespace bpoly {

struct ColoringStats {
    int ascents = 0;
    int descents = 0;
    int equals = 0;
    int weak_ascents() const { return ascents + equals; }
    int weak_descents() const { return descents + equals; }
};

// Statistics of the coloring f (f[v-1] is the color of vertex v).
ColoringStats coloring_stats(const Digraph& d, const std::vector<int>& f);

inline constexpr int default_vertex_bound = 9;
inline constexpr std::uint64_t default_work_bound = 50'000'000;

// Integer table t[p][asc][des] = number of surjections V -> [p] with the
// given ascent / descent counts.
struct SurjectionTable {
    int n = 0;
    int m = 0;
    std::vector<std::int64_t> counts;  // ((p * (m+1)) + asc) * (m+1) + des
    std::int64_t& at(int p, int a, int d) { return counts[(static_cast<std::size_t>(p) * (m + 1) + a) * (m + 1) + d]; }
    std::int64_t at(int p, int a, int d) const { return counts[(static_cast<std::size_t>(p) * (m + 1) + a) * (m + 1) + d]; }
};

SurjectionTable surjection_table(const Digraph& d, bool filtered = false);
MultiPoly poly_from_table(const SurjectionTable& t);

// B_D(q, y, z) via the surjection expansion.
MultiPoly b_poly(const Digraph& d, int vertex_bound = default_vertex_bound);
// Same, enumerating surjections by filtering all p^n maps (n <= 6).
MultiPoly b_poly_filtered(const Digraph& d);
// Brute force over all q^n colorings; polynomial in y, z.
MultiPoly b_eval_direct(const Digraph& d, long q, std::uint64_t work_bound = default_work_bound);
// B_D by interpolating b_eval_direct at q = 0..n.
MultiPoly b_poly_by_interpolation(const Digraph& d, std::uint64_t work_bound = default_work_bound);

// P_G(q, y): colorings weighted by y^(number of bichromatic edges).
MultiPoly potts(const Graph& g);
// Same by brute force at a fixed q.
MultiPoly potts_direct(const Graph& g, long q);
MultiPoly tutte(const Graph& g);

enum class ChromaticKind { Strict, Weak, MixedStrict };

// Strict: [y^|A|] B(q,y,1); Weak: B(q,0,1).
MultiPoly chromatic(const Digraph& d, ChromaticKind kind);
// Strictly-compatible colorings of a mixed graph; direct count interpolated,
// cross-checked against the T^(1) formula (ArithmeticError on disagreement).
MultiPoly chromatic(const MixedGraph& m);
MultiPoly mixed_chromatic_direct(const MixedGraph& m);
MultiPoly mixed_chromatic_from_t1(const MixedGraph& m);

// Counts of surjections g: V -> [p] with every arc a strict (resp. weak)
// ascent, i.e. chi(q) = sum_p c[p] * binomial(q, p).
std::vector<std::int64_t> strict_chromatic_counts(const Digraph& d);
std::vector<std::int64_t> weak_chromatic_counts(const Digraph& d);
MultiPoly poly_from_binomial_counts(const std::vector<std::int64_t>& c, const std::string& var = "q");

// T^(1) or T^(2) of a mixed graph, a polynomial in x, y.
MultiPoly t_mixed(const MixedGraph& m, int which);
MultiPoly t_mixed(const MixedGraph& m, int which, const MultiPoly& b_of_digraph);

struct ReadoffReport {
    int acyclic_arc_count = 0;
    int scc_count = 0;
    int max_path_condensation = 0;  // vertices on a longest path of acyc(D)
    Integer directed_cut_count;
};

ReadoffReport readoff(const MultiPoly& b, const Digraph& d);
Integer count_directed_cuts(const Digraph& d);
// Directed cuts U with |U| = k, for k = 0..n.
std::vector<Integer> directed_cuts_by_size(const Digraph& d);

}  // namespace bpoly
