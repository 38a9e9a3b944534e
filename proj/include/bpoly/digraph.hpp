#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bpoly {

struct Arc {
    int tail = 1;
    int head = 1;
    auto operator<=>(const Arc&) const = default;
    bool is_loop() const { return tail == head; }
    Arc reversed() const { return {head, tail}; }
};

class Graph;

// Vertices are 1..n; arcs are identified by their index in arcs().
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<Arc> arcs);

    int num_vertices() const { return n_; }
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const Arc& arc(int i) const { return arcs_.at(i); }

    // Identifies the digraph up to arc order (vertex count + sorted arcs).
    std::string multiset_key() const;
    // Identifies the digraph up to isomorphism: the smallest multiset_key over
    // all vertex relabelings (n <= 7; falls back to multiset_key above that).
    std::string canonical_key() const;

    Graph underlying() const;
    Digraph disjoint_union(const Digraph& other) const;

    bool operator==(const Digraph&) const = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

Digraph build_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // The doubled digraph: edge i becomes arcs 2i = (u,v) and 2i+1 = (v,u).
    Digraph doubled() const;
    // Orientation u->v of every edge as listed.
    Digraph oriented() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// A digraph together with a partition of its arcs into singletons (oriented
// edges) and pairs of mutually opposite arcs (unoriented edges).
class MixedGraph {
public:
    MixedGraph() = default;
    // partner[i] = j pairs arcs i and j; -1 leaves arc i oriented.
    MixedGraph(Digraph d, std::vector<int> partner);

    static MixedGraph oriented(const Digraph& d);
    static MixedGraph from_graph(const Graph& g);

    const Digraph& digraph() const { return d_; }
    const std::vector<int>& partner() const { return partner_; }
    int num_vertices() const { return d_.num_vertices(); }
    int num_arcs() const { return d_.num_arcs(); }
    // |E(D)|: number of blocks.
    int num_edges() const;
    // Blocks ordered by smallest arc index; each block lists its arcs ascending.
    std::vector<std::vector<int>> blocks() const;
    // Pairs (i, j), i < j, of the unoriented edges, by i.
    std::vector<std::pair<int, int>> unoriented() const;

    // Same mixed graph with arcs reordered so that each block is contiguous
    // and blocks appear in order of their smallest arc index.
    MixedGraph normalized() const;

    bool operator==(const MixedGraph&) const = default;

private:
    Digraph d_;
    std::vector<int> partner_;
};

enum class ArcAction : std::uint8_t { Keep, Delete, Contract, Reorient };

// D with the given per-arc actions applied; surviving arcs keep their order,
// vertices are renumbered by ascending smallest merged original label.
Digraph modify(const Digraph& d, std::span<const ArcAction> actions);
Digraph modify(const Digraph& d, const std::vector<int>& del, const std::vector<int>& contract,
               const std::vector<int>& reorient);

// Deletes / contracts whole blocks (indices into blocks()). The result keeps
// the pairing of the surviving arcs.
MixedGraph modify_edges(const MixedGraph& m, const std::vector<int>& del_blocks,
                        const std::vector<int>& contract_blocks);

struct StructureReport {
    int components = 0;
    int scc_count = 0;
    bool is_acyclic = false;
    bool is_totally_cyclic = false;
    std::optional<int> longest_path_arcs;  // empty when a directed cycle exists
    Digraph acyclic_quotient;
    std::optional<std::vector<int>> profile;  // acyclic digraphs only
};

StructureReport structure(const Digraph& d);

int count_components(const Digraph& d);
// Components of (V, chosen arcs) with n vertices.
int count_components(int n, std::span<const Arc> arcs);
// scc index per vertex (0-based vertices), returns number of SCCs.
int strongly_connected_components(const Digraph& d, std::vector<int>& comp);
bool is_acyclic(const Digraph& d);
bool is_totally_cyclic(const Digraph& d);
// Arcs lying on a directed cycle (loops included).
std::vector<bool> cyclic_arcs(const Digraph& d);

std::vector<Digraph> enumerate_orientations(const MixedGraph& m);

// All pairings of the arcs of D into mixed graphs, in a fixed order.
std::vector<MixedGraph> enumerate_pairings(const Digraph& d);

// One-line notations sigma with sigma^{-1}(u) < sigma^{-1}(v) for every arc.
std::vector<std::vector<int>> linear_extensions(const Digraph& d);

// Restartable stream of all digraphs on n labeled vertices with at most
// m_max arcs (multisets over [n]^2), by arc count then lexicographically.
class DigraphStream {
public:
    DigraphStream(int n, int m_max);
    std::optional<Digraph> next();
    void reset();

private:
    int n_, m_max_;
    int size_ = 0;
    std::vector<int> combo_;
    bool started_ = false;
    bool done_ = false;
    std::vector<Arc> pairs_;
};

std::vector<Digraph> enumerate_digraphs(int n, int m_max);
// Multigraphs (loops allowed) on n labeled vertices with at most e_max edges.
std::vector<Graph> enumerate_graphs(int n, int e_max);

// Calls f(g, p) for each surjection g: {0..n-1} -> {1..p}, p = 1..n
// (all maps for n = 0 are the single empty map with p = 0).
template <class F>
void for_each_surjection(int n, F&& f);
// Same set of surjections, obtained by filtering all p^n maps.
template <class F>
void for_each_surjection_filtered(int n, F&& f);

}  // namespace bpoly

#include "bpoly/detail/surjections.hpp"
