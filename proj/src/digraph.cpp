#include "bpoly/digraph.hpp"

#include "bpoly/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bpoly {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

void check_vertex(int v, int n) {
    if (v < 1 || v > n)
        throw PreconditionError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n));
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (const auto& a : arcs_) {
        check_vertex(a.tail, n_);
        check_vertex(a.head, n_);
    }
}

Digraph build_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Arc> list;
    list.reserve(arcs.size());
    for (auto [u, v] : arcs) list.push_back({u, v});
    return Digraph(n, std::move(list));
}

std::string Digraph::multiset_key() const {
    std::vector<Arc> sorted = arcs_;
    std::sort(sorted.begin(), sorted.end());
    std::string key;
    if (n_ < 256) {
        key.reserve(1 + 2 * sorted.size());
        key.push_back(static_cast<char>(n_));
        for (const auto& a : sorted) {
            key.push_back(static_cast<char>(a.tail));
            key.push_back(static_cast<char>(a.head));
        }
    } else {
        key = "#" + std::to_string(n_);
        for (const auto& a : sorted) key += ";" + std::to_string(a.tail) + "," + std::to_string(a.head);
    }
    return key;
}

std::string Digraph::canonical_key() const {
    if (n_ > 7) return multiset_key();
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 1);
    std::string best;
    std::vector<Arc> relabeled(arcs_.size());
    do {
        for (std::size_t i = 0; i < arcs_.size(); ++i)
            relabeled[i] = {perm[arcs_[i].tail - 1], perm[arcs_[i].head - 1]};
        std::string key = Digraph(n_, relabeled).multiset_key();
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph Digraph::underlying() const {
    std::vector<std::pair<int, int>> edges;
    for (const auto& a : arcs_) edges.emplace_back(a.tail, a.head);
    return Graph(n_, std::move(edges));
}

Digraph Digraph::disjoint_union(const Digraph& other) const {
    std::vector<Arc> arcs = arcs_;
    for (const auto& a : other.arcs_) arcs.push_back({a.tail + n_, a.head + n_});
    return Digraph(n_ + other.n_, std::move(arcs));
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw PreconditionError("negative vertex count");
    for (auto [u, v] : edges_) {
        check_vertex(u, n_);
        check_vertex(v, n_);
    }
}

Digraph Graph::doubled() const {
    std::vector<Arc> arcs;
    for (auto [u, v] : edges_) {
        arcs.push_back({u, v});
        arcs.push_back({v, u});
    }
    return Digraph(n_, std::move(arcs));
}

Digraph Graph::oriented() const {
    std::vector<Arc> arcs;
    for (auto [u, v] : edges_) arcs.push_back({u, v});
    return Digraph(n_, std::move(arcs));
}

MixedGraph::MixedGraph(Digraph d, std::vector<int> partner) : d_(std::move(d)), partner_(std::move(partner)) {
    int m = d_.num_arcs();
    if (static_cast<int>(partner_.size()) != m) throw PreconditionError("pairing size differs from arc count");
    for (int i = 0; i < m; ++i) {
        int j = partner_[i];
        if (j == -1) continue;
        if (j < 0 || j >= m || j == i || partner_[j] != i)
            throw PreconditionError("pairing is not a partition into singletons and pairs");
        if (d_.arc(j) != d_.arc(i).reversed()) throw PreconditionError("paired arcs are not mutually opposite");
    }
}

MixedGraph MixedGraph::oriented(const Digraph& d) { return MixedGraph(d, std::vector<int>(d.num_arcs(), -1)); }

MixedGraph MixedGraph::from_graph(const Graph& g) {
    Digraph d = g.doubled();
    std::vector<int> partner(d.num_arcs());
    for (int i = 0; i < g.num_edges(); ++i) {
        partner[2 * i] = 2 * i + 1;
        partner[2 * i + 1] = 2 * i;
    }
    return MixedGraph(std::move(d), std::move(partner));
}

int MixedGraph::num_edges() const {
    int e = 0;
    for (int i = 0; i < num_arcs(); ++i)
        if (partner_[i] < i) ++e;
    return e;
}

std::vector<std::vector<int>> MixedGraph::blocks() const {
    std::vector<std::vector<int>> out;
    for (int i = 0; i < num_arcs(); ++i) {
        if (partner_[i] == -1)
            out.push_back({i});
        else if (partner_[i] > i)
            out.push_back({i, partner_[i]});
    }
    return out;
}

std::vector<std::pair<int, int>> MixedGraph::unoriented() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < num_arcs(); ++i)
        if (partner_[i] > i) out.emplace_back(i, partner_[i]);
    return out;
}

MixedGraph MixedGraph::normalized() const {
    std::vector<Arc> arcs;
    std::vector<int> partner;
    for (const auto& b : blocks()) {
        int base = static_cast<int>(arcs.size());
        for (int i : b) arcs.push_back(d_.arc(i));
        if (b.size() == 2) {
            partner.push_back(base + 1);
            partner.push_back(base);
        } else {
            partner.push_back(-1);
        }
    }
    return MixedGraph(Digraph(num_vertices(), std::move(arcs)), std::move(partner));
}

Digraph modify(const Digraph& d, std::span<const ArcAction> actions) {
    int n = d.num_vertices();
    const auto& arcs = d.arcs();
    if (actions.size() != arcs.size()) throw PreconditionError("action list size differs from arc count");
    UnionFind uf(n);
    bool merged = false;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (actions[i] == ArcAction::Contract) merged |= uf.unite(arcs[i].tail - 1, arcs[i].head - 1);
    std::vector<int> label(n, 0);
    int count = 0;
    if (merged) {
        std::vector<int> root_label(n, 0);
        for (int v = 0; v < n; ++v) {
            int r = uf.find(v);
            if (!root_label[r]) root_label[r] = ++count;
            label[v] = root_label[r];
        }
    } else {
        for (int v = 0; v < n; ++v) label[v] = v + 1;
        count = n;
    }
    std::vector<Arc> out;
    out.reserve(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        Arc a{label[arcs[i].tail - 1], label[arcs[i].head - 1]};
        switch (actions[i]) {
            case ArcAction::Keep: out.push_back(a); break;
            case ArcAction::Reorient: out.push_back(a.reversed()); break;
            default: break;
        }
    }
    return Digraph(count, std::move(out));
}

Digraph modify(const Digraph& d, const std::vector<int>& del, const std::vector<int>& contract,
               const std::vector<int>& reorient) {
    std::vector<ArcAction> actions(d.num_arcs(), ArcAction::Keep);
    auto mark = [&](const std::vector<int>& idx, ArcAction a) {
        for (int i : idx) {
            if (i < 0 || i >= d.num_arcs()) throw PreconditionError("arc index " + std::to_string(i) + " out of range");
            if (actions[i] != ArcAction::Keep) throw PreconditionError("arc index sets overlap at " + std::to_string(i));
            actions[i] = a;
        }
    };
    mark(del, ArcAction::Delete);
    mark(contract, ArcAction::Contract);
    mark(reorient, ArcAction::Reorient);
    return modify(d, actions);
}

MixedGraph modify_edges(const MixedGraph& m, const std::vector<int>& del_blocks,
                        const std::vector<int>& contract_blocks) {
    auto blocks = m.blocks();
    std::vector<ArcAction> actions(m.num_arcs(), ArcAction::Keep);
    auto mark = [&](const std::vector<int>& idx, ArcAction a) {
        for (int b : idx) {
            if (b < 0 || b >= static_cast<int>(blocks.size())) throw PreconditionError("edge index out of range");
            for (int i : blocks[b]) {
                if (actions[i] != ArcAction::Keep) throw PreconditionError("edge index sets overlap");
                actions[i] = a;
            }
        }
    };
    mark(del_blocks, ArcAction::Delete);
    mark(contract_blocks, ArcAction::Contract);
    Digraph d = modify(m.digraph(), actions);
    std::vector<int> new_index(m.num_arcs(), -1);
    int k = 0;
    for (int i = 0; i < m.num_arcs(); ++i)
        if (actions[i] == ArcAction::Keep) new_index[i] = k++;
    std::vector<int> partner(k, -1);
    for (int i = 0; i < m.num_arcs(); ++i) {
        int j = m.partner()[i];
        if (new_index[i] >= 0 && j >= 0) partner[new_index[i]] = new_index[j];
    }
    return MixedGraph(std::move(d), std::move(partner));
}

int count_components(int n, std::span<const Arc> arcs) {
    UnionFind uf(n);
    int c = n;
    for (const auto& a : arcs)
        if (uf.unite(a.tail - 1, a.head - 1)) --c;
    return c;
}

int count_components(const Digraph& d) { return count_components(d.num_vertices(), d.arcs()); }

int strongly_connected_components(const Digraph& d, std::vector<int>& comp) {
    int n = d.num_vertices();
    std::vector<std::vector<int>> out(n), in(n);
    for (const auto& a : d.arcs()) {
        out[a.tail - 1].push_back(a.head - 1);
        in[a.head - 1].push_back(a.tail - 1);
    }
    // Kosaraju with explicit stacks
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, i] = stack.back();
            if (i < out[v].size()) {
                int w = out[v][i++];
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    comp.assign(n, -1);
    int c = 0;
    std::vector<int> todo;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[*it] >= 0) continue;
        comp[*it] = c;
        todo.push_back(*it);
        while (!todo.empty()) {
            int v = todo.back();
            todo.pop_back();
            for (int w : in[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    todo.push_back(w);
                }
        }
        ++c;
    }
    return c;
}

std::vector<bool> cyclic_arcs(const Digraph& d) {
    std::vector<int> comp;
    strongly_connected_components(d, comp);
    std::vector<bool> out(d.num_arcs());
    for (int i = 0; i < d.num_arcs(); ++i) out[i] = comp[d.arc(i).tail - 1] == comp[d.arc(i).head - 1];
    return out;
}

bool is_acyclic(const Digraph& d) {
    for (const auto& a : d.arcs())
        if (a.is_loop()) return false;
    std::vector<int> comp;
    return strongly_connected_components(d, comp) == d.num_vertices();
}

bool is_totally_cyclic(const Digraph& d) {
    std::vector<int> comp;
    return strongly_connected_components(d, comp) == count_components(d);
}

StructureReport structure(const Digraph& d) {
    StructureReport r;
    int n = d.num_vertices();
    std::vector<int> comp;
    r.components = count_components(d);
    r.scc_count = strongly_connected_components(d, comp);
    bool has_loop = std::any_of(d.arcs().begin(), d.arcs().end(), [](const Arc& a) { return a.is_loop(); });
    r.is_acyclic = !has_loop && r.scc_count == n;
    r.is_totally_cyclic = r.scc_count == r.components;

    std::vector<ArcAction> actions(d.num_arcs(), ArcAction::Keep);
    for (int i = 0; i < d.num_arcs(); ++i)
        if (comp[d.arc(i).tail - 1] == comp[d.arc(i).head - 1]) actions[i] = ArcAction::Contract;
    r.acyclic_quotient = modify(d, actions);

    if (r.is_acyclic) {
        std::vector<int> indeg(n, 0);
        std::vector<std::vector<int>> out(n);
        for (const auto& a : d.arcs()) {
            out[a.tail - 1].push_back(a.head - 1);
            ++indeg[a.head - 1];
        }
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (!indeg[v]) queue.push_back(v);
        std::vector<int> height(n, 1);  // vertices on the longest path ending here
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int w : out[v]) {
                height[w] = std::max(height[w], height[v] + 1);
                if (--indeg[w] == 0) queue.push_back(w);
            }
        }
        int top = n ? *std::max_element(height.begin(), height.end()) : 0;
        r.longest_path_arcs = n ? top - 1 : 0;
        std::vector<int> profile(top, 0);
        for (int h : height) ++profile[h - 1];
        r.profile = profile;
    }
    return r;
}

std::vector<Digraph> enumerate_orientations(const MixedGraph& m) {
    auto pairs = m.unoriented();
    std::size_t k = pairs.size();
    if (k > 30) throw PreconditionError("too many unoriented edges to enumerate orientations");
    std::vector<Digraph> out;
    out.reserve(std::size_t{1} << k);
    std::vector<int> pair_of(m.num_arcs(), -1), side(m.num_arcs(), 0);
    for (std::size_t b = 0; b < k; ++b) {
        pair_of[pairs[b].first] = static_cast<int>(b);
        pair_of[pairs[b].second] = static_cast<int>(b);
        side[pairs[b].second] = 1;
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Arc> arcs;
        for (int i = 0; i < m.num_arcs(); ++i) {
            int b = pair_of[i];
            if (b >= 0 && static_cast<int>((mask >> b) & 1) != side[i]) continue;
            arcs.push_back(m.digraph().arc(i));
        }
        out.emplace_back(m.num_vertices(), std::move(arcs));
    }
    return out;
}

std::vector<MixedGraph> enumerate_pairings(const Digraph& d) {
    int m = d.num_arcs();
    std::vector<MixedGraph> out;
    std::vector<int> partner(m, -2);
    std::function<void(int)> rec = [&](int i) {
        while (i < m && partner[i] != -2) ++i;
        if (i == m) {
            out.emplace_back(d, partner);
            return;
        }
        partner[i] = -1;
        rec(i + 1);
        for (int j = i + 1; j < m; ++j) {
            if (partner[j] != -2 || d.arc(j) != d.arc(i).reversed()) continue;
            partner[i] = j;
            partner[j] = i;
            rec(i + 1);
            partner[j] = -2;
        }
        partner[i] = -2;
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> linear_extensions(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<std::vector<int>> out;
    std::vector<int> sigma(n), pos(n + 1);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
        bool ok = true;
        for (const auto& a : d.arcs())
            if (pos[a.tail] >= pos[a.head]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

DigraphStream::DigraphStream(int n, int m_max) : n_(n), m_max_(m_max) {
    if (n < 1) throw PreconditionError("enumerate_digraphs needs n >= 1");
    for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) pairs_.push_back({u, v});
}

void DigraphStream::reset() {
    size_ = 0;
    combo_.clear();
    started_ = false;
    done_ = false;
}

std::optional<Digraph> DigraphStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
    } else {
        int p = static_cast<int>(pairs_.size());
        int i = size_ - 1;
        while (i >= 0 && combo_[i] == p - 1) --i;
        if (i >= 0) {
            int v = combo_[i] + 1;
            for (int j = i; j < size_; ++j) combo_[j] = v;
        } else {
            if (++size_ > m_max_) {
                done_ = true;
                return std::nullopt;
            }
            combo_.assign(size_, 0);
        }
    }
    std::vector<Arc> arcs;
    arcs.reserve(size_);
    for (int c : combo_) arcs.push_back(pairs_[c]);
    return Digraph(n_, std::move(arcs));
}

std::vector<Digraph> enumerate_digraphs(int n, int m_max) {
    DigraphStream s(n, m_max);
    std::vector<Digraph> out;
    while (auto d = s.next()) out.push_back(std::move(*d));
    return out;
}

std::vector<Graph> enumerate_graphs(int n, int e_max) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u; v <= n; ++v) pairs.emplace_back(u, v);
    int p = static_cast<int>(pairs.size());
    std::vector<Graph> out;
    for (int size = 0; size <= e_max; ++size) {
        std::vector<int> combo(size, 0);
        while (true) {
            std::vector<std::pair<int, int>> edges;
            for (int c : combo) edges.push_back(pairs[c]);
            out.emplace_back(n, std::move(edges));
            int i = size - 1;
            while (i >= 0 && combo[i] == p - 1) --i;
            if (i < 0) break;
            int v = combo[i] + 1;
            for (int j = i; j < size; ++j) combo[j] = v;
        }
    }
    return out;
}

}  // namespace bpoly
