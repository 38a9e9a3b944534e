#include "bpoly/qsym.hpp"

#include "bpoly/bcore.hpp"
#include "bpoly/error.hpp"
#include "bpoly/format.hpp"

#include <algorithm>
#include <numeric>

namespace bpoly {

namespace {

void validate_key(int n, QBasis basis, const std::vector<int>& key) {
    if (basis == QBasis::M) {
        int sum = 0;
        for (int p : key) {
            if (p < 1) throw PreconditionError("composition parts must be positive");
            sum += p;
        }
        if (sum != n) throw PreconditionError("composition does not sum to the degree");
    } else {
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] < 1 || key[i] > n - 1) throw PreconditionError("subset element outside [n-1]");
            if (i > 0 && key[i] <= key[i - 1]) throw PreconditionError("subset must be sorted without repeats");
        }
    }
}

// Counts indexed by (key, asc, des), turned into a QSymFunction in y, z.
class KeyedCounts {
public:
    explicit KeyedCounts(int m) : m_(m) {}
    void bump(const std::vector<int>& key, int a, int d) {
        auto& v = counts_[key];
        if (v.empty()) v.assign(static_cast<std::size_t>(m_ + 1) * (m_ + 1), 0);
        ++v[a * (m_ + 1) + d];
    }
    QSymFunction build(int n, QBasis basis) const {
        QSymFunction out(n, basis);
        for (const auto& [key, v] : counts_) {
            MultiPoly c({"y", "z"});
            for (int a = 0; a <= m_; ++a)
                for (int d = 0; d <= m_; ++d)
                    if (auto k = v[a * (m_ + 1) + d]) c.add_term({a, d}, Rational(static_cast<long>(k)));
            out.add(key, c);
        }
        return out;
    }

private:
    int m_;
    std::map<std::vector<int>, std::vector<std::int64_t>> counts_;
};

Composition block_sizes(const std::vector<int>& g, int p) {
    Composition c(p, 0);
    for (int v : g) ++c[v - 1];
    return c;
}

void quasi_shuffles(const Composition& a, std::size_t i, const Composition& b, std::size_t j, Composition& cur,
                    std::vector<Composition>& out) {
    if (i == a.size() && j == b.size()) {
        out.push_back(cur);
        return;
    }
    if (i < a.size()) {
        cur.push_back(a[i]);
        quasi_shuffles(a, i + 1, b, j, cur, out);
        cur.pop_back();
    }
    if (j < b.size()) {
        cur.push_back(b[j]);
        quasi_shuffles(a, i, b, j + 1, cur, out);
        cur.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        cur.push_back(a[i] + b[j]);
        quasi_shuffles(a, i + 1, b, j + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<int> inverse(const std::vector<int>& s) {
    std::vector<int> inv(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) inv[s[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

}  // namespace

QSymFunction QSymFunction::monomial(const Composition& c, const MultiPoly& coeff) {
    QSymFunction f(std::accumulate(c.begin(), c.end(), 0), QBasis::M);
    f.add(c, coeff);
    return f;
}

QSymFunction QSymFunction::fundamental(int n, const Subset& s, const MultiPoly& coeff) {
    QSymFunction f(n, QBasis::F);
    f.add(s, coeff);
    return f;
}

MultiPoly QSymFunction::coeff(const std::vector<int>& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? MultiPoly() : it->second;
}

void QSymFunction::add(const std::vector<int>& key, const MultiPoly& c) {
    validate_key(n_, basis_, key);
    if (c.is_zero()) return;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

QSymFunction& QSymFunction::operator+=(const QSymFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && n_ != o.n_) {
        *this = o;
        return *this;
    }
    if (n_ != o.n_) throw PreconditionError("adding quasisymmetric functions of different degrees");
    QSymFunction other = o.basis_ == basis_ ? o : basis_change(o, basis_);
    for (const auto& [k, c] : other.coeffs_) add(k, c);
    return *this;
}

QSymFunction& QSymFunction::operator-=(const QSymFunction& o) {
    return *this += o.map_coeffs([](const MultiPoly& c) { return -c; });
}

QSymFunction operator*(QSymFunction a, const MultiPoly& c) {
    return a.map_coeffs([&](const MultiPoly& x) { return x * c; });
}

bool operator==(const QSymFunction& a, const QSymFunction& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.n_ != b.n_) return false;
    const QSymFunction& bb = b.basis_ == a.basis_ ? b : basis_change(b, a.basis_);
    return a.coeffs_ == bb.coeffs_;
}

Subset composition_to_subset(const Composition& c) {
    Subset s;
    int acc = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        acc += c[i];
        s.push_back(acc);
    }
    return s;
}

Composition subset_to_composition(int n, const Subset& s) {
    Composition c;
    int prev = 0;
    for (int x : s) {
        c.push_back(x - prev);
        prev = x;
    }
    if (n > 0) c.push_back(n - prev);
    return c;
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition{}};
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        Subset s;
        for (int i = 1; i < n; ++i)
            if (mask >> (i - 1) & 1) s.push_back(i);
        out.push_back(subset_to_composition(n, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QSymFunction basis_change(const QSymFunction& f, QBasis target) {
    if (f.basis() == target) return f;
    int n = f.degree();
    QSymFunction out(n, target);
    for (const auto& [key, c] : f.coeffs()) {
        Subset s = f.basis() == QBasis::M ? composition_to_subset(key) : key;
        // supersets R of s inside [n-1]
        std::vector<int> free;
        for (int i = 1; i < n; ++i)
            if (!std::binary_search(s.begin(), s.end(), i)) free.push_back(i);
        for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
            Subset r = s;
            int extra = 0;
            for (std::size_t i = 0; i < free.size(); ++i)
                if (mask >> i & 1) {
                    r.push_back(free[i]);
                    ++extra;
                }
            std::sort(r.begin(), r.end());
            if (target == QBasis::F) {
                // M_s = sum_{R >= s} (-1)^{|R \ s|} F_R
                out.add(r, extra % 2 ? -c : c);
            } else {
                // F_s = sum_{R >= s} M_R
                out.add(subset_to_composition(n, r), c);
            }
        }
    }
    return out;
}

QSymFunction omega(const QSymFunction& f) {
    QSymFunction g = basis_change(f, QBasis::F);
    int n = g.degree();
    QSymFunction out(n, QBasis::F);
    for (const auto& [s, c] : g.coeffs()) {
        Subset comp;
        for (int i = 1; i < n; ++i)
            if (!std::binary_search(s.begin(), s.end(), i)) comp.push_back(i);
        out.add(comp, c);
    }
    return basis_change(out, f.basis());
}

QSymFunction rho(const QSymFunction& f) {
    QSymFunction g = basis_change(f, QBasis::M);
    QSymFunction out(g.degree(), QBasis::M);
    for (const auto& [c, p] : g.coeffs()) out.add(Composition(c.rbegin(), c.rend()), p);
    return basis_change(out, f.basis());
}

MultiPoly principal_specialization(const QSymFunction& f) {
    QSymFunction g = basis_change(f, QBasis::M);
    MultiPoly out({"q"});
    for (const auto& [c, p] : g.coeffs()) out += binomial_poly("q", static_cast<int>(c.size())) * p;
    return out;
}

MultiPoly principal_specialization_fundamental(const QSymFunction& f) {
    QSymFunction g = basis_change(f, QBasis::F);
    int n = g.degree();
    MultiPoly q = MultiPoly::variable("q");
    MultiPoly out({"q"});
    Rational inv = Rational(1) / Rational(factorial(n));
    for (const auto& [s, p] : g.coeffs()) {
        MultiPoly term = MultiPoly::constant(inv);
        int k = static_cast<int>(s.size());
        for (int i = 1; i <= n; ++i) term = term * (q - MultiPoly::constant(k - i + 1));
        out += term * p;
    }
    return out;
}

QSymFunction qsym_product(const QSymFunction& f, const QSymFunction& g) {
    QSymFunction a = basis_change(f, QBasis::M), b = basis_change(g, QBasis::M);
    QSymFunction out(a.degree() + b.degree(), QBasis::M);
    std::vector<Composition> shuffles;
    Composition cur;
    for (const auto& [ca, pa] : a.coeffs())
        for (const auto& [cb, pb] : b.coeffs()) {
            shuffles.clear();
            quasi_shuffles(ca, 0, cb, 0, cur, shuffles);
            MultiPoly prod = pa * pb;
            for (const auto& s : shuffles) out.add(s, prod);
        }
    return out;
}

QSymFunction qsym_b(const Digraph& d, int vertex_bound) {
    int n = d.num_vertices();
    if (n > vertex_bound)
        throw PreconditionError("qsym_b: " + std::to_string(n) + " vertices exceed the bound " +
                                std::to_string(vertex_bound));
    KeyedCounts counts(d.num_arcs());
    for_each_surjection(n, [&](const std::vector<int>& g, int p) {
        int asc = 0, des = 0;
        for (const auto& a : d.arcs()) {
            int gu = g[a.tail - 1], gv = g[a.head - 1];
            asc += gv > gu;
            des += gv < gu;
        }
        counts.bump(block_sizes(g, p), asc, des);
    });
    return counts.build(n, QBasis::M);
}

namespace {

QSymFunction chromatic_qsym(const Digraph& d, bool strict) {
    int n = d.num_vertices();
    KeyedCounts counts(0);
    for_each_surjection(n, [&](const std::vector<int>& g, int p) {
        for (const auto& a : d.arcs()) {
            int gu = g[a.tail - 1], gv = g[a.head - 1];
            if (strict ? gv <= gu : gv < gu) return;
        }
        counts.bump(block_sizes(g, p), 0, 0);
    });
    return counts.build(n, QBasis::M);
}

}  // namespace

QSymFunction strict_chromatic_qsym(const Digraph& d) { return chromatic_qsym(d, true); }
QSymFunction weak_chromatic_qsym(const Digraph& d) { return chromatic_qsym(d, false); }

QSymFunction qsym_from_colorings(int n, const ColoringWeight& weight) {
    if (n > 7) throw PreconditionError("coloring enumeration: at most 7 vertices");
    std::map<std::vector<int>, std::map<std::pair<int, int>, long>> acc;
    std::vector<int> f(n, 1), used(n + 1);
    while (true) {
        std::fill(used.begin(), used.end(), 0);
        for (int c : f) ++used[c];
        int k = 0;
        while (k < n && used[k + 1] > 0) ++k;
        bool prefix = true;
        for (int c = k + 1; c <= n; ++c) prefix = prefix && used[c] == 0;
        if (prefix) {
            if (auto w = weight(f)) ++acc[Composition(used.begin() + 1, used.begin() + 1 + k)][*w];
        }
        int i = 0;
        while (i < n && f[i] == n) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    QSymFunction out(n, QBasis::M);
    for (const auto& [key, ws] : acc) {
        MultiPoly c({"y", "z"});
        for (const auto& [e, k] : ws) c.add_term({e.first, e.second}, Rational(k));
        out.add(key, c);
    }
    return out;
}

bool is_compatibly_labeled(const Digraph& d) {
    return std::all_of(d.arcs().begin(), d.arcs().end(), [](const Arc& a) { return a.tail < a.head; });
}

std::vector<PermutationRow> permutation_rows(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<PermutationRow> rows;
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 1);
    do {
        PermutationRow r;
        r.sigma = s;
        r.sigma_inv = inverse(s);
        for (const auto& a : d.arcs()) r.ascents += s[a.head - 1] > s[a.tail - 1];
        for (int i = 1; i < n; ++i)
            if (r.sigma_inv[i - 1] < r.sigma_inv[i]) r.asc_inv.push_back(i);
        rows.push_back(std::move(r));
    } while (std::next_permutation(s.begin(), s.end()));
    return rows;
}

QSymFunction fundamental_b_acyclic(const Digraph& d) {
    if (!is_compatibly_labeled(d)) throw PreconditionError("fundamental expansion needs a compatibly labeled digraph");
    QSymFunction out(d.num_vertices(), QBasis::F);
    for (const auto& r : permutation_rows(d)) out.add(r.asc_inv, MultiPoly::monomial("y", r.ascents));
    return out;
}

PartialOrder::PartialOrder(int n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), rel_(static_cast<std::size_t>(n) * n, 0) {
    for (auto [u, v] : relations) {
        if (u < 1 || u > n || v < 1 || v > n) throw PreconditionError("order relation outside [n]");
        rel_[(u - 1) * n + (v - 1)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (rel_[i * n + k] && rel_[k * n + j]) rel_[i * n + j] = 1;
    for (int i = 0; i < n; ++i)
        if (rel_[i * n + i]) throw PreconditionError("order relations contain a cycle");
}

std::vector<std::pair<int, int>> PartialOrder::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = 1; v <= n_; ++v)
            if (less(u, v)) out.emplace_back(u, v);
    return out;
}

namespace {

// Adjacency of the underlying simple graph, or nullopt on loops / repeated pairs.
std::optional<std::vector<char>> simple_adjacency(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (const auto& a : d.arcs()) {
        if (a.is_loop()) return std::nullopt;
        auto& e = adj[(a.tail - 1) * n + (a.head - 1)];
        if (e) return std::nullopt;
        e = 1;
        adj[(a.head - 1) * n + (a.tail - 1)] = 1;
    }
    return adj;
}

}  // namespace

bool arcs_are_incomparable_pairs(const Digraph& d, const PartialOrder& order) {
    int n = d.num_vertices();
    if (order.size() != n) return false;
    auto adj = simple_adjacency(d);
    if (!adj) return false;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (static_cast<bool>((*adj)[(u - 1) * n + (v - 1)]) == order.comparable(u, v)) return false;
    return true;
}

std::vector<PartialOrder> incomparability_orders(const Digraph& d) {
    int n = d.num_vertices();
    auto adj = simple_adjacency(d);
    if (!adj) return {};
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!(*adj)[(u - 1) * n + (v - 1)]) pairs.emplace_back(u, v);
    if (pairs.size() > 20) throw PreconditionError("too many comparable pairs to enumerate orders");
    std::vector<PartialOrder> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> rel;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            rel.push_back(mask >> i & 1 ? std::pair{pairs[i].second, pairs[i].first} : pairs[i]);
        try {
            PartialOrder o(n, rel);
            if (arcs_are_incomparable_pairs(d, o)) out.push_back(std::move(o));
        } catch (const PreconditionError&) {
        }
    }
    return out;
}

QSymFunction shareshian_wachs_sum(const Digraph& d, const PartialOrder& order, std::vector<PermutationRow>* rows) {
    if (!is_compatibly_labeled(d)) throw PreconditionError("Shareshian-Wachs sum needs a compatibly labeled digraph");
    if (!arcs_are_incomparable_pairs(d, order))
        throw PreconditionError("the arcs must be exactly the incomparable pairs of the order");
    QSymFunction out(d.num_vertices(), QBasis::F);
    auto all = permutation_rows(d);
    for (auto& r : all) {
        for (int i = 1; i < d.num_vertices(); ++i)
            if (order.less(r.sigma_inv[i - 1], r.sigma_inv[i])) r.asc_prec_inv.push_back(i);
        out.add(r.asc_prec_inv, MultiPoly::monomial("y", r.ascents));
    }
    if (rows) *rows = std::move(all);
    return out;
}

QSymFunction chromatic_quasisym(const Digraph& d) {
    int m = d.num_arcs();
    MultiPoly yz = MultiPoly::variable("y") * MultiPoly::variable("z");
    return qsym_b(d).map_coeffs([&](const MultiPoly& c) { return c.substitute("y", yz).coeff("z", m); });
}

QSymFunction chromatic_quasisym_direct(const Digraph& d) {
    return qsym_from_colorings(d.num_vertices(), [&](const std::vector<int>& f) -> std::optional<std::pair<int, int>> {
        int asc = 0;
        for (const auto& a : d.arcs()) {
            int fu = f[a.tail - 1], fv = f[a.head - 1];
            if (fu == fv) return std::nullopt;
            asc += fv > fu;
        }
        return std::pair{asc, 0};
    });
}

QSymFunction tutte_symmetric(const Graph& g) {
    int e = g.num_edges();
    MultiPoly one = MultiPoly::constant(1), y = MultiPoly::variable("y");
    return qsym_b(g.doubled()).map_coeffs(
        [&](const MultiPoly& c) { return substitute_rational(c.eval({{"z", 1}}), "y", one, one + y, e); });
}

QSymFunction tutte_symmetric_direct(const Graph& g) {
    QSymFunction raw = qsym_from_colorings(g.num_vertices(), [&](const std::vector<int>& f) {
        int mono = 0;
        for (auto [u, v] : g.edges()) mono += f[u - 1] == f[v - 1];
        return std::optional<std::pair<int, int>>(std::pair{mono, 0});
    });
    MultiPoly one_plus_y = MultiPoly::constant(1) + MultiPoly::variable("y");
    return raw.map_coeffs([&](const MultiPoly& c) { return c.substitute("y", one_plus_y); });
}

MultiPoly degree_pair_polynomial(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<int> out(n, 0), in(n, 0);
    for (const auto& a : d.arcs()) {
        if (a.is_loop()) continue;
        ++out[a.tail - 1];
        ++in[a.head - 1];
    }
    MultiPoly p({"y", "z"});
    for (int v = 0; v < n; ++v) p.add_term({out[v], in[v]}, 1);
    return p;
}

MultiPoly bijection_sum(const Digraph& d) {
    int n = d.num_vertices();
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 1);
    MultiPoly p({"y", "z"});
    do {
        auto s = coloring_stats(d, f);
        p.add_term({s.ascents, s.descents}, 1);
    } while (std::next_permutation(f.begin(), f.end()));
    return p;
}

QSymReadoff qsym_readoff(const QSymFunction& b, const Digraph& d) {
    QSymFunction m = basis_change(b, QBasis::M);
    int n = m.degree();
    QSymReadoff r;
    if (n == 1)
        r.degree_pairs = m.coeff({1});
    else if (n >= 2)
        r.degree_pairs = m.coeff({1, n - 1});
    if (is_acyclic(d)) {
        int arcs = d.num_arcs();
        for (auto it = m.coeffs().rbegin(); it != m.coeffs().rend(); ++it)
            if (!it->second.coeff("y", arcs).is_zero()) {
                r.profile = it->first;
                break;
            }
    }
    r.directed_cuts_by_size.assign(n + 1, 0);
    auto cut_count = [&](const Composition& c) {
        auto v = m.coeff(c).eval({{"y", 1}, {"z", 0}}).as_constant();
        return v ? Integer(v->get_num()) : Integer(0);
    };
    if (n == 0) r.directed_cuts_by_size[0] = 1;
    for (int k = 0; k <= n && n > 0; ++k) {
        if (k == 0 || k == n)
            r.directed_cuts_by_size[k] = cut_count({n});
        else
            r.directed_cuts_by_size[k] = cut_count({k, n - k});
    }
    r.bijection_sum = m.coeff(Composition(n, 1));
    return r;
}

nlohmann::json to_json(const QSymFunction& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [k, c] : f.coeffs()) coeffs.push_back({{"key", k}, {"poly", to_json(c)}});
    return {{"n", f.degree()}, {"basis", f.basis() == QBasis::M ? "M" : "F"}, {"coeffs", coeffs}};
}

QSymFunction qsym_from_json(const nlohmann::json& j) {
    try {
        auto basis = j.at("basis").get<std::string>();
        if (basis != "M" && basis != "F") throw ParseError("basis must be \"M\" or \"F\"");
        QSymFunction out(j.at("n").get<int>(), basis == "M" ? QBasis::M : QBasis::F);
        for (const auto& c : j.at("coeffs")) {
            try {
                out.add(c.at("key").get<std::vector<int>>(), poly_from_json(c.at("poly")));
            } catch (const PreconditionError& e) {
                throw ParseError(e.what());
            }
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed quasisymmetric JSON: ") + e.what());
    }
}

std::string to_pretty(const QSymFunction& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : f.coeffs()) {
        if (!first) out += " + ";
        first = false;
        std::string key = f.basis() == QBasis::M ? "M(" : "F{";
        for (std::size_t i = 0; i < k.size(); ++i) key += (i ? "," : "") + std::to_string(k[i]);
        key += f.basis() == QBasis::M ? ")" : "}";
        auto cst = c.as_constant();
        if (cst && *cst == 1)
            out += key;
        else
            out += "(" + to_pretty(c) + ")*" + key;
    }
    return out;
}

}  // namespace bpoly
