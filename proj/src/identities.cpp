#include "bpoly/identities.hpp"

#include "bpoly/bcore.hpp"
#include "bpoly/error.hpp"
#include "bpoly/format.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>

namespace bpoly {

namespace {

constexpr int kThreeWayArcs = 8;
constexpr int kTwoWayArcs = 12;
constexpr int kWordLength = 4;

MultiPoly var(const char* name) { return MultiPoly::variable(name); }
MultiPoly cst(const Rational& c) { return MultiPoly::constant(c); }
Rational sign(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// eval() restricted to the variables p actually has.
MultiPoly eval_present(const MultiPoly& p, const std::map<std::string, Rational>& values) {
    std::map<std::string, Rational> present;
    for (const auto& [k, v] : values)
        if (p.has_var(k)) present.emplace(k, v);
    return p.eval(present);
}

MultiPoly neg_q(const MultiPoly& p) { return p.substitute("q", -var("q")); }
MultiPoly at_q(const MultiPoly& p, long q) { return eval_present(p, {{"q", Rational(q)}}); }

// P * f^k for k possibly negative (exact division then).
MultiPoly times_power(const MultiPoly& p, const MultiPoly& f, int k) {
    return k >= 0 ? p * pow(f, k) : exact_divide(p, pow(f, -k));
}

void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

int n_components(const Digraph& d) { return count_components(d); }

bool underlying_is_forest(const Digraph& d) {
    return d.num_vertices() - n_components(d) == d.num_arcs();
}

bool graph_is_forest(const Graph& g) {
    std::vector<Arc> arcs;
    for (auto [u, v] : g.edges()) arcs.push_back({u, v});
    return g.num_vertices() - count_components(g.num_vertices(), arcs) == g.num_edges();
}

// ---- per-minor data, cached per thread by multiset key ----

struct WordChromatic {
    std::vector<Rational> strict, weak;  // binomial-basis coefficients in q
};

struct MinorInfo {
    Digraph digraph;
    int n = 0, comps = 0, sccs = 0;
    bool acyclic = false, totally_cyclic = false;
    std::vector<std::int64_t> strict, weak, quotient_strict;
    std::unique_ptr<std::map<Composition, std::int64_t>> strict_qsym, weak_qsym;
    std::map<std::string, WordChromatic> by_word;
};

std::unordered_map<std::string, MinorInfo>& minor_cache() {
    thread_local std::unordered_map<std::string, MinorInfo> cache;
    return cache;
}

thread_local unsigned cache_generation = 0;

// Only called between uses, so no MinorInfo reference is live.
void trim_minor_cache() {
    if (minor_cache().size() > 200000) {
        minor_cache().clear();
        ++cache_generation;
    }
}

MinorInfo& minor_info(const Digraph& d) {
    auto& cache = minor_cache();
    auto [it, inserted] = cache.try_emplace(d.multiset_key());
    MinorInfo& info = it->second;
    if (!inserted) return info;
    StructureReport s = structure(d);
    info.digraph = d;
    info.n = d.num_vertices();
    info.comps = s.components;
    info.sccs = s.scc_count;
    info.acyclic = s.is_acyclic;
    info.totally_cyclic = s.is_totally_cyclic;
    info.strict = strict_chromatic_counts(d);
    info.weak = weak_chromatic_counts(d);
    info.quotient_strict = strict_chromatic_counts(s.acyclic_quotient);
    return info;
}

std::map<Composition, std::int64_t> integer_coeffs(const QSymFunction& f) {
    std::map<Composition, std::int64_t> out;
    QSymFunction m = basis_change(f, QBasis::M);
    for (const auto& [key, c] : m.coeffs()) {
        auto v = c.as_constant();
        if (!v || v->get_den() != 1) throw ArithmeticError("chromatic quasisymmetric coefficient is not an integer");
        out[key] = v->get_num().get_si();
    }
    return out;
}

const std::map<Composition, std::int64_t>& minor_qsym(MinorInfo& info, bool strict) {
    auto& slot = strict ? info.strict_qsym : info.weak_qsym;
    if (!slot)
        slot = std::make_unique<std::map<Composition, std::int64_t>>(integer_coeffs(
            strict ? strict_chromatic_qsym(info.digraph) : weak_chromatic_qsym(info.digraph)));
    return *slot;
}

// Colorings V -> {0..q-1} with q = |w|p+1 where every arc lies in a y band
// (strict) or no arc does (weak), counted by backtracking.
std::int64_t count_word_colorings(const Digraph& d, const SignWord& w, long p, bool strict) {
    int n = d.num_vertices();
    long m = w.size(), mp = m * p, q = mp + 1;
    std::vector<char> up(2 * mp + 1, 0);
    for (long delta = 1; delta <= mp; ++delta) {
        bool pos = w[static_cast<int>((delta + p - 1) / p) - 1] > 0;
        up[mp + delta] = pos;
        up[mp - delta] = !pos;
    }
    // arcs checked once both ends are colored, at the later endpoint
    std::vector<std::vector<std::pair<int, int>>> due(n);
    for (const auto& a : d.arcs()) due[std::max(a.tail, a.head) - 1].push_back({a.tail - 1, a.head - 1});
    std::vector<long> f(n, 0);
    std::int64_t total = 0;
    auto go = [&](auto&& self, int v) -> void {
        if (v == n) {
            ++total;
            return;
        }
        for (long c = 0; c < q; ++c) {
            f[v] = c;
            bool ok = true;
            for (auto [t, h] : due[v])
                if (static_cast<bool>(up[f[h] - f[t] + mp]) != strict) {
                    ok = false;
                    break;
                }
            if (ok) self(self, v + 1);
        }
    };
    go(go, 0);
    return total;
}

Rational binomial_at(long q, int k) {
    Rational out(1);
    for (int i = 0; i < k; ++i) out = out * Rational(q - i) / Rational(i + 1);
    return out;
}

// Inverse of [binomial(m p + 1, j)] for p, j = 0..n.
const std::vector<std::vector<Rational>>& binomial_inverse(long m, int n) {
    thread_local std::map<std::pair<long, int>, std::vector<std::vector<Rational>>> cache;
    auto [it, inserted] = cache.try_emplace({m, n});
    if (!inserted) return it->second;
    int k = n + 1;
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) a[i][j] = binomial_at(m * i + 1, j);
        a[i][k + i] = 1;
    }
    for (int c = 0; c < k; ++c) {
        int piv = c;
        while (a[piv][c] == 0) ++piv;
        std::swap(a[c], a[piv]);
        Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (int r = 0; r < k; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int j = 0; j < 2 * k; ++j) a[r][j] -= f * a[c][j];
        }
    }
    auto& out = it->second;
    out.assign(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) out[i][j] = a[i][k + j];
    return out;
}

std::vector<Rational> word_chromatic_coefficients(const Digraph& d, const SignWord& w, bool strict) {
    int n = d.num_vertices();
    long m = w.size();
    const auto& inv = binomial_inverse(m, n);
    std::vector<Rational> values(n + 1), out(n + 1);
    for (int p = 0; p <= n; ++p) values[p] = Rational(static_cast<long>(count_word_colorings(d, w, p, strict)));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) out[i] += inv[i][j] * values[j];
    long q = m * (n + 1) + 1;
    Rational check;
    for (int i = 0; i <= n; ++i) check += out[i] * binomial_at(q, i);
    if (check != Rational(static_cast<long>(count_word_colorings(d, w, n + 1, strict))))
        throw ArithmeticError("w-chromatic polynomial exceeds degree |V|");
    return out;
}

const WordChromatic& minor_word(MinorInfo& info, const SignWord& w) {
    auto [it, inserted] = info.by_word.try_emplace(w.str());
    if (inserted) {
        thread_local std::unordered_map<std::string, WordChromatic> by_shape;
        std::string key = info.digraph.canonical_key() + "#" + w.str();
        auto found = by_shape.find(key);
        if (found == by_shape.end()) {
            if (by_shape.size() > 200000) by_shape.clear();
            WordChromatic wc{word_chromatic_coefficients(info.digraph, w, true),
                             word_chromatic_coefficients(info.digraph, w, false)};
            found = by_shape.emplace(key, std::move(wc)).first;
        }
        it->second = found->second;
    }
    return it->second;
}

// ---- R ⊎ S ⊎ T partitions of the arc set ----

struct PartitionEntry {
    int r = 0, s = 0, t = 0;
    MinorInfo* deleted = nullptr;     // D^{-T} \ R
    MinorInfo* contracted = nullptr;  // D^{-T} / R
};

struct PartitionTable {
    std::string key;
    unsigned generation = 0;
    int arcs = 0, n = 0;
    std::vector<PartitionEntry> entries;
};

const PartitionTable& partitions(const Digraph& d) {
    require(d.num_arcs() <= kThreeWayArcs,
            "three-way partition sums need at most " + std::to_string(kThreeWayArcs) + " arcs");
    thread_local PartitionTable table;
    std::string key = d.multiset_key();
    if (table.key == key && table.generation == cache_generation && !table.entries.empty()) return table;
    trim_minor_cache();
    table.key = key;
    table.generation = cache_generation;
    table.arcs = d.num_arcs();
    table.n = d.num_vertices();
    table.entries.clear();
    int m = d.num_arcs();
    std::vector<int> digit(m, 0);
    std::vector<ArcAction> del(m), con(m);
    while (true) {
        PartitionEntry e;
        for (int i = 0; i < m; ++i) {
            switch (digit[i]) {
                case 0: del[i] = ArcAction::Delete; con[i] = ArcAction::Contract; ++e.r; break;
                case 1: del[i] = con[i] = ArcAction::Keep; ++e.s; break;
                default: del[i] = con[i] = ArcAction::Reorient; ++e.t; break;
            }
        }
        e.deleted = &minor_info(modify(d, del));
        e.contracted = &minor_info(modify(d, con));
        table.entries.push_back(e);
        int i = 0;
        while (i < m && digit[i] == 2) digit[i++] = 0;
        if (i == m) break;
        ++digit[i];
    }
    return table;
}

// Dense accumulator for sums of w * y^s z^t * sum_p c[p] binomial(q, p).
// bc[p][k]: coefficient of q^k in binomial(q, p), for p <= n.
const std::vector<std::vector<Rational>>& binomial_q_coefficients(int n) {
    thread_local std::vector<std::vector<Rational>> bc{{Rational(1)}};
    while (static_cast<int>(bc.size()) <= n) {
        int p = static_cast<int>(bc.size());
        const auto& prev = bc.back();
        std::vector<Rational> next(p + 1);
        for (int k = 0; k < p; ++k) {
            next[k + 1] += prev[k] / p;
            next[k] -= prev[k] * Rational(p - 1) / p;
        }
        bc.push_back(std::move(next));
    }
    return bc;
}

class YZQAccumulator {
public:
    YZQAccumulator(int arcs, int n) : m_(arcs), n_(n), ints_(slots(), 0), rats_(slots()) {}

    void add(int s, int t, std::int64_t w) { ints_[index(s, t, 0)] += w; }
    void add(int s, int t, std::int64_t w, const std::vector<std::int64_t>& counts) {
        for (std::size_t p = 0; p < counts.size(); ++p)
            if (counts[p]) ints_[index(s, t, static_cast<int>(p))] += w * counts[p];
    }
    void add(int s, int t, std::int64_t w, const std::vector<Rational>& coeffs) {
        for (std::size_t p = 0; p < coeffs.size(); ++p) {
            const Rational& c = coeffs[p];
            if (c == 0) continue;
            if (c.get_den() == 1 && c.get_num().fits_slong_p())
                ints_[index(s, t, static_cast<int>(p))] += w * c.get_num().get_si();
            else
                rats_[index(s, t, static_cast<int>(p))] += w * c;
        }
    }

    MultiPoly result() const {
        const auto& bc = binomial_q_coefficients(n_);
        std::size_t plane = static_cast<std::size_t>(m_ + 1) * (m_ + 1);
        std::vector<Rational> acc(plane * (n_ + 1));
        for (int s = 0; s <= m_; ++s)
            for (int t = 0; t <= m_; ++t)
                for (int p = 0; p <= n_; ++p) {
                    std::size_t i = index(s, t, p);
                    if (ints_[i] == 0 && rats_[i] == 0) continue;
                    Rational c = Rational(static_cast<long>(ints_[i])) + rats_[i];
                    std::size_t st = static_cast<std::size_t>(s) * (m_ + 1) + t;
                    for (int k = 0; k <= p; ++k)
                        if (bc[p][k] != 0) acc[k * plane + st] += bc[p][k] * c;
                }
        MultiPoly out({"q", "y", "z"});
        for (int k = 0; k <= n_; ++k)
            for (int s = 0; s <= m_; ++s)
                for (int t = 0; t <= m_; ++t) {
                    const Rational& c = acc[k * plane + static_cast<std::size_t>(s) * (m_ + 1) + t];
                    if (c != 0) out.add_term({k, s, t}, c);
                }
        return out;
    }

private:
    std::size_t slots() const { return static_cast<std::size_t>(m_ + 1) * (m_ + 1) * (n_ + 1); }
    std::size_t index(int s, int t, int p) const {
        return (static_cast<std::size_t>(s) * (m_ + 1) + t) * (n_ + 1) + p;
    }
    int m_, n_;
    std::vector<std::int64_t> ints_;
    std::vector<Rational> rats_;
};

// Sums over R ⊎ S ⊎ T of w * y^s z^t * M, M an integer M-basis expansion.
class QSymAccumulator {
public:
    QSymAccumulator(int arcs, int degree) : m_(arcs), n_(degree) {}
    void add(int s, int t, std::int64_t w, const std::map<Composition, std::int64_t>& f) {
        for (const auto& [key, c] : f) {
            auto& v = acc_[key];
            if (v.empty()) v.assign(static_cast<std::size_t>(m_ + 1) * (m_ + 1), 0);
            v[static_cast<std::size_t>(s) * (m_ + 1) + t] += w * c;
        }
    }
    QSymFunction result() const {
        QSymFunction out(n_, QBasis::M);
        for (const auto& [key, v] : acc_) {
            MultiPoly c({"y", "z"});
            for (int s = 0; s <= m_; ++s)
                for (int t = 0; t <= m_; ++t)
                    if (auto x = v[static_cast<std::size_t>(s) * (m_ + 1) + t]) c.add_term({s, t}, static_cast<long>(x));
            if (!c.is_zero()) out.add(key, c);
        }
        return out;
    }

private:
    int m_, n_;
    std::map<Composition, std::vector<std::int64_t>> acc_;
};

// f(kept_count, minor) over all subsets S of arcs, with S deleted / contracted / reoriented.
template <class F>
void for_each_subset(const Digraph& d, ArcAction action, F&& f) {
    int m = d.num_arcs();
    require(m <= kTwoWayArcs, "subset sums need at most " + std::to_string(kTwoWayArcs) + " arcs");
    std::vector<ArcAction> actions(m);
    trim_minor_cache();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int chosen = 0;
        for (int i = 0; i < m; ++i) {
            bool in = mask >> i & 1;
            chosen += in;
            actions[i] = in ? action : ArcAction::Keep;
        }
        f(chosen, minor_info(modify(d, actions)));
    }
}

// ---- cached whole-digraph polynomials ----

template <class V>
class KeyedCache {
public:
    template <class F>
    const V& get(const std::string& key, F&& make) {
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        if (map_.size() > 50000) map_.clear();
        return map_.emplace(key, make()).first->second;
    }

private:
    std::unordered_map<std::string, V> map_;
};

std::string mixed_key(const MixedGraph& m) {
    std::string k = std::to_string(m.num_vertices()) + ":";
    for (int i = 0; i < m.num_arcs(); ++i) {
        const Arc& a = m.digraph().arc(i);
        k += std::to_string(a.tail) + "," + std::to_string(a.head) + "," + std::to_string(m.partner()[i]) + ";";
    }
    return k;
}

MultiPoly cached_t(const MixedGraph& m, int which) {
    thread_local KeyedCache<MultiPoly> cache;
    return cache.get(mixed_key(m) + "#" + std::to_string(which), [&] { return t_mixed(m, which); });
}

MultiPoly cached_bw(const Digraph& d, const SignWord& w) {
    thread_local KeyedCache<MultiPoly> cache;
    return cache.get(d.multiset_key() + "#" + w.str(), [&] { return b_w(d, w).extended({"q", "y", "z"}); });
}


const MultiPoly& cached_b(const Digraph& d) {
    thread_local std::string key;
    thread_local MultiPoly b;
    std::string k = d.multiset_key();
    if (k != key || b.vars().empty()) {
        b = b_poly(d).extended({"q", "y", "z"});
        key = k;
    }
    return b;
}

const QSymFunction& cached_qsym_b(const Digraph& d) {
    thread_local std::string key;
    thread_local QSymFunction b;
    std::string k = d.multiset_key();
    if (k != key) {
        b = qsym_b(d);
        key = k;
    }
    return b;
}

// den^|A| B(y := ny/den, z := nz/den)
struct Linear {
    long c = 0, y = 0, z = 0;
};

std::optional<Linear> as_linear(const MultiPoly& p) {
    Linear out;
    for (const auto& [e, c] : p.terms()) {
        if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
        long* slot = &out.c;
        int deg = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const std::string& name = p.vars()[i];
            if (e[i] != 1 || deg++ > 0 || (name != "y" && name != "z")) return std::nullopt;
            slot = name == "y" ? &out.y : &out.z;
        }
        *slot += c.get_num().get_si();
    }
    return out;
}

Rational from_wide(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0UL));
    Integer out = hi * (Integer(1) << 64) + lo;
    return Rational(neg ? Integer(-out) : out);
}

// b(q, ny/den, nz/den) * den^arcs for ny, nz, den linear in y and z, using
// dense integer arrays indexed by the (y, z) exponents.
std::optional<MultiPoly> linear_substitution(const MultiPoly& b, Linear ny, Linear nz, Linear den, int arcs) {
    for (const auto& v : b.vars())
        if (v != "q" && v != "y" && v != "z") return std::nullopt;
    int iq = b.var_index("q"), iy = b.var_index("y"), iz = b.var_index("z");
    Integer lcm(1);
    for (const auto& [e, c] : b.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    if (!lcm.fits_slong_p()) return std::nullopt;
    long scale = lcm.get_si();

    int side = arcs + 1;
    using Dense = std::vector<__int128>;
    auto times = [&](const Dense& a, Linear f) {
        Dense out(side * side, 0);
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j) {
                __int128 v = a[i * side + j];
                if (v == 0) continue;
                out[i * side + j] += v * f.c;
                if (i + 1 < side) out[(i + 1) * side + j] += v * f.y;
                if (j + 1 < side) out[i * side + j + 1] += v * f.z;
            }
        return out;
    };

    std::map<std::pair<int, int>, std::vector<std::pair<int, __int128>>> groups;
    int max_k = 0;
    for (const auto& [e, c] : b.terms()) {
        int k = iq >= 0 ? e[iq] : 0, a = iy >= 0 ? e[iy] : 0, t = iz >= 0 ? e[iz] : 0;
        if (a + t > arcs) return std::nullopt;
        Integer num = c.get_num() * (scale / c.get_den());
        if (!num.fits_slong_p()) return std::nullopt;
        groups[{a, t}].push_back({k, num.get_si()});
        max_k = std::max(max_k, k);
    }

    std::vector<Dense> den_pows{Dense(side * side, 0)};
    den_pows[0][0] = 1;
    for (int r = 1; r <= arcs; ++r) den_pows.push_back(times(den_pows.back(), den));
    std::vector<__int128> acc(static_cast<std::size_t>(max_k + 1) * side * side, 0);
    for (const auto& [ab, terms] : groups) {
        Dense f = den_pows[arcs - ab.first - ab.second];
        for (int i = 0; i < ab.first; ++i) f = times(f, ny);
        for (int i = 0; i < ab.second; ++i) f = times(f, nz);
        for (int st = 0; st < side * side; ++st) {
            if (f[st] == 0) continue;
            for (auto [k, num] : terms) acc[static_cast<std::size_t>(k) * side * side + st] += num * f[st];
        }
    }
    MultiPoly out({"q", "y", "z"});
    for (int k = 0; k <= max_k; ++k)
        for (int st = 0; st < side * side; ++st)
            if (__int128 v = acc[static_cast<std::size_t>(k) * side * side + st])
                out.add_term({k, st / side, st % side}, from_wide(v) / scale);
    return out;
}

MultiPoly scaled_substitution(const MultiPoly& b, const MultiPoly& ny, const MultiPoly& nz, const MultiPoly& den,
                              int arcs) {
    auto ly = as_linear(ny), lz = as_linear(nz), ld = as_linear(den);
    if (ly && lz && ld)
        if (auto out = linear_substitution(b, *ly, *lz, *ld, arcs)) return *out;
    return substitute_rational(b, {{"y", ny}, {"z", nz}}, den, arcs);
}

// ---- input coercions ----

const Digraph& digraph_of(const CheckInput& in) {
    if (auto* d = std::get_if<Digraph>(&in)) return *d;
    if (auto* e = std::get_if<EmbeddedDigraph>(&in)) return e->digraph;
    throw PreconditionError("check expects a digraph");
}

MixedGraph mixed_of(const CheckInput& in) {
    if (auto* m = std::get_if<MixedGraph>(&in)) return *m;
    if (auto* d = std::get_if<Digraph>(&in)) return MixedGraph::oriented(*d);
    if (auto* g = std::get_if<Graph>(&in)) return MixedGraph::from_graph(*g);
    throw PreconditionError("check expects a mixed graph");
}

const EmbeddedDigraph& embedded_of(const CheckInput& in) {
    if (auto* e = std::get_if<EmbeddedDigraph>(&in)) return *e;
    throw PreconditionError("check expects a digraph with a rotation system");
}

const Graph& graph_of(const CheckInput& in) {
    if (auto* g = std::get_if<Graph>(&in)) return *g;
    throw PreconditionError("check expects a graph");
}

// ---- parameter helpers ----

std::optional<int> opposite_partner(const Digraph& d, int i) {
    for (int j = i + 1; j < d.num_arcs(); ++j)
        if (d.arc(j) == d.arc(i).reversed()) return j;
    return std::nullopt;
}

const SignWord& word_param(const CheckParams& p) {
    if (!p.word) throw PreconditionError("check needs a sign word");
    require(p.word->size() <= kWordLength, "sign words are limited to length " + std::to_string(kWordLength));
    return *p.word;
}

int which_param(const CheckParams& p) {
    require(p.which == 1 || p.which == 2, "which must be 1 or 2");
    return p.which;
}

std::vector<CheckParams> with_which(std::initializer_list<int> ws) {
    std::vector<CheckParams> out;
    for (int w : ws) {
        CheckParams p;
        p.which = w;
        out.push_back(p);
    }
    return out;
}

using Runner = std::function<std::pair<CheckValue, CheckValue>(const CheckInput&, const CheckParams&)>;
using ParamsFn = std::function<std::vector<CheckParams>(const CheckInput&, const SurveyLimits&)>;

struct CheckEntry {
    CheckInfo info;
    Runner run;
    ParamsFn params;
};

std::vector<CheckParams> single() { return {CheckParams{}}; }

// ---- recurrences and Tutte-style expansions ----

std::pair<CheckValue, CheckValue> run_rec_edge(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    require(p.arc && *p.arc >= 0 && *p.arc < d.num_arcs(), "rec-edge needs an arc index");
    auto j = opposite_partner(d, *p.arc);
    require(j.has_value(), "rec-edge needs an opposite arc after the given one");
    Digraph del = modify(d, {*p.arc, *j}, {}, {});
    Digraph con = modify(d, {*j}, {*p.arc}, {});
    MultiPoly yz = var("y") * var("z");
    return {b_poly(d), yz * b_poly(del) + (cst(1) - yz) * b_poly(con)};
}

std::pair<CheckValue, CheckValue> run_rec_arc(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    require(p.arc && *p.arc >= 0 && *p.arc < d.num_arcs(), "rec-arc needs an arc index");
    int a = *p.arc;
    MultiPoly y = var("y"), z = var("z");
    MultiPoly lhs = b_poly(d) + b_poly(modify(d, {}, {}, {a}));
    MultiPoly rhs = (y + z) * b_poly(modify(d, {a}, {}, {})) + (cst(2) - y - z) * b_poly(modify(d, {}, {a}, {}));
    return {lhs, rhs};
}

std::vector<int> unoriented_blocks(const MixedGraph& m) {
    std::vector<int> out;
    auto blocks = m.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b)
        if (blocks[b].size() == 2) out.push_back(static_cast<int>(b));
    return out;
}

bool has_loop(const Digraph& d) {
    return std::any_of(d.arcs().begin(), d.arcs().end(), [](const Arc& a) { return a.is_loop(); });
}

std::pair<CheckValue, CheckValue> run_loop_deletion(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    require(has_loop(d), "loop-deletion needs a loop");
    std::vector<Arc> kept;
    for (const auto& a : d.arcs())
        if (!a.is_loop()) kept.push_back(a);
    return {cached_b(d), b_poly(Digraph(d.num_vertices(), kept)).extended({"q", "y", "z"})};
}

std::pair<CheckValue, CheckValue> run_rec_tutte_cases(const CheckInput& in, const CheckParams& p) {
    MixedGraph m = mixed_of(in);
    int which = which_param(p);
    auto blocks = m.blocks();
    require(p.block && *p.block >= 0 && *p.block < static_cast<int>(blocks.size()) && blocks[*p.block].size() == 2,
            "rec-tutte-cases needs an unoriented edge");
    const Arc& a = m.digraph().arc(blocks[*p.block][0]);
    MixedGraph del = modify_edges(m, {*p.block}, {});
    MultiPoly t_del = cached_t(del, which);
    MultiPoly lhs = cached_t(m, which);
    if (a.is_loop()) return {lhs, var("y") * t_del};
    MultiPoly t_con = cached_t(modify_edges(m, {}, {*p.block}), which);
    bool bridge = n_components(del.digraph()) > n_components(m.digraph());
    return {lhs, bridge ? (var("x") - cst(1)) * t_del + t_con : t_del + t_con};
}

std::vector<CheckParams> params_rec_tutte(const CheckInput& in, const SurveyLimits&) {
    std::vector<CheckParams> out;
    for (int b : unoriented_blocks(mixed_of(in)))
        for (int w : {1, 2}) {
            CheckParams p;
            p.block = b;
            p.which = w;
            out.push_back(p);
        }
    return out;
}

std::vector<Arc> block_arcs(const MixedGraph& m, const std::vector<std::vector<int>>& blocks,
                            const std::vector<int>& chosen) {
    std::vector<Arc> out;
    for (int b : chosen) out.push_back(m.digraph().arc(blocks[b][0]));
    return out;
}

std::pair<CheckValue, CheckValue> run_subgraph_expansion(const CheckInput& in, const CheckParams& p) {
    MixedGraph m = mixed_of(in);
    int which = which_param(p);
    auto blocks = m.blocks();
    auto h = unoriented_blocks(m);
    require(h.size() <= 10, "subgraph expansion limited to 10 unoriented edges");
    int n = m.num_vertices(), c = n_components(m.digraph());
    MultiPoly x1 = var("x") - cst(1), y1 = var("y") - cst(1);
    MultiPoly rhs({"x", "y"});
    for (std::uint32_t mask = 0; mask < (1u << h.size()); ++mask) {
        std::vector<int> r, s;
        for (std::size_t i = 0; i < h.size(); ++i) (mask >> i & 1 ? s : r).push_back(h[i]);
        int c_del = n_components(modify_edges(m, r, {}).digraph());
        auto s_arcs = block_arcs(m, blocks, s);
        int loops = static_cast<int>(s.size()) + count_components(n, s_arcs) - n;
        rhs += pow(x1, c_del - c) * pow(y1, loops) * cached_t(modify_edges(m, r, s), which);
    }
    return {cached_t(m, which), rhs};
}

std::pair<CheckValue, CheckValue> run_forest_expansion(const CheckInput& in, const CheckParams& p) {
    MixedGraph m = mixed_of(in);
    int which = which_param(p);
    auto blocks = m.blocks();
    auto h = unoriented_blocks(m);
    require(h.size() <= 10, "forest expansion limited to 10 unoriented edges");
    int n = m.num_vertices(), c = n_components(m.digraph());
    int k = static_cast<int>(h.size());
    // rank[i]: position of h[i] in the order, smallest first
    auto rank = [&](int i) { return p.reversed ? k - 1 - i : i; };
    MultiPoly x1 = var("x") - cst(1);
    MultiPoly rhs({"x", "y"});
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> f, fbar;
        std::vector<int> f_pos, fbar_pos;
        for (int i = 0; i < k; ++i) {
            if (mask >> i & 1) {
                f.push_back(h[i]);
                f_pos.push_back(i);
            } else {
                fbar.push_back(h[i]);
                fbar_pos.push_back(i);
            }
        }
        auto f_arcs = block_arcs(m, blocks, f);
        if (count_components(n, f_arcs) != n - static_cast<int>(f.size())) continue;
        int ext = 0;
        for (std::size_t j = 0; j < fbar.size(); ++j) {
            std::vector<Arc> larger;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (rank(f_pos[i]) > rank(fbar_pos[j])) larger.push_back(f_arcs[i]);
            const Arc& e = m.digraph().arc(blocks[fbar[j]][0]);
            larger.push_back(e);
            // e joins two vertices already connected by larger edges of F
            if (count_components(n, larger) == count_components(n, std::span(larger).first(larger.size() - 1)))
                ++ext;
        }
        int c_del = n_components(modify_edges(m, fbar, {}).digraph());
        rhs += pow(x1, c_del - c) * MultiPoly::monomial("y", ext) * cached_t(modify_edges(m, fbar, f), which);
    }
    return {cached_t(m, which), rhs};
}

std::vector<CheckParams> params_forest(const CheckInput&, const SurveyLimits&) {
    std::vector<CheckParams> out;
    for (int w : {1, 2})
        for (bool rev : {false, true}) {
            CheckParams p;
            p.which = w;
            p.reversed = rev;
            out.push_back(p);
        }
    return out;
}

// ---- chromatic expansions over R ⊎ S ⊎ T ----

enum class Minor { Deleted, Contracted };

MinorInfo& pick(const PartitionEntry& e, Minor kind) { return kind == Minor::Deleted ? *e.deleted : *e.contracted; }

MultiPoly expansion_rhs(const MultiPoly& b, int index, int arcs) {
    MultiPoly y = var("y"), z = var("z"), one = cst(1);
    switch (index) {
        case 1: return scaled_substitution(b, one + y, one + z, one, arcs);
        case 2: return scaled_substitution(b, one + y, one + z, one + y + z, arcs);
        case 3: return b;
        default: return scaled_substitution(b, y, z, one + y + z, arcs);
    }
}

// expansion_rhs of B (word empty) or B^w for d, cached per thread.
MultiPoly cached_rhs(const Digraph& d, int index, const SignWord* w = nullptr) {
    thread_local KeyedCache<MultiPoly> cache;
    std::string key = d.multiset_key() + "#" + (w ? w->str() : "") + "#" + std::to_string(index);
    return cache.get(key, [&] {
        MultiPoly b = w ? cached_bw(d, *w).extended({"q", "y", "z"}) : cached_b(d);
        return expansion_rhs(b, index, d.num_arcs());
    });
}

std::pair<CheckValue, CheckValue> run_expansion(const CheckInput& in, int index) {
    const Digraph& d = digraph_of(in);
    const auto& tab = partitions(d);
    Minor kind = index <= 2 ? Minor::Deleted : Minor::Contracted;
    bool strict = index % 2 == 1;
    YZQAccumulator acc(tab.arcs, tab.n);
    for (const auto& e : tab.entries) {
        MinorInfo& mi = pick(e, kind);
        acc.add(e.s, e.t, 1, strict ? mi.strict : mi.weak);
    }
    return {acc.result(), cached_rhs(d, index)};
}

std::pair<CheckValue, CheckValue> run_expansion_negq(const CheckInput& in, int index) {
    const Digraph& d = digraph_of(in);
    const auto& tab = partitions(d);
    Minor kind = index <= 2 ? Minor::Deleted : Minor::Contracted;
    YZQAccumulator acc(tab.arcs, tab.n);
    for (const auto& e : tab.entries) {
        MinorInfo& mi = pick(e, kind);
        switch (index) {
            case 1: if (mi.acyclic) acc.add(e.s, e.t, 1, mi.weak); break;
            case 3: if (mi.acyclic) acc.add(e.s, e.t, mi.n % 2 ? -1 : 1, mi.weak); break;
            default: acc.add(e.s, e.t, mi.sccs % 2 ? -1 : 1, mi.quotient_strict); break;
        }
    }
    MultiPoly rhs = neg_q(cached_rhs(d, index));
    if (index == 1) rhs *= sign(d.num_vertices());
    return {acc.result(), rhs};
}

std::pair<CheckValue, CheckValue> run_q_minus_one(const CheckInput& in, int index) {
    const Digraph& d = digraph_of(in);
    const auto& tab = partitions(d);
    Minor kind = index <= 2 ? Minor::Deleted : Minor::Contracted;
    YZQAccumulator acc(tab.arcs, 0);
    for (const auto& e : tab.entries) {
        MinorInfo& mi = pick(e, kind);
        switch (index) {
            case 1: if (mi.acyclic) acc.add(e.s, e.t, 1); break;
            case 2: if (mi.totally_cyclic) acc.add(e.s, e.t, mi.comps % 2 ? -1 : 1); break;
            case 3: if (mi.acyclic) acc.add(e.s, e.t, mi.n % 2 ? -1 : 1); break;
            default: if (mi.totally_cyclic) acc.add(e.s, e.t, 1); break;
        }
    }
    MultiPoly rhs = at_q(cached_rhs(d, index), -1);
    if (index == 1) rhs *= sign(d.num_vertices());
    if (index == 4) rhs *= sign(n_components(d));
    return {eval_present(acc.result(), {{"q", 0}}), rhs};
}

// ---- generating functions at q = -1 ----

std::pair<CheckValue, CheckValue> run_gf(const CheckInput& in, const std::string& which) {
    const Digraph& d = digraph_of(in);
    int m = d.num_arcs();
    MultiPoly y = var("y"), z = var("z"), one = cst(1);
    MultiPoly b = at_q(cached_b(d), -1);
    MultiPoly lhs({"y"});
    if (which == "acyclic-reorient") {
        for_each_subset(d, ArcAction::Reorient, [&](int k, const MinorInfo& mi) {
            if (mi.acyclic) lhs.add_term({k}, 1);
        });
        MultiPoly rhs = b.rename("y", "u").substitute("u", y * z).coeff("z", m) * sign(d.num_vertices());
        return {lhs, rhs};
    }
    if (which == "acyclic-subgraph") {
        for_each_subset(d, ArcAction::Delete, [&](int k, const MinorInfo& mi) {
            if (mi.acyclic) lhs.add_term({m - k}, 1);
        });
        return {lhs, scaled_substitution(b, one + y, one, one, m) * sign(d.num_vertices())};
    }
    Rational sc = sign(n_components(d));
    if (which == "cyclic-reorient") {
        for_each_subset(d, ArcAction::Reorient, [&](int k, const MinorInfo& mi) {
            if (mi.totally_cyclic) lhs.add_term({k}, 1);
        });
        return {lhs, scaled_substitution(b, y, one, one + y, m) * sc};
    }
    for_each_subset(d, ArcAction::Contract, [&](int k, const MinorInfo& mi) {
        if (mi.totally_cyclic) lhs.add_term({m - k}, 1);
    });
    return {lhs, scaled_substitution(eval_present(b, {{"z", 0}}), y, MultiPoly(), one + y, m) * sc};
}

// ---- reciprocity, duality, symmetry, sign identities ----

std::pair<CheckValue, CheckValue> run_reciprocity(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    StructureReport s = structure(d);
    MultiPoly lhs = neg_q(poly_from_binomial_counts(weak_chromatic_counts(d)));
    MultiPoly rhs = poly_from_binomial_counts(strict_chromatic_counts(s.acyclic_quotient)) * sign(s.scc_count);
    return {lhs, rhs};
}

std::pair<CheckValue, CheckValue> run_planar_duality(const CheckInput& in, const CheckParams&) {
    const auto& e = embedded_of(in);
    const Digraph& d = e.digraph;
    require(is_planar_embedding(d, e.rotation), "planar-duality needs a planar rotation system");
    Digraph dual = planar_dual(d, e.rotation);
    MultiPoly lhs = at_q(b_poly_by_interpolation(dual), -1);
    MultiPoly y = var("y"), z = var("z"), one = cst(1);
    MultiPoly rhs = scaled_substitution(at_q(b_poly(d), -1), one - y, one - z, one - y - z, d.num_arcs()) *
                    sign(n_components(d) - d.num_vertices());
    return {lhs, rhs};
}

std::pair<CheckValue, CheckValue> run_classical_duality(const CheckInput& in, const CheckParams&) {
    const auto& e = embedded_of(in);
    const Digraph& d = e.digraph;
    require(is_planar_embedding(d, e.rotation), "classical-duality needs a planar rotation system");
    Digraph dual = planar_dual(d, e.rotation);
    MultiPoly y = var("y"), q = var("q"), one = cst(1);
    MultiPoly lhs = b_poly(dual).substitute("z", y);
    MultiPoly diag = b_poly(d).substitute("z", y);
    // ((q-1)y+1)^|A| B(q,w,w) with w = (y-1)/((1-q)y-1)
    MultiPoly rhs = substitute_rational(diag, "y", y - one, (one - q) * y - one, d.num_arcs()) * sign(d.num_arcs());
    rhs = exact_divide(rhs, MultiPoly::monomial("q", d.num_vertices() - n_components(d)));
    return {lhs, rhs};
}

std::pair<CheckValue, CheckValue> run_symmetry_acyclic(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    require(is_acyclic(d), "symmetry-acyclic needs an acyclic digraph");
    MultiPoly b1 = eval_present(cached_b(d), {{"z", 1}});
    MultiPoly rhs = substitute_rational(b1, "y", cst(1), var("y"), d.num_arcs()) * sign(d.num_vertices());
    return {neg_q(b1), rhs};
}

std::pair<CheckValue, CheckValue> run_symmetry_forest(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    require(underlying_is_forest(d), "symmetry-forest needs a forest as underlying graph");
    const MultiPoly& b = cached_b(d);
    MultiPoly y = var("y"), z = var("z");
    MultiPoly rhs = scaled_substitution(b, y, z, y + z - cst(1), d.num_arcs()) * sign(d.num_vertices());
    return {neg_q(b), rhs};
}

std::pair<CheckValue, CheckValue> run_mysterious(const CheckInput& in, int index) {
    const Digraph& d = digraph_of(in);
    int m = d.num_arcs(), n = d.num_vertices();
    Rational sum = 0;
    StructureReport s = structure(d);
    if (index == 1) {
        for_each_subset(d, ArcAction::Delete, [&](int k, const MinorInfo& mi) {
            if (mi.acyclic) sum += sign(m - k);
        });
        sum *= sign(n - s.components);
        return {cst(sum), cst(s.is_totally_cyclic ? 1 : 0)};
    }
    for_each_subset(d, ArcAction::Delete, [&](int k, const MinorInfo& mi) {
        if (mi.totally_cyclic) sum += sign(m - k + mi.comps - n);
    });
    return {cst(sum), cst(s.is_acyclic ? 1 : 0)};
}

// ---- mixed graphs: T^(1), T^(2) evaluations ----

std::pair<CheckValue, CheckValue> run_chrom_partial(const CheckInput& in, const CheckParams& p) {
    MixedGraph m = mixed_of(in);
    int which = which_param(p);
    int n = m.num_vertices(), c = n_components(m.digraph());
    MultiPoly t0 = eval_present(cached_t(m, which), {{"y", 0}});
    MultiPoly rhs = t0.substitute("x", cst(1) - var("q")) * MultiPoly::monomial("q", c) * sign(n - c);
    return {mixed_chromatic_direct(m), rhs};
}

int count_orientations(const MixedGraph& m, bool (*pred)(const Digraph&)) {
    int k = 0;
    for (const auto& o : enumerate_orientations(m)) k += pred(o);
    return k;
}

std::pair<CheckValue, CheckValue> run_t20(const CheckInput& in, const CheckParams& p) {
    MixedGraph m = mixed_of(in);
    MultiPoly lhs = eval_present(cached_t(m, which_param(p)), {{"x", 2}, {"y", 0}});
    return {lhs, cst(count_orientations(m, is_acyclic))};
}

std::pair<CheckValue, CheckValue> run_t02(const CheckInput& in, const CheckParams&) {
    MixedGraph m = mixed_of(in);
    MultiPoly lhs = eval_present(cached_t(m, 2), {{"x", 0}, {"y", 2}});
    return {lhs, cst(count_orientations(m, is_totally_cyclic))};
}

bool sym02_applies(const MixedGraph& m) {
    auto blocks = m.blocks();
    auto h = unoriented_blocks(m);
    auto arcs = block_arcs(m, blocks, h);
    for (const auto& a : arcs)
        if (a.is_loop()) return false;
    int n = m.num_vertices();
    if (count_components(n, arcs) != n - static_cast<int>(h.size())) return false;
    return is_acyclic(modify_edges(m, {}, h).digraph());
}

std::pair<CheckValue, CheckValue> run_sym02(const CheckInput& in, const CheckParams&) {
    MixedGraph m = mixed_of(in);
    require(sym02_applies(m), "sym02 needs unoriented edges forming a forest with an acyclic contraction");
    MultiPoly t2 = cached_t(m, 2);
    return {eval_present(t2, {{"y", 2}}), eval_present(t2, {{"y", 0}})};
}

std::pair<CheckValue, CheckValue> run_t1_acyclic(const CheckInput& in, const CheckParams&) {
    MixedGraph m = mixed_of(in);
    const Digraph& d = m.digraph();
    int n = m.num_vertices(), c = n_components(d), edges = m.num_edges(), arcs = m.num_arcs();
    MultiPoly y = var("y"), one = cst(1);
    MultiPoly t1 = cached_t(m, 1).rename("y", "t").substitute("x", y + cst(2));
    int dt = std::max(0, t1.degree("t"));
    MultiPoly lhs = substitute_rational(t1, "t", y, y + one, dt);
    lhs = times_power(lhs, y + one, edges + c - n - dt);
    MultiPoly rhs({"y"});
    for_each_subset(d, ArcAction::Delete, [&](int k, const MinorInfo& mi) {
        if (!mi.acyclic) return;
        int e = edges - (arcs - k);
        if (e < 0) throw ArithmeticError("acyclic subgraph with more arcs than edges");
        rhs.add_term({e}, 1);
    });
    return {lhs, rhs};
}

// ---- graphs: fourientations and the two sign identities ----

std::pair<CheckValue, CheckValue> run_fourientation_cyclic(const CheckInput& in, const CheckParams&) {
    const Graph& g = graph_of(in);
    Digraph d = g.doubled();
    const auto& tab = partitions(d);
    MultiPoly lhs({"y"});
    for (const auto& e : tab.entries)
        if (e.contracted->totally_cyclic) lhs.add_term({e.s}, sign(e.r));
    MultiPoly y = var("y"), one = cst(1);
    MultiPoly t1 = cached_t(MixedGraph::from_graph(g), 1);
    int dx = std::max(0, t1.degree("x"));
    int n = g.num_vertices(), c = n_components(d);
    MultiPoly rhs = substitute_rational(t1, "x", y - cst(2), y - one, dx);
    rhs = times_power(rhs, y - one, n - c - dx) * MultiPoly::monomial("y", d.num_arcs() - g.num_edges());
    return {lhs, rhs};
}

std::pair<CheckValue, CheckValue> run_myster(const CheckInput& in, int index) {
    const Graph& g = graph_of(in);
    Digraph d = g.doubled();
    int m = d.num_arcs(), e = g.num_edges(), n = g.num_vertices(), c = n_components(d);
    Rational sum = 0;
    if (index == 4) {
        for_each_subset(d, ArcAction::Delete, [&](int, const MinorInfo& mi) {
            if (mi.totally_cyclic) sum += sign(mi.comps - c);
        });
        sum /= Rational(Integer(1) << e);
    } else {
        Rational half(-1, 2);
        for_each_subset(d, ArcAction::Delete, [&](int k, const MinorInfo& mi) {
            if (!mi.acyclic) return;
            Rational t = 1;
            for (int i = 0; i < m - k; ++i) t *= half;
            sum += t;
        });
        sum *= Rational(Integer(1) << e) * sign(n - c);
    }
    return {cst(sum), eval_present(tutte(g), {{"x", 0}, {"y", 2}})};
}

// ---- quasisymmetric checks ----

MultiPoly shift_one(const MultiPoly& c, int arcs) {
    MultiPoly one = cst(1);
    return scaled_substitution(c, one + var("y"), one + var("z"), one, arcs);
}

std::pair<CheckValue, CheckValue> run_qsym_expansion(const CheckInput& in, int which) {
    const Digraph& d = digraph_of(in);
    const auto& tab = partitions(d);
    int arcs = d.num_arcs();
    QSymAccumulator acc(tab.arcs, d.num_vertices());
    for (const auto& e : tab.entries) {
        MinorInfo& mi = *e.deleted;
        if (which == 1) acc.add(e.s, e.t, 1, minor_qsym(mi, true));
        else if (which == 2) acc.add(e.s, e.t, 1, minor_qsym(mi, false));
        else if (mi.acyclic) acc.add(e.s, e.t, 1, minor_qsym(mi, false));
    }
    const QSymFunction& b = cached_qsym_b(d);
    MultiPoly one = cst(1), y = var("y"), z = var("z");
    QSymFunction rhs;
    if (which == 1)
        rhs = b.map_coeffs([&](const MultiPoly& c) { return shift_one(c, arcs); });
    else if (which == 2)
        rhs = b.map_coeffs([&](const MultiPoly& c) { return scaled_substitution(c, one + y, one + z, one + y + z, arcs); });
    else
        rhs = omega(b.map_coeffs([&](const MultiPoly& c) { return shift_one(c, arcs); }));
    return {acc.result(), rhs};
}

std::pair<CheckValue, CheckValue> run_symmetry_acyclic_quasi(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    require(is_acyclic(d), "symmetry-acyclic-quasi needs an acyclic digraph");
    QSymFunction b1 = cached_qsym_b(d).map_coeffs([](const MultiPoly& c) { return eval_present(c, {{"z", 1}}); });
    int arcs = d.num_arcs();
    QSymFunction inv = b1.map_coeffs(
        [&](const MultiPoly& c) { return substitute_rational(c, "y", cst(1), var("y"), arcs); });
    return {omega(b1), rho(inv)};
}

std::pair<CheckValue, CheckValue> run_symmetry_forest_quasi(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    require(underlying_is_forest(d), "symmetry-forest-quasi needs a forest as underlying graph");
    const QSymFunction& b = cached_qsym_b(d);
    MultiPoly y = var("y"), z = var("z");
    int arcs = d.num_arcs();
    QSymFunction rhs =
        b.map_coeffs([&](const MultiPoly& c) { return scaled_substitution(c, y, z, y + z - cst(1), arcs); });
    return {omega(b), rhs};
}

// Sum over f: [n] -> [n] satisfying pred of prod_v w_v^f(v).
template <class Pred>
MultiPoly coloring_monomials(int n, Pred&& pred) {
    std::vector<std::string> names;
    for (int v = 1; v <= n; ++v) names.push_back("w" + std::to_string(v));
    MultiPoly out(names);
    std::vector<int> f(n, 1);
    // MultiPoly sorts its variables, so map vertex v to its slot
    std::vector<int> slot(n);
    for (int v = 0; v < n; ++v) slot[v] = out.var_index(names[v]);
    Exponents e(n);
    while (true) {
        if (pred(f)) {
            for (int v = 0; v < n; ++v) e[slot[v]] = f[v];
            out.add_term(e, 1);
        }
        int i = 0;
        while (i < n && f[i] == n) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    return out;
}

std::pair<CheckValue, CheckValue> run_p_partition(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    int n = d.num_vertices();
    require(n >= 1 && n <= 4, "p-partition check limited to 1..4 vertices");
    for (const auto& a : d.arcs()) require(!a.is_loop(), "p-partition check needs a loopless digraph");
    MultiPoly lhs = coloring_monomials(n, [&](const std::vector<int>& f) {
        for (const auto& a : d.arcs()) {
            int fu = f[a.tail - 1], fv = f[a.head - 1];
            if (fu > fv || (a.tail < a.head && fu == fv)) return false;
        }
        return true;
    });
    MultiPoly rhs = MultiPoly(lhs.vars());
    for (const auto& sigma : linear_extensions(d)) {
        rhs += coloring_monomials(n, [&](const std::vector<int>& f) {
            for (int i = 0; i + 1 < n; ++i) {
                int a = sigma[i], b = sigma[i + 1];
                if (f[a - 1] > f[b - 1] || (a < b && f[a - 1] == f[b - 1])) return false;
            }
            return true;
        });
    }
    return {lhs, rhs};
}

bool shareshian_wachs_shape(const Digraph& d) {
    return is_acyclic(d) && is_compatibly_labeled(d);
}

std::pair<CheckValue, CheckValue> run_shareshian_wachs(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    require(shareshian_wachs_shape(d), "shareshian-wachs needs a compatibly labeled acyclic digraph");
    require(p.order.has_value(), "shareshian-wachs needs a partial order");
    require(p.order->size() == d.num_vertices() && arcs_are_incomparable_pairs(d, *p.order),
            "shareshian-wachs needs the arcs to be exactly the incomparable pairs of the order");
    return {omega(chromatic_quasisym(d)), shareshian_wachs_sum(d, *p.order)};
}

std::vector<CheckParams> params_shareshian_wachs(const CheckInput& in, const SurveyLimits&) {
    const Digraph& d = digraph_of(in);
    std::vector<CheckParams> out;
    if (!shareshian_wachs_shape(d) || d.num_vertices() > 6) return out;
    for (auto& order : incomparability_orders(d)) {
        CheckParams p;
        p.order = order;
        out.push_back(p);
    }
    return out;
}

// ---- B-family checks ----

std::vector<CheckParams> word_params(const SurveyLimits& limits, bool antipalindromic_only,
                                     const std::vector<long>& ps = {}) {
    std::vector<CheckParams> out;
    for (const auto& w : all_words(std::min(limits.max_word_length, kWordLength))) {
        if (antipalindromic_only && !w.antipalindromic()) continue;
        if (ps.size() == 0) {
            CheckParams p;
            p.word = w;
            out.push_back(p);
        }
        for (long pv : ps) {
            CheckParams p;
            p.word = w;
            p.p = pv;
            out.push_back(p);
        }
    }
    return out;
}

std::pair<CheckValue, CheckValue> run_potts_one_w(const CheckInput& in, const CheckParams& p) {
    const Graph& g = graph_of(in);
    MultiPoly rhs = potts(g).substitute("y", var("y") * var("z"));
    return {cached_bw(g.doubled(), word_param(p)), rhs};
}

std::pair<CheckValue, CheckValue> run_potts_two_w(const CheckInput& in, const CheckParams& p) {
    const Graph& g = graph_of(in);
    const SignWord& w = word_param(p);
    MultiPoly lhs({"q", "y", "z"});
    for (const auto& o : enumerate_orientations(MixedGraph::from_graph(g))) lhs += cached_bw(o, w);
    lhs *= Rational(1) / Rational(Integer(1) << g.num_edges());
    MultiPoly rhs = potts(g).substitute("y", (var("y") + var("z")) * Rational(1, 2));
    return {lhs, rhs};
}

std::pair<CheckValue, CheckValue> run_potts_three_w(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    thread_local KeyedCache<MultiPoly> underlying_potts;
    MultiPoly rhs = underlying_potts.get(d.multiset_key(), [&] { return potts(d.underlying()); });
    return {scaled_substitution(cached_bw(d, word_param(p)), var("y"), var("y"), cst(1), d.num_arcs()), rhs};
}

std::pair<CheckValue, CheckValue> run_expansion_w(const CheckInput& in, const CheckParams& p, int index) {
    const Digraph& d = digraph_of(in);
    const SignWord& w = word_param(p);
    const auto& tab = partitions(d);
    Minor kind = index <= 2 ? Minor::Deleted : Minor::Contracted;
    bool strict = index % 2 == 1;
    YZQAccumulator acc(tab.arcs, tab.n);
    for (const auto& e : tab.entries) {
        const WordChromatic& wc = minor_word(pick(e, kind), w);
        acc.add(e.s, e.t, 1, strict ? wc.strict : wc.weak);
    }
    return {acc.result(), cached_rhs(d, index, &w)};
}

std::pair<CheckValue, CheckValue> run_bw_divisibility(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    const SignWord& w = word_param(p);
    require(w.antipalindromic(), "bw-divisibility needs an antipalindromic word");
    MultiPoly bw = cached_bw(d, w);
    MultiPoly qc = MultiPoly::monomial("q", n_components(d));
    try {
        return {bw, qc * exact_divide(bw, qc)};
    } catch (const ArithmeticError&) {
        return {bw, MultiPoly({"q", "y", "z"})};
    }
}

std::pair<CheckValue, CheckValue> run_coflow(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    const SignWord& w = word_param(p);
    require(w.antipalindromic(), "coflow needs an antipalindromic word");
    require(p.p >= 0, "coflow needs p >= 0");
    return {coflow_eval(d, w, p.p), b_w_eval(d, w, p.p)};
}

std::pair<CheckValue, CheckValue> run_bw_eval(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    const SignWord& w = word_param(p);
    require(p.p >= 0, "bw-eval needs p >= 0");
    MultiPoly rhs = at_q(cached_bw(d, w), w.size() * p.p + 1).extended({"y", "z"});
    return {b_w_eval(d, w, p.p), rhs};
}

std::pair<CheckValue, CheckValue> run_bm_one(const CheckInput& in, const CheckParams&) {
    const Digraph& d = digraph_of(in);
    MultiPoly b1 = b_m(d, 1).poly.rename("y1", "y").rename("z1", "z");
    return {b1, cached_b(d)};
}

bool constant_word(const SignWord& w) {
    return std::all_of(w.letters().begin(), w.letters().end(), [&](int l) { return l == w[0]; });
}

std::pair<CheckValue, CheckValue> run_bw_trivial(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    const SignWord& w = word_param(p);
    require(constant_word(w), "bw-trivial-words needs a word with all letters equal");
    return {cached_bw(d, w), cached_b(d)};
}

std::pair<CheckValue, CheckValue> run_bw_negation(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    const SignWord& w = word_param(p);
    MultiPoly swapped = cached_bw(d, w).rename("y", "u").rename("z", "y").rename("u", "z");
    return {cached_bw(d, w.negated()), swapped};
}

std::pair<CheckValue, CheckValue> run_bw_unit(const CheckInput& in, const CheckParams& p) {
    const Digraph& d = digraph_of(in);
    return {eval_present(cached_bw(d, word_param(p)), {{"y", 1}, {"z", 1}}), MultiPoly::monomial("q", d.num_vertices())};
}

std::pair<CheckValue, CheckValue> run_tree_invariance(const CheckInput& in, const CheckParams& p) {
    const Graph& g = graph_of(in);
    const SignWord& w = word_param(p);
    require(w.antipalindromic(), "tree-invariance needs an antipalindromic word");
    require(graph_is_forest(g), "tree-invariance needs a forest");
    require(g.num_vertices() <= 5, "tree-invariance limited to 5 vertices");
    auto orientations = enumerate_orientations(MixedGraph::from_graph(g));
    require(p.orientation && *p.orientation >= 0 && *p.orientation < static_cast<int>(orientations.size()),
            "tree-invariance needs an orientation index");
    MultiPoly qc = MultiPoly::monomial("q", count_components(g.oriented()));
    MultiPoly base = exact_divide(cached_bw(g.oriented(), w), qc);
    MultiPoly other = exact_divide(cached_bw(orientations[*p.orientation], w), qc);
    return {base, other};
}

std::vector<CheckParams> params_tree(const CheckInput& in, const SurveyLimits& limits) {
    const Graph& g = graph_of(in);
    std::vector<CheckParams> out;
    if (!graph_is_forest(g) || g.num_vertices() > 5) return out;
    int count = 1 << g.num_edges();
    for (auto p : word_params(limits, true))
        for (int o = 0; o < count; ++o) {
            p.orientation = o;
            out.push_back(p);
        }
    return out;
}

// ---- registry ----

bool three_way_ok(const Digraph& d, const SurveyLimits& l) {
    return d.num_arcs() <= std::min(l.max_arcs_three_way, kThreeWayArcs);
}
bool two_way_ok(const Digraph& d, const SurveyLimits& l) {
    return d.num_arcs() <= std::min(l.max_arcs_two_way, kTwoWayArcs);
}

ParamsFn always() {
    return [](const CheckInput&, const SurveyLimits&) { return single(); };
}
ParamsFn when_digraph(std::function<bool(const Digraph&, const SurveyLimits&)> pred,
                      std::function<std::vector<CheckParams>(const SurveyLimits&)> params = nullptr) {
    return [pred, params](const CheckInput& in, const SurveyLimits& l) {
        if (!pred(digraph_of(in), l)) return std::vector<CheckParams>{};
        return params ? params(l) : single();
    };
}

Runner plain(std::pair<CheckValue, CheckValue> (*f)(const CheckInput&, int), int index) {
    return [f, index](const CheckInput& in, const CheckParams&) { return f(in, index); };
}

std::vector<CheckEntry> build_registry() {
    using K = InputKind;
    std::vector<CheckEntry> r;
    auto add = [&](std::string id, K kind, std::string summary, Runner run, ParamsFn params) {
        r.push_back({{std::move(id), kind, std::move(summary)}, std::move(run), std::move(params)});
    };

    add("rec-edge", K::Digraph, "deletion-contraction of a pair of opposite arcs", run_rec_edge,
        [](const CheckInput& in, const SurveyLimits&) {
            const Digraph& d = digraph_of(in);
            std::vector<CheckParams> out;
            for (int i = 0; i < d.num_arcs(); ++i)
                if (opposite_partner(d, i)) {
                    CheckParams p;
                    p.arc = i;
                    out.push_back(p);
                }
            return out;
        });
    add("rec-arc", K::Digraph, "arc recurrence B_D + B_{D^-a} = (y+z)B_{D\\a} + (2-y-z)B_{D/a}", run_rec_arc,
        [](const CheckInput& in, const SurveyLimits&) {
            std::vector<CheckParams> out;
            for (int i = 0; i < digraph_of(in).num_arcs(); ++i) {
                CheckParams p;
                p.arc = i;
                out.push_back(p);
            }
            return out;
        });
    add("rec-tutte-cases", K::Mixed, "T^(i) recurrence on an unoriented edge", run_rec_tutte_cases, params_rec_tutte);
    add("loop-deletion", K::Digraph, "deleting loops leaves B unchanged", run_loop_deletion,
        when_digraph([](const Digraph& d, const SurveyLimits&) { return has_loop(d); }));
    add("subgraph-expansion", K::Mixed, "T^(i) as a sum over deletion/contraction of unoriented edges",
        run_subgraph_expansion, [](const CheckInput&, const SurveyLimits&) { return with_which({1, 2}); });
    add("forest-expansion", K::Mixed, "T^(i) as a sum over forests of unoriented edges with external activity",
        run_forest_expansion, params_forest);

    auto three = [](const Digraph& d, const SurveyLimits& l) { return three_way_ok(d, l); };
    auto two = [](const Digraph& d, const SurveyLimits& l) { return two_way_ok(d, l); };
    const char* exp_summary[] = {
        "sum of strict chromatic polynomials of D^{-T}\\R equals B(q,1+y,1+z)",
        "sum of weak chromatic polynomials of D^{-T}\\R equals the rescaled B",
        "sum of strict chromatic polynomials of D^{-T}/R equals B(q,y,z)",
        "sum of weak chromatic polynomials of D^{-T}/R equals the rescaled B",
    };
    for (int i = 1; i <= 4; ++i)
        add("expansions-" + std::to_string(i), K::Digraph, exp_summary[i - 1], plain(run_expansion, i),
            when_digraph(three));
    for (int i = 1; i <= 4; ++i)
        add("expansions-negq-" + std::to_string(i), K::Digraph,
            "partition sum matching B evaluated at -q (reciprocity form " + std::to_string(i) + ")",
            plain(run_expansion_negq, i), when_digraph(three));
    for (int i = 1; i <= 4; ++i)
        add("q-minus-one-" + std::to_string(i), K::Digraph,
            "acyclic / totally cyclic minors counted by B at q = -1 (form " + std::to_string(i) + ")",
            plain(run_q_minus_one, i), when_digraph(three));

    auto gf = [](const char* which) {
        return [which](const CheckInput& in, const CheckParams&) { return run_gf(in, which); };
    };
    add("gf-acyclic-reorient", K::Digraph, "acyclic reorientations by number of reversed arcs",
        gf("acyclic-reorient"), when_digraph(two));
    add("gf-acyclic-subgraph", K::Digraph, "acyclic subgraphs by number of arcs", gf("acyclic-subgraph"),
        when_digraph(two));
    add("gf-cyclic-reorient", K::Digraph, "totally cyclic reorientations by number of reversed arcs",
        gf("cyclic-reorient"), when_digraph(two));
    add("gf-cyclic-contract", K::Digraph, "totally cyclic contractions by number of remaining arcs",
        gf("cyclic-contract"), when_digraph(two));
    add("reciprocity", K::Digraph, "weak chromatic polynomial at -q versus the strict one of the condensation",
        run_reciprocity, always());
    add("planar-duality", K::Embedded, "B of the planar dual at q = -1", run_planar_duality,
        [](const CheckInput& in, const SurveyLimits&) {
            const auto& e = embedded_of(in);
            return is_planar_embedding(e.digraph, e.rotation) ? single() : std::vector<CheckParams>{};
        });
    add("classical-duality", K::Embedded, "B(q,y,y) of the planar dual via the Potts duality", run_classical_duality,
        [](const CheckInput& in, const SurveyLimits&) {
            const auto& e = embedded_of(in);
            return is_planar_embedding(e.digraph, e.rotation) ? single() : std::vector<CheckParams>{};
        });
    add("symmetry-acyclic", K::Digraph, "B(-q,y,1) versus B(q,1/y,1) for acyclic digraphs", run_symmetry_acyclic,
        when_digraph([](const Digraph& d, const SurveyLimits&) { return is_acyclic(d); }));
    add("symmetry-forest", K::Digraph, "B(-q,y,z) symmetry when the underlying graph is a forest",
        run_symmetry_forest, when_digraph([](const Digraph& d, const SurveyLimits&) { return underlying_is_forest(d); }));
    add("mysterious-1", K::Digraph, "signed count of acyclic subgraphs is the totally-cyclic indicator",
        plain(run_mysterious, 1), when_digraph(two));
    add("mysterious-2", K::Digraph, "signed count of totally cyclic subgraphs is the acyclic indicator",
        plain(run_mysterious, 2), when_digraph(two));

    add("chrom-partial", K::Mixed, "strictly-compatible colorings from T^(i)(1-q, 0)", run_chrom_partial,
        [](const CheckInput&, const SurveyLimits&) { return with_which({1, 2}); });
    add("t20", K::Mixed, "T^(i)(2,0) counts acyclic complete orientations", run_t20,
        [](const CheckInput&, const SurveyLimits&) { return with_which({1, 2}); });
    add("t02", K::Mixed, "T^(2)(0,2) counts totally cyclic complete orientations", run_t02,
        [](const CheckInput&, const SurveyLimits&) { return with_which({2}); });
    add("sym02", K::Mixed, "T^(2)(x,2) = T^(2)(x,0) when all complete orientations are acyclic", run_sym02,
        [](const CheckInput& in, const SurveyLimits&) {
            return sym02_applies(mixed_of(in)) ? with_which({2}) : std::vector<CheckParams>{};
        });
    add("t1-acyclic", K::Mixed, "T^(1) at (y+2, y/(y+1)) counts acyclic subgraphs", run_t1_acyclic,
        [](const CheckInput& in, const SurveyLimits& l) {
            return two_way_ok(mixed_of(in).digraph(), l) ? single() : std::vector<CheckParams>{};
        });
    add("fourientation-cyclic", K::Graph, "totally cyclic contractions and reorientations of a doubled graph",
        run_fourientation_cyclic, [](const CheckInput& in, const SurveyLimits& l) {
            return three_way_ok(graph_of(in).doubled(), l) ? single() : std::vector<CheckParams>{};
        });
    auto myster = [](int i) {
        return [i](const CheckInput& in, const CheckParams&) { return run_myster(in, i); };
    };
    auto graph_two = [](const CheckInput& in, const SurveyLimits& l) {
        return two_way_ok(graph_of(in).doubled(), l) ? single() : std::vector<CheckParams>{};
    };
    add("myster-4", K::Graph, "signed totally cyclic subgraphs of a doubled graph give T_G(0,2)", myster(4),
        graph_two);
    add("myster-5", K::Graph, "weighted acyclic subgraphs of a doubled graph give T_G(0,2)", myster(5), graph_two);

    auto qexp = [](int i) {
        return [i](const CheckInput& in, const CheckParams&) { return run_qsym_expansion(in, i); };
    };
    add("delete-quasi", K::Digraph, "quasisymmetric strict chromatic expansion of B(x;1+y,1+z)", qexp(1),
        when_digraph(three));
    add("geq-delete-quasi", K::Digraph, "quasisymmetric weak chromatic expansion of the rescaled B", qexp(2),
        when_digraph(three));
    add("q-1-quasi", K::Digraph, "acyclic weak chromatic expansion equals omega(B(x;1+y,1+z))", qexp(3),
        when_digraph(three));
    add("symmetry-acyclic-quasi", K::Digraph, "omega(B(x;y,1)) = rho(y^|A| B(x;1/y,1)) for acyclic digraphs",
        run_symmetry_acyclic_quasi, when_digraph([](const Digraph& d, const SurveyLimits&) { return is_acyclic(d); }));
    add("symmetry-forest-quasi", K::Digraph, "omega(B(x;y,z)) symmetry when the underlying graph is a forest",
        run_symmetry_forest_quasi,
        when_digraph([](const Digraph& d, const SurveyLimits&) { return underlying_is_forest(d); }));
    add("p-partition", K::Digraph, "D-partitions are the disjoint union of sigma-partitions over linear extensions",
        run_p_partition, when_digraph([](const Digraph& d, const SurveyLimits&) {
            if (d.num_vertices() < 1 || d.num_vertices() > 4) return false;
            return std::none_of(d.arcs().begin(), d.arcs().end(), [](const Arc& a) { return a.is_loop(); });
        }));
    add("shareshian-wachs", K::Digraph, "fundamental expansion of omega of the chromatic quasisymmetric function",
        run_shareshian_wachs, params_shareshian_wachs);

    auto words = [](bool anti, std::vector<long> ps = {}) {
        return [anti, ps](const SurveyLimits& l) { return word_params(l, anti, ps); };
    };
    add("potts-one-w", K::Graph, "B^w of a doubled graph is P(q, yz)", run_potts_one_w,
        [words](const CheckInput&, const SurveyLimits& l) { return words(false)(l); });
    add("potts-two-w", K::Graph, "average of B^w over orientations is P(q, (y+z)/2)", run_potts_two_w,
        [words](const CheckInput& in, const SurveyLimits& l) {
            return graph_of(in).num_edges() <= 6 ? words(false)(l) : std::vector<CheckParams>{};
        });
    add("potts-three-w", K::Digraph, "B^w(q,y,y) is the Potts polynomial of the underlying graph", run_potts_three_w,
        when_digraph([](const Digraph&, const SurveyLimits&) { return true; }, words(false)));
    for (int i = 1; i <= 4; ++i)
        add("expansions-w-" + std::to_string(i), K::Digraph,
            "w-chromatic partition sum form " + std::to_string(i),
            [i](const CheckInput& in, const CheckParams& p) { return run_expansion_w(in, p, i); },
            when_digraph(three, words(false)));
    add("bw-divisibility", K::Digraph, "q^c(D) divides B^w for antipalindromic w", run_bw_divisibility,
        when_digraph([](const Digraph&, const SurveyLimits&) { return true; }, words(true)));
    add("coflow", K::Digraph, "coflow enumeration equals the banded coloring count at q = mp+1", run_coflow,
        when_digraph([](const Digraph&, const SurveyLimits&) { return true; }, words(true, {1, 2})));
    add("bw-eval", K::Digraph, "interpolated B^w agrees with direct banded counts at q = mp+1", run_bw_eval,
        when_digraph([](const Digraph&, const SurveyLimits&) { return true; }, words(false, {1, 2})));
    add("bm-one", K::Digraph, "B^(1) equals B", run_bm_one, always());
    add("bw-trivial-words", K::Digraph, "B^w equals B for words with all letters equal", run_bw_trivial,
        [](const CheckInput&, const SurveyLimits& l) {
            std::vector<CheckParams> out;
            for (auto& p : word_params(l, false))
                if (constant_word(*p.word)) out.push_back(p);
            return out;
        });
    add("bw-negation", K::Digraph, "negating w swaps y and z", run_bw_negation,
        when_digraph([](const Digraph&, const SurveyLimits&) { return true; }, words(false)));
    add("bw-unit", K::Digraph, "B^w(q,1,1) = q^|V|", run_bw_unit,
        when_digraph([](const Digraph&, const SurveyLimits&) { return true; }, words(false)));
    add("tree-invariance", K::Graph, "q^-c B^w is the same for every orientation of a forest", run_tree_invariance,
        params_tree);
    return r;
}

const std::vector<CheckEntry>& registry() {
    static const std::vector<CheckEntry> r = build_registry();
    return r;
}

const CheckEntry& find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    throw ParseError("unknown check id '" + id + "'");
}

bool kind_accepts(InputKind check, InputKind input) {
    switch (check) {
        case InputKind::Digraph: return input == InputKind::Digraph || input == InputKind::Embedded;
        case InputKind::Mixed:
            return input == InputKind::Mixed || input == InputKind::Digraph || input == InputKind::Graph;
        default: return check == input;
    }
}

const char* kind_name(InputKind k) {
    switch (k) {
        case InputKind::Digraph: return "digraph";
        case InputKind::Mixed: return "mixed graph";
        case InputKind::Embedded: return "embedded digraph";
        default: return "graph";
    }
}

CheckValue tidy(const CheckValue& v) {
    if (auto* p = std::get_if<MultiPoly>(&v)) return p->trimmed();
    return std::get<QSymFunction>(v).map_coeffs([](const MultiPoly& c) { return c.trimmed(); });
}

}  // namespace

InputKind kind_of(const CheckInput& in) {
    switch (in.index()) {
        case 0: return InputKind::Digraph;
        case 1: return InputKind::Mixed;
        case 2: return InputKind::Embedded;
        default: return InputKind::Graph;
    }
}

std::string render_inline(const CheckInput& in) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmbeddedDigraph>)
                return render_inline(x.digraph) + " | " + render_inline(x.rotation);
            else
                return render_inline(x);
        },
        in);
}

std::string render_params(const CheckParams& p) {
    std::string out;
    auto tag = [&](const std::string& s) { out += " [" + s + "]"; };
    if (p.arc) tag("arc " + std::to_string(*p.arc));
    if (p.block) tag("edge " + std::to_string(*p.block));
    if (p.which != 1) tag("T" + std::to_string(p.which));
    if (p.reversed) tag("reversed order");
    if (p.word) tag("word " + p.word->str());
    if (p.order) {
        std::string rel;
        for (auto [u, v] : p.order->relations()) rel += (rel.empty() ? "" : ",") + std::to_string(u) + "<" + std::to_string(v);
        tag("order " + (rel.empty() ? std::string("empty") : rel));
    }
    if (p.p != 1) tag("p " + std::to_string(p.p));
    if (p.orientation) tag("orientation " + std::to_string(*p.orientation));
    return out;
}

CheckReport make_report(std::string id, std::string input, CheckValue lhs, CheckValue rhs) {
    CheckReport r{std::move(id), std::move(input), tidy(lhs), tidy(rhs), false};
    r.passed = std::visit(
        [&](const auto& a) {
            using T = std::decay_t<decltype(a)>;
            const T* b = std::get_if<T>(&r.rhs);
            return b && a == *b;
        },
        r.lhs);
    return r;
}

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

const CheckInfo& find_check(const std::string& id) { return find_entry(id).info; }

CheckReport run_check(const std::string& id, const CheckInput& in, const CheckParams& params) {
    const CheckEntry& e = find_entry(id);
    if (!kind_accepts(e.info.kind, kind_of(in)))
        throw PreconditionError(id + " expects a " + kind_name(e.info.kind) + " input");
    auto [lhs, rhs] = e.run(in, params);
    return make_report(id, render_inline(in) + render_params(params), std::move(lhs), std::move(rhs));
}

std::vector<CheckParams> applicable_params(const std::string& id, const CheckInput& in, const SurveyLimits& limits) {
    const CheckEntry& e = find_entry(id);
    if (!kind_accepts(e.info.kind, kind_of(in))) return {};
    return e.params(in, limits);
}

std::vector<CheckReport> run_applicable(const std::string& id, const CheckInput& in, const SurveyLimits& limits) {
    std::vector<CheckReport> out;
    for (const auto& p : applicable_params(id, in, limits)) out.push_back(run_check(id, in, p));
    return out;
}

nlohmann::json to_json(const CheckReport& r) {
    auto value = [](const CheckValue& v) {
        return std::visit([](const auto& x) { return to_json(x); }, v);
    };
    return {{"check", r.check_id}, {"input", r.input}, {"passed", r.passed}, {"lhs", value(r.lhs)},
            {"rhs", value(r.rhs)}};
}

}  // namespace bpoly
