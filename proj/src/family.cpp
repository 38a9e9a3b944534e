#include "bpoly/family.hpp"

#include "bpoly/error.hpp"

#include <unordered_map>

namespace bpoly {

SignWord::SignWord(std::vector<int> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw PreconditionError("empty sign word");
    for (int l : letters_)
        if (l != 1 && l != -1) throw PreconditionError("sign word letters must be +1 or -1");
}

SignWord SignWord::parse(std::string_view text) {
    std::vector<int> letters;
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] == '+') {
            letters.push_back(1);
            ++i;
        } else if (text[i] == '-') {
            letters.push_back(-1);
            ++i;
        } else if (text.substr(i, 3) == "\xE2\x88\x92") {
            letters.push_back(-1);
            i += 3;
        } else {
            throw ParseError("invalid sign word '" + std::string(text) + "'");
        }
    }
    if (letters.empty()) throw ParseError("empty sign word");
    return SignWord(std::move(letters));
}

bool SignWord::antipalindromic() const {
    int m = size();
    for (int k = 0; k < m; ++k)
        if (letters_[m - 1 - k] != -letters_[k]) return false;
    return true;
}

SignWord SignWord::negated() const {
    std::vector<int> out(letters_);
    for (int& l : out) l = -l;
    return SignWord(std::move(out));
}

std::string SignWord::str() const {
    std::string s;
    for (int l : letters_) s += l > 0 ? '+' : '-';
    return s;
}

std::vector<SignWord> all_words(int max_length) {
    std::vector<SignWord> out;
    for (int len = 1; len <= max_length; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<int> letters(len);
            for (int k = 0; k < len; ++k) letters[k] = (mask >> (len - 1 - k)) & 1 ? -1 : 1;
            out.emplace_back(std::move(letters));
        }
    return out;
}

std::string band_up(int k) { return "y" + std::to_string(k); }
std::string band_down(int k) { return "z" + std::to_string(k); }

namespace {

void check_work(long q, int n, int arcs, std::uint64_t work_bound) {
    long double work = 1;
    for (int i = 0; i < n; ++i) work *= static_cast<long double>(q);
    work *= arcs > 0 ? arcs : 1;
    if (work > static_cast<long double>(work_bound))
        throw PreconditionError("enumeration of " + std::to_string(q) + "^" + std::to_string(n) +
                                " colorings exceeds the work bound");
}

// Accumulates counts of arc-class vectors; class 0 is "no variable".
class ClassCounter {
public:
    ClassCounter(int classes, int arcs) : classes_(classes), radix_(arcs + 1) {
        long double size = 1;
        for (int i = 0; i < classes; ++i) size *= radix_;
        if (size <= (1 << 20)) dense_.assign(static_cast<std::size_t>(size), 0);
        weight_.assign(classes + 1, 0);
        std::uint64_t w = 1;
        for (int c = 1; c <= classes; ++c, w *= radix_) weight_[c] = w;
    }
    std::uint64_t weight(int cls) const { return weight_[cls]; }
    void add(std::uint64_t code, std::int64_t count = 1) {
        if (!dense_.empty())
            dense_[code] += count;
        else
            sparse_[code] += count;
    }
    // names[c-1] is the variable of class c.
    MultiPoly to_poly(const std::vector<std::string>& names) const {
        MultiPoly out(names);
        auto emit = [&](std::uint64_t code, std::int64_t count) {
            if (count == 0) return;
            Exponents e(classes_);
            for (int c = 0; c < classes_; ++c) {
                e[c] = static_cast<int>(code % radix_);
                code /= radix_;
            }
            out.add_term(e, Rational(static_cast<long>(count)));
        };
        for (std::size_t i = 0; i < dense_.size(); ++i) emit(i, dense_[i]);
        for (const auto& [code, count] : sparse_) emit(code, count);
        return out.trimmed();
    }

private:
    int classes_;
    std::uint64_t radix_;
    std::vector<std::uint64_t> weight_;
    std::vector<std::int64_t> dense_;
    std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

// Calls f(colors) for every map V -> {0..q-1}; colors is updated in place.
template <class F>
void for_each_coloring(int n, long q, F&& f) {
    std::vector<long> colors(n, 0);
    while (true) {
        f(colors);
        int i = n - 1;
        while (i >= 0 && ++colors[i] == q) colors[i--] = 0;
        if (i < 0) return;
    }
}

// Enumerates all q-colorings with q = mp+1; band_class[delta + mp] gives the
// class of an arc with color difference delta.
MultiPoly banded_sum(const Digraph& d, long q, long mp, const std::vector<int>& band_class,
                     const std::vector<std::string>& names, std::uint64_t work_bound) {
    int n = d.num_vertices();
    check_work(q, n, d.num_arcs(), work_bound);
    ClassCounter counter(static_cast<int>(names.size()), d.num_arcs());
    std::vector<std::uint64_t> code_of(band_class.size());
    for (std::size_t i = 0; i < band_class.size(); ++i) code_of[i] = counter.weight(band_class[i]);
    const auto& arcs = d.arcs();
    for_each_coloring(n, q, [&](const std::vector<long>& f) {
        std::uint64_t code = 0;
        for (const auto& a : arcs) code += code_of[f[a.head - 1] - f[a.tail - 1] + mp];
        counter.add(code);
    });
    return counter.to_poly(names);
}

long band_of(long r, long p) { return (r + p - 1) / p; }

}  // namespace

MultiPoly b_m_eval(const Digraph& d, int m, long p, std::uint64_t work_bound) {
    if (m < 1) throw PreconditionError("family index must be positive");
    if (p < 0) throw PreconditionError("negative band width");
    long mp = m * p, q = mp + 1;
    std::vector<std::string> names;
    for (int k = 1; k <= m; ++k) names.push_back(band_up(k));
    for (int k = 1; k <= m; ++k) names.push_back(band_down(k));
    std::vector<int> cls(2 * mp + 1, 0);
    for (long delta = 1; delta <= mp; ++delta) {
        int k = static_cast<int>(band_of(delta, p));
        cls[mp + delta] = k;
        cls[mp - delta] = m + k;
    }
    return banded_sum(d, q, mp, cls, names, work_bound);
}

MultiPoly b_w_eval(const Digraph& d, const SignWord& w, long p, std::uint64_t work_bound) {
    if (p < 0) throw PreconditionError("negative band width");
    long m = w.size(), mp = m * p, q = mp + 1;
    std::vector<int> cls(2 * mp + 1, 0);
    for (long delta = 1; delta <= mp; ++delta) {
        int k = static_cast<int>(band_of(delta, p));
        bool up = w[k - 1] > 0;
        cls[mp + delta] = up ? 1 : 2;
        cls[mp - delta] = up ? 2 : 1;
    }
    MultiPoly out = banded_sum(d, q, mp, cls, {"y", "z"}, work_bound);
    return out.extended(merge_vars(out.vars(), {"y", "z"}));
}

FamilyPolynomial b_m(const Digraph& d, int m, std::uint64_t work_bound) {
    thread_local std::unordered_map<std::string, MultiPoly> cache;
    std::string key = d.canonical_key() + "#" + std::to_string(m);
    if (auto it = cache.find(key); it != cache.end()) return {m, it->second};
    int n = d.num_vertices();
    std::vector<std::pair<Rational, MultiPoly>> points;
    for (long p = 0; p <= n + 2; ++p) points.emplace_back(Rational(m * p + 1), b_m_eval(d, m, p, work_bound));
    MultiPoly poly;
    try {
        poly = interpolate_in_q(points, n);
        std::vector<std::string> names{"q"};
        for (int k = 1; k <= m; ++k) names.push_back(band_up(k));
        for (int k = 1; k <= m; ++k) names.push_back(band_down(k));
        poly = poly.extended(merge_vars(poly.vars(), names));
    } catch (const ArithmeticError&) {
        throw ArithmeticError("family polynomial of index " + std::to_string(m) +
                              " exceeds degree |V| in q: verification point mismatch");
    }
    cache.emplace(std::move(key), poly);
    return {m, poly};
}

MultiPoly specialize_word(const FamilyPolynomial& f, const SignWord& w) {
    if (w.size() != f.m) throw PreconditionError("word length differs from family index");
    std::map<std::string, MultiPoly> nums;
    MultiPoly y = MultiPoly::variable("y"), z = MultiPoly::variable("z");
    for (int k = 1; k <= f.m; ++k) {
        bool up = w[k - 1] > 0;
        nums[band_up(k)] = up ? y : z;
        nums[band_down(k)] = up ? z : y;
    }
    std::vector<std::string> names;
    for (const auto& [v, _] : nums) names.push_back(v);
    int deg = f.poly.total_degree(names);
    MultiPoly out = substitute_rational(f.poly, nums, MultiPoly::constant(1), deg < 0 ? 0 : deg).trimmed();
    return out.extended(merge_vars(out.vars(), {"q", "y", "z"}));
}

MultiPoly b_w(const Digraph& d, const SignWord& w, std::uint64_t work_bound) {
    return specialize_word(b_m(d, w.size(), work_bound), w);
}

MultiPoly coflow_eval(const Digraph& d, const SignWord& w, long p, std::uint64_t work_bound) {
    if (!w.antipalindromic()) throw PreconditionError("coflow evaluation needs an antipalindromic word");
    if (p < 0) throw PreconditionError("negative band width");
    long m = w.size(), q = m * p + 1;
    int n = d.num_vertices();
    // spanning forest by search; order lists tree arcs so that the tail side
    // of each (in search direction) is already assigned
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < d.num_arcs(); ++i) {
        const Arc& a = d.arc(i);
        if (a.is_loop()) continue;
        adj[a.tail - 1].push_back({i, a.head - 1});
        adj[a.head - 1].push_back({i, a.tail - 1});
    }
    struct Step {
        int arc, from, to;
    };
    std::vector<Step> steps;
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [i, v] : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    steps.push_back({i, u, v});
                    stack.push_back(v);
                }
        }
    }
    int free_arcs = static_cast<int>(steps.size());
    check_work(q, free_arcs, d.num_arcs(), work_bound);
    ClassCounter counter(2, d.num_arcs());
    std::vector<std::uint64_t> code_of(q, 0);
    for (long r = 1; r < q; ++r) code_of[r] = counter.weight(w[band_of(r, p) - 1] > 0 ? 1 : 2);
    std::vector<long> phi(n, 0);
    for_each_coloring(free_arcs, q, [&](const std::vector<long>& values) {
        // value g(a) = phi(head) - phi(tail) mod q on each forest arc
        for (int s = 0; s < free_arcs; ++s) {
            const Step& st = steps[s];
            bool forward = d.arc(st.arc).tail - 1 == st.from;
            phi[st.to] = (phi[st.from] + (forward ? values[s] : q - values[s])) % q;
        }
        std::uint64_t code = 0;
        for (const auto& a : d.arcs()) code += code_of[((phi[a.head - 1] - phi[a.tail - 1]) % q + q) % q];
        counter.add(code);
    });
    MultiPoly qc = MultiPoly::constant(1);
    for (int i = 0; i < comps; ++i) qc *= Rational(q);
    MultiPoly out = counter.to_poly({"y", "z"}) * qc;
    return out.extended(merge_vars(out.vars(), {"y", "z"}));
}

MultiPoly strict_w_chromatic(const Digraph& d, const SignWord& w) {
    return b_w(d, w).eval({{"z", 1}}).coeff("y", d.num_arcs()).trimmed();
}

MultiPoly weak_w_chromatic(const Digraph& d, const SignWord& w) {
    return b_w(d, w).eval({{"y", 0}, {"z", 1}}).trimmed();
}

}  // namespace bpoly
