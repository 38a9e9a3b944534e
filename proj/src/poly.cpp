#include "bpoly/poly.hpp"

#include "bpoly/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace bpoly {

namespace {

struct VarKey {
    int cls;
    std::string prefix;
    long number;
    std::string name;
    auto operator<=>(const VarKey&) const = default;
};

VarKey var_key(const std::string& v) {
    if (v == "q") return {0, "", 0, v};
    if (v == "y") return {1, "", 0, v};
    if (v == "z") return {2, "", 0, v};
    if (v == "x") return {3, "", 0, v};
    std::size_t cut = v.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(v[cut - 1]))) --cut;
    std::string prefix = v.substr(0, cut);
    long number = cut < v.size() && v.size() - cut < 10 ? std::stol(v.substr(cut)) : -1;
    if (number >= 0 && prefix == "y") return {4, "", number, v};
    if (number >= 0 && prefix == "z") return {5, "", number, v};
    return {6, prefix, number, v};
}

std::vector<int> positions_in(const std::vector<std::string>& from, const std::vector<std::string>& to) {
    std::vector<int> pos(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
        auto it = std::lower_bound(to.begin(), to.end(), from[i], var_less);
        if (it == to.end() || *it != from[i]) throw PreconditionError("variable '" + from[i] + "' missing from target universe");
        pos[i] = static_cast<int>(it - to.begin());
    }
    return pos;
}

}  // namespace

bool var_less(const std::string& a, const std::string& b) { return var_key(a) < var_key(b); }

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), var_less);
    return out;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    std::sort(vars_.begin(), vars_.end(), var_less);
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name) { return monomial(name, 1); }

MultiPoly MultiPoly::monomial(const std::string& name, int k, const Rational& c) {
    MultiPoly p({name});
    p.add_term(Exponents{k}, c);
    return p;
}

std::optional<Rational> MultiPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() > 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    for (int x : e)
        if (x != 0) return std::nullopt;
    return c;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name, var_less);
    if (it == vars_.end() || *it != name) return -1;
    return static_cast<int>(it - vars_.begin());
}

int MultiPoly::degree(const std::string& name) const {
    if (terms_.empty()) return -1;
    int i = var_index(name);
    if (i < 0) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int MultiPoly::total_degree(const std::vector<std::string>& names) const {
    if (terms_.empty()) return -1;
    std::vector<int> idx;
    for (const auto& n : names)
        if (int i = var_index(n); i >= 0) idx.push_back(i);
    int d = 0;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int i : idx) s += e[i];
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::extended(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    MultiPoly out(vars);
    auto pos = positions_in(vars_, out.vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f(out.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::trimmed() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    std::vector<std::string> keep;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) keep.push_back(vars_[i]);
    MultiPoly out(keep);
    for (const auto& [e, c] : terms_) {
        Exponents f;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) f.push_back(e[i]);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::coeff(const std::string& name, int k) const {
    int vi = var_index(name);
    if (vi < 0) throw PreconditionError("unknown variable '" + name + "'");
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + vi);
    MultiPoly out(rest);
    for (const auto& [e, c] : terms_) {
        if (e[vi] != k) continue;
        Exponents f = e;
        f.erase(f.begin() + vi);
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly MultiPoly::eval(const std::map<std::string, Rational>& values) const {
    std::vector<int> sub(vars_.size(), -1);
    std::vector<const Rational*> val;
    std::vector<std::string> rest;
    for (const auto& [name, v] : values) {
        int i = var_index(name);
        if (i < 0) throw PreconditionError("unknown variable '" + name + "'");
        sub[i] = static_cast<int>(val.size());
        val.push_back(&v);
    }
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (sub[i] < 0) rest.push_back(vars_[i]);
    std::vector<std::vector<Rational>> powers(val.size(), std::vector<Rational>{Rational(1)});
    MultiPoly out(rest);
    for (const auto& [e, c] : terms_) {
        Rational coef = c;
        Exponents f;
        f.reserve(rest.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (sub[i] < 0) {
                f.push_back(e[i]);
                continue;
            }
            auto& pw = powers[sub[i]];
            while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * *val[sub[i]]);
            coef *= pw[e[i]];
        }
        out.add_term(f, coef);
    }
    return out;
}

Rational MultiPoly::value(const std::map<std::string, Rational>& values) const {
    std::map<std::string, Rational> known;
    for (const auto& [k, v] : values)
        if (has_var(k)) known.emplace(k, v);
    auto c = eval(known).as_constant();
    if (!c) throw PreconditionError("value(): not every occurring variable was given");
    return *c;
}

MultiPoly MultiPoly::substitute(const std::string& name, const MultiPoly& p) const {
    int vi = var_index(name);
    if (vi < 0) return *this;
    std::map<int, MultiPoly> pieces;
    std::vector<std::string> rest = vars_;
    rest.erase(rest.begin() + vi);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.erase(f.begin() + vi);
        auto [it, ins] = pieces.try_emplace(e[vi], MultiPoly(rest));
        it->second.terms_.emplace(std::move(f), c);
    }
    MultiPoly out(merge_vars(rest, p.vars_));
    MultiPoly power = MultiPoly::constant(1);
    int at = 0;
    for (const auto& [k, piece] : pieces) {
        while (at < k) {
            power = power * p;
            ++at;
        }
        out += piece * power;
    }
    return out;
}

MultiPoly MultiPoly::rename(const std::string& from, const std::string& to) const {
    int vi = var_index(from);
    if (vi < 0) throw PreconditionError("unknown variable '" + from + "'");
    if (from == to) return *this;
    if (has_var(to)) return substitute(from, MultiPoly::variable(to));
    std::vector<std::string> names = vars_;
    names[vi] = to;
    MultiPoly out(names);
    auto pos = positions_in(names, out.vars_);
    for (const auto& [e, c] : terms_) {
        Exponents f(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
        out.terms_.emplace(std::move(f), c);
    }
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        auto merged = merge_vars(vars_, o.vars_);
        if (merged != vars_) *this = extended(merged);
        if (merged != o.vars_) return *this += o.extended(merged);
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out = a;
    for (auto& [e, v] : out.terms_) v = -v;
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ != b.vars_) {
        auto merged = merge_vars(a.vars_, b.vars_);
        return a.extended(merged) * b.extended(merged);
    }
    MultiPoly out(a.vars_);
    Exponents f(a.vars_.size());
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = ea[i] + eb[i];
            mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            out.add_term(f, prod);
        }
    }
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto merged = merge_vars(a.vars_, b.vars_);
    return a.extended(merged).terms_ == b.extended(merged).terms_;
}

MultiPoly pow(const MultiPoly& p, int k) {
    if (k < 0) throw PreconditionError("negative power");
    MultiPoly out = MultiPoly::constant(1, p.vars());
    MultiPoly base = p;
    while (k > 0) {
        if (k & 1) out = out * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return out;
}

MultiPoly substitute_rational(const MultiPoly& p, const std::string& var, const MultiPoly& num,
                              const MultiPoly& den, int clear_power) {
    return substitute_rational(p, std::map<std::string, MultiPoly>{{var, num}}, den, clear_power);
}

MultiPoly substitute_rational(const MultiPoly& p, const std::map<std::string, MultiPoly>& nums,
                              const MultiPoly& den, int clear_power) {
    const auto& vars = p.vars();
    std::vector<int> idx;
    std::vector<const MultiPoly*> numerators;
    std::vector<bool> substituted(vars.size(), false);
    for (const auto& [name, num] : nums) {
        int i = p.var_index(name);
        if (i < 0) continue;
        idx.push_back(i);
        numerators.push_back(&num);
        substituted[i] = true;
    }
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (!substituted[i]) rest.push_back(vars[i]);

    std::map<Exponents, MultiPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents key(idx.size());
        int total = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) total += key[j] = e[idx[j]];
        if (total > clear_power)
            throw PreconditionError("substitute_rational: clear_power " + std::to_string(clear_power) +
                                    " below degree " + std::to_string(total));
        Exponents f;
        f.reserve(rest.size());
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (!substituted[i]) f.push_back(e[i]);
        auto [it, ins] = groups.try_emplace(key, MultiPoly(rest));
        it->second.add_term(f, c);
    }

    std::vector<std::vector<MultiPoly>> num_pows(idx.size());
    std::vector<MultiPoly> den_pows{MultiPoly::constant(1)};
    auto num_pow = [&](std::size_t j, int k) -> const MultiPoly& {
        auto& v = num_pows[j];
        if (v.empty()) v.push_back(MultiPoly::constant(1));
        while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * *numerators[j]);
        return v[k];
    };
    auto den_pow = [&](int k) -> const MultiPoly& {
        while (static_cast<int>(den_pows.size()) <= k) den_pows.push_back(den_pows.back() * den);
        return den_pows[k];
    };

    std::vector<std::string> out_vars = rest;
    for (auto* n : numerators) out_vars = merge_vars(out_vars, n->vars());
    out_vars = merge_vars(out_vars, den.vars());
    MultiPoly out(out_vars);
    for (const auto& [key, piece] : groups) {
        int total = 0;
        MultiPoly factor = MultiPoly::constant(1);
        for (std::size_t j = 0; j < key.size(); ++j) {
            total += key[j];
            if (key[j]) factor = factor * num_pow(j, key[j]);
        }
        factor = factor * den_pow(clear_power - total);
        out += piece * factor;
    }
    return out;
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
    auto vars = merge_vars(p.vars(), q.vars());
    MultiPoly rem = p.extended(vars);
    MultiPoly d = q.extended(vars);
    MultiPoly quot(vars);
    const auto& [lead_e, lead_c] = *d.terms().begin();
    Exponents te(vars.size());
    while (!rem.is_zero()) {
        Exponents re = rem.terms().begin()->first;
        Rational rc = rem.terms().begin()->second;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            te[i] = re[i] - lead_e[i];
            if (te[i] < 0) throw ArithmeticError("exact_divide: nonzero remainder");
        }
        Rational tc = rc / lead_c;
        quot.add_term(te, tc);
        Exponents f(vars.size());
        for (const auto& [e, c] : d.terms()) {
            for (std::size_t i = 0; i < vars.size(); ++i) f[i] = te[i] + e[i];
            rem.add_term(f, -tc * c);
        }
    }
    return quot;
}

MultiPoly binomial_poly(const std::string& var, int k) {
    MultiPoly out = MultiPoly::constant(1, {var});
    for (int i = 0; i < k; ++i) {
        MultiPoly factor = MultiPoly::variable(var);
        factor.add_term({0}, Rational(-i));
        out = out * factor;
    }
    out *= Rational(1, 1) / Rational(factorial(k));
    return out;
}

std::map<int, MultiPoly> falling_factorial_coeffs(const MultiPoly& p, const std::string& var) {
    std::map<int, MultiPoly> out;
    if (p.is_zero()) return out;
    if (!p.has_var(var)) {
        out.emplace(0, p);
        return out;
    }
    int deg = p.degree(var);
    std::vector<MultiPoly> values;
    for (int j = 0; j <= deg; ++j) values.push_back(p.eval({{var, Rational(j)}}));
    for (int k = 0; k <= deg; ++k) {
        MultiPoly c = values[0] * Rational(0);
        for (int j = 0; j <= k; ++j) {
            Rational w(binomial(k, j));
            if ((k - j) % 2) w = -w;
            c += values[j] * w;
        }
        if (!c.is_zero()) out.emplace(k, std::move(c));
    }
    return out;
}

MultiPoly interpolate_in_q(const std::vector<std::pair<Rational, MultiPoly>>& points, int degree,
                           const std::string& var) {
    if (degree < 0) throw PreconditionError("negative interpolation degree");
    if (static_cast<int>(points.size()) < degree + 1)
        throw PreconditionError("interpolate_in_q: need at least degree+1 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw PreconditionError("interpolate_in_q: duplicate q-value");

    MultiPoly out({var});
    for (int i = 0; i <= degree; ++i) {
        MultiPoly basis = MultiPoly::constant(1, {var});
        Rational denom = 1;
        for (int j = 0; j <= degree; ++j) {
            if (j == i) continue;
            MultiPoly factor = MultiPoly::variable(var);
            factor.add_term({0}, -points[j].first);
            basis = basis * factor;
            denom *= points[i].first - points[j].first;
        }
        basis *= Rational(1) / denom;
        out += basis * points[i].second;
    }
    for (std::size_t i = degree + 1; i < points.size(); ++i) {
        if (!(out.eval({{var, points[i].first}}) == points[i].second))
            throw ArithmeticError("interpolate_in_q: verification point q=" + points[i].first.get_str() +
                                  " disagrees with the interpolant");
    }
    return out;
}

std::string to_pretty(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars()[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << "*" << mono;
    }
    return os.str();
}

}  // namespace bpoly
