#pragma once

#include "bpoly/digraph.hpp"
#include "bpoly/poly.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bpoly {

using Composition = std::vector<int>;
// Sorted subset of [n-1].
using Subset = std::vector<int>;

enum class QBasis { M, F };

// Homogeneous quasisymmetric function of degree n with coefficients in Q[y, z, ...].
// Keys are compositions of n (basis M) or subsets of [n-1] (basis F).
class QSymFunction {
public:
    QSymFunction() = default;
    QSymFunction(int n, QBasis basis) : n_(n), basis_(basis) {}

    static QSymFunction monomial(const Composition& c, const MultiPoly& coeff = MultiPoly::constant(1));
    static QSymFunction fundamental(int n, const Subset& s, const MultiPoly& coeff = MultiPoly::constant(1));

    int degree() const { return n_; }
    QBasis basis() const { return basis_; }
    const std::map<std::vector<int>, MultiPoly>& coeffs() const { return coeffs_; }
    // Coefficient of the basis element with the given key (zero if absent).
    MultiPoly coeff(const std::vector<int>& key) const;
    bool is_zero() const { return coeffs_.empty(); }

    void add(const std::vector<int>& key, const MultiPoly& c);

    QSymFunction& operator+=(const QSymFunction& o);
    QSymFunction& operator-=(const QSymFunction& o);
    friend QSymFunction operator+(QSymFunction a, const QSymFunction& b) { return a += b; }
    friend QSymFunction operator-(QSymFunction a, const QSymFunction& b) { return a -= b; }
    friend QSymFunction operator*(QSymFunction a, const MultiPoly& c);
    // Equal as quasisymmetric functions (bases are aligned first).
    friend bool operator==(const QSymFunction& a, const QSymFunction& b);

    // Applies f to every coefficient.
    template <class Fn>
    QSymFunction map_coeffs(Fn&& f) const {
        QSymFunction out(n_, basis_);
        for (const auto& [k, c] : coeffs_) out.add(k, f(c));
        return out;
    }

private:
    int n_ = 0;
    QBasis basis_ = QBasis::M;
    std::map<std::vector<int>, MultiPoly> coeffs_;
};

Subset composition_to_subset(const Composition& c);
Composition subset_to_composition(int n, const Subset& s);
// All compositions of n in lexicographic order.
std::vector<Composition> compositions(int n);

QSymFunction basis_change(const QSymFunction& f, QBasis target);
// F_{n,S} -> F_{n,[n-1]\S}; result in the basis of the argument.
QSymFunction omega(const QSymFunction& f);
// M_{d1..dk} -> M_{dk..d1}; result in the basis of the argument.
QSymFunction rho(const QSymFunction& f);
// Evaluation at x = 1^q as a polynomial in q, computed from the M basis.
MultiPoly principal_specialization(const QSymFunction& f);
// Same, computed from the F basis: F_{n,S} -> binomial(q - |S| + n - 1, n).
MultiPoly principal_specialization_fundamental(const QSymFunction& f);
// Quasi-shuffle product on the monomial basis; result in basis M.
QSymFunction qsym_product(const QSymFunction& f, const QSymFunction& g);

// B_D(x; y, z) in the monomial basis.
QSymFunction qsym_b(const Digraph& d, int vertex_bound = 9);
// Sum of M_{type(g)} over surjections g with every arc a strict (resp. weak) ascent.
QSymFunction strict_chromatic_qsym(const Digraph& d);
QSymFunction weak_chromatic_qsym(const Digraph& d);

// Monomial-basis expansion by brute force over all colorings f: V -> [n]
// (f[v-1] in 1..n); only colorings using exactly the colors 1..k contribute.
// weight(f) returns the exponents of y and z, or std::nullopt to skip f.
using ColoringWeight = std::function<std::optional<std::pair<int, int>>(const std::vector<int>&)>;
QSymFunction qsym_from_colorings(int n, const ColoringWeight& weight);

bool is_compatibly_labeled(const Digraph& d);

struct PermutationRow {
    std::vector<int> sigma;      // one-line notation
    std::vector<int> sigma_inv;  // one-line notation
    int ascents = 0;             // |{(u,v) in A : sigma(v) > sigma(u)}|
    Subset asc_inv;              // Asc(sigma^{-1})
    Subset asc_prec_inv;         // Asc_prec(sigma^{-1}), filled when an order is given
};

// One row per permutation of [n] in lexicographic order.
std::vector<PermutationRow> permutation_rows(const Digraph& d);

// Sum over permutations of F_{n, Asc(sigma^{-1})} y^{ascents}; requires a
// compatibly labeled acyclic digraph.
QSymFunction fundamental_b_acyclic(const Digraph& d);

// A strict partial order on [n] given by the relation matrix less[u-1][v-1].
class PartialOrder {
public:
    PartialOrder() = default;
    // Transitive closure of the generating relations; throws on a cycle.
    PartialOrder(int n, const std::vector<std::pair<int, int>>& relations);
    int size() const { return n_; }
    bool less(int u, int v) const { return rel_[(u - 1) * n_ + (v - 1)]; }
    bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
    std::vector<std::pair<int, int>> relations() const;

private:
    int n_ = 0;
    std::vector<char> rel_;
};

// True when D has no parallel arcs or loops and its arcs are exactly the
// incomparable pairs of the order.
bool arcs_are_incomparable_pairs(const Digraph& d, const PartialOrder& order);
// Every partial order whose incomparable pairs are the arcs of D.
std::vector<PartialOrder> incomparability_orders(const Digraph& d);

// Sum over permutations of F_{n, Asc_prec(sigma^{-1})} y^{ascents}, with rows.
QSymFunction shareshian_wachs_sum(const Digraph& d, const PartialOrder& order,
                                  std::vector<PermutationRow>* rows = nullptr);

// X_D(x; y) = [z^|A|] B_D(x; yz, z).
QSymFunction chromatic_quasisym(const Digraph& d);
QSymFunction chromatic_quasisym_direct(const Digraph& d);
// S_G(x; y) = (1+y)^|E| B_{doubled G}(x; 1/(1+y), 1).
QSymFunction tutte_symmetric(const Graph& g);
QSymFunction tutte_symmetric_direct(const Graph& g);

struct QSymReadoff {
    MultiPoly degree_pairs;                   // [M_(1,n-1)] B
    std::optional<Composition> profile;       // acyclic digraphs
    std::vector<Integer> directed_cuts_by_size;  // k = 0..n
    MultiPoly bijection_sum;                  // [M_(1^n)] B
};

QSymReadoff qsym_readoff(const QSymFunction& b, const Digraph& d);
// Sum over v of y^out(v) z^in(v), loops excluded.
MultiPoly degree_pair_polynomial(const Digraph& d);
// Sum over bijections f: V -> [n] of y^asc z^des.
MultiPoly bijection_sum(const Digraph& d);

nlohmann::json to_json(const QSymFunction& f);
QSymFunction qsym_from_json(const nlohmann::json& j);
std::string to_pretty(const QSymFunction& f);

}  // namespace bpoly
