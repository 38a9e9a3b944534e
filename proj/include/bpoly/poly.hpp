#pragma once

#include "bpoly/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bpoly {

using Exponents = std::vector<int>;

struct ExponentsDescending {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

// Canonical variable order: q, y, z, x, then y1.., z1.., then everything else
// by name (with embedded numbers compared numerically).
bool var_less(const std::string& a, const std::string& b);

// Sparse polynomial over Q. Variables are kept sorted by var_less; terms are
// kept in descending lexicographic order of exponent vectors.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, ExponentsDescending>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(const Rational& c, std::vector<std::string> vars = {});
    static MultiPoly variable(const std::string& name);
    // name^k
    static MultiPoly monomial(const std::string& name, int k, const Rational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> as_constant() const;

    int var_index(const std::string& name) const;
    bool has_var(const std::string& name) const { return var_index(name) >= 0; }
    // Degree in one variable; 0 if the variable is absent, -1 for the zero polynomial.
    int degree(const std::string& name) const;
    // Maximum over terms of the summed exponents of the given variables.
    int total_degree(const std::vector<std::string>& names) const;

    // Adds c * monomial(e), e aligned with vars().
    void add_term(const Exponents& e, const Rational& c);

    // Same polynomial over a larger variable list (must contain vars()).
    MultiPoly extended(const std::vector<std::string>& vars) const;
    // Drops variables that occur with exponent 0 in every term.
    MultiPoly trimmed() const;

    // [name^k] P, as a polynomial in the remaining variables.
    MultiPoly coeff(const std::string& name, int k) const;
    // Substitutes rational values; the substituted variables disappear.
    MultiPoly eval(const std::map<std::string, Rational>& values) const;
    // Full evaluation; every variable that actually occurs must be given.
    Rational value(const std::map<std::string, Rational>& values) const;
    // Polynomial composition name := p.
    MultiPoly substitute(const std::string& name, const MultiPoly& p) const;
    MultiPoly rename(const std::string& from, const std::string& to) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, int k);
std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

// den^clear_power * P(var := num/den).
MultiPoly substitute_rational(const MultiPoly& p, const std::string& var, const MultiPoly& num,
                              const MultiPoly& den, int clear_power);
// Simultaneous version: every listed variable v becomes nums[v]/den, and the
// result is multiplied by den^clear_power where clear_power bounds the total
// degree of P in the listed variables.
MultiPoly substitute_rational(const MultiPoly& p, const std::map<std::string, MultiPoly>& nums,
                              const MultiPoly& den, int clear_power);

// R with P = Q*R; throws ArithmeticError when Q does not divide P.
MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);

// binomial(var, k) = var(var-1)...(var-k+1)/k!
MultiPoly binomial_poly(const std::string& var, int k);

// c_k with P = sum_k c_k * binomial(var, k); zero coefficients omitted.
std::map<int, MultiPoly> falling_factorial_coeffs(const MultiPoly& p, const std::string& var = "q");

// Lagrange interpolation; points beyond degree+1 are used as verification
// points and a mismatch throws ArithmeticError.
MultiPoly interpolate_in_q(const std::vector<std::pair<Rational, MultiPoly>>& points, int degree,
                           const std::string& var = "q");

std::string to_pretty(const MultiPoly& p);

}  // namespace bpoly
