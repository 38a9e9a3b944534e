#pragma once

#include "bpoly/bcore.hpp"
#include "bpoly/digraph.hpp"
#include "bpoly/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bpoly {

// A word over {+1, -1}.
class SignWord {
public:
    SignWord() = default;
    explicit SignWord(std::vector<int> letters);
    // Accepts '+', '-' and the Unicode minus sign; throws ParseError otherwise.
    static SignWord parse(std::string_view text);

    int size() const { return static_cast<int>(letters_.size()); }
    int operator[](int k) const { return letters_.at(k); }
    const std::vector<int>& letters() const { return letters_; }
    // w_{m+1-k} = -w_k for all k.
    bool antipalindromic() const;
    SignWord negated() const;
    std::string str() const;

    bool operator==(const SignWord&) const = default;

private:
    std::vector<int> letters_;
};

// Every word of length 1..max_length, shorter first, '+' before '-'.
std::vector<SignWord> all_words(int max_length);

struct FamilyPolynomial {
    int m = 0;
    MultiPoly poly;  // in q, y1..ym, z1..zm
};

// Variable names y_k, z_k (k is 1-based).
std::string band_up(int k);
std::string band_down(int k);

// Sum over all (mp+1)-colorings of prod_arcs y_k (difference in [(k-1)p+1, kp])
// or z_k (negated difference in that range).
MultiPoly b_m_eval(const Digraph& d, int m, long p, std::uint64_t work_bound = default_work_bound);
// Interpolated over q = mp+1, p = 0..n, checked at p = n+1, n+2.
// Results are cached per isomorphism class and thread.
FamilyPolynomial b_m(const Digraph& d, int m, std::uint64_t work_bound = default_work_bound);
// y_k, z_k -> y, z when w_k = +1 and -> z, y when w_k = -1.
MultiPoly specialize_word(const FamilyPolynomial& f, const SignWord& w);
MultiPoly b_w(const Digraph& d, const SignWord& w, std::uint64_t work_bound = default_work_bound);
// Colorings with q = |w|p + 1 counted directly by word bands, polynomial in y, z.
MultiPoly b_w_eval(const Digraph& d, const SignWord& w, long p, std::uint64_t work_bound = default_work_bound);
// (mp+1)^c(D) times the banded sum over Z/(mp+1)-coflows; w antipalindromic.
MultiPoly coflow_eval(const Digraph& d, const SignWord& w, long p, std::uint64_t work_bound = default_work_bound);

// [y^|A|] B^w(q, y, 1) and B^w(q, 0, 1).
MultiPoly strict_w_chromatic(const Digraph& d, const SignWord& w);
MultiPoly weak_w_chromatic(const Digraph& d, const SignWord& w);

}  // namespace bpoly
