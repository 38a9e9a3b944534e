#pragma once

#include "bpoly/bcore.hpp"
#include "bpoly/digraph.hpp"
#include "bpoly/poly.hpp"

#include <string>

namespace fx {

inline bpoly::Digraph A1() { return bpoly::build_digraph(2, {{1, 2}}); }
inline bpoly::Digraph T_ac() { return bpoly::build_digraph(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline bpoly::Digraph T_cyc() { return bpoly::build_digraph(3, {{1, 2}, {2, 3}, {3, 1}}); }
inline bpoly::Digraph M1_digraph() { return bpoly::build_digraph(3, {{1, 2}, {2, 1}, {1, 3}, {3, 2}}); }
inline bpoly::MixedGraph M1() { return bpoly::MixedGraph(M1_digraph(), {1, 0, -1, -1}); }
inline bpoly::Digraph P3() { return bpoly::build_digraph(3, {{1, 2}, {2, 3}}); }
inline bpoly::Digraph Join() { return bpoly::build_digraph(3, {{1, 3}, {2, 3}}); }

inline bpoly::MultiPoly q() { return bpoly::MultiPoly::variable("q"); }
inline bpoly::MultiPoly y() { return bpoly::MultiPoly::variable("y"); }
inline bpoly::MultiPoly z() { return bpoly::MultiPoly::variable("z"); }
inline bpoly::MultiPoly x() { return bpoly::MultiPoly::variable("x"); }
inline bpoly::MultiPoly c(long a, long b = 1) { return bpoly::MultiPoly::constant(bpoly::make_rational(a, b)); }

// q(q-1)...(q-k+1)
inline bpoly::MultiPoly ff(int k) {
    bpoly::MultiPoly out = c(1);
    for (int i = 0; i < k; ++i) out = out * (q() - c(i));
    return out;
}

inline bpoly::MultiPoly B_A1() { return q() + ff(2) * (y() + z()) * bpoly::make_rational(1, 2); }
inline bpoly::MultiPoly B_Tac() {
    using bpoly::pow;
    return q() + ff(2) * (pow(y(), 2) + pow(z(), 2) + y() * z()) +
           ff(3) * (pow(y(), 3) + pow(z(), 3) + c(2) * y() * z() * (y() + z())) * bpoly::make_rational(1, 6);
}
inline bpoly::MultiPoly B_M1() {
    using bpoly::pow;
    return q() + ff(2) * y() * z() * (y() + z() + c(1)) +
           ff(3) * y() * z() * (pow(y(), 2) + pow(z(), 2) + c(4) * y() * z()) * bpoly::make_rational(1, 6);
}
inline bpoly::MultiPoly B_Tcyc() {
    return q() + c(3) * ff(2) * y() * z() + ff(3) * y() * z() * (y() + z()) * bpoly::make_rational(1, 2);
}

}  // namespace fx
