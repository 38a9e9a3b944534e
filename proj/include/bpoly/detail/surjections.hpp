#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace bpoly {

template <class F>
void for_each_surjection(int n, F&& f) {
    std::vector<int> g(n);
    if (n == 0) {
        f(g, 0);
        return;
    }
    // restricted growth string + running prefix maxima
    std::vector<int> rgs(n, 0), pmax(n, 0);
    std::vector<int> perm;
    while (true) {
        int k = std::max(pmax[n - 1], rgs[n - 1]) + 1;
        perm.resize(k);
        std::iota(perm.begin(), perm.end(), 1);
        do {
            for (int v = 0; v < n; ++v) g[v] = perm[rgs[v]];
            f(static_cast<const std::vector<int>&>(g), k);
        } while (std::next_permutation(perm.begin(), perm.end()));

        int i = n - 1;
        while (i > 0 && rgs[i] > pmax[i]) --i;
        if (i == 0) return;
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            pmax[j] = std::max(pmax[j - 1], rgs[j - 1]);
        }
    }
}

template <class F>
void for_each_surjection_filtered(int n, F&& f) {
    std::vector<int> g(n);
    if (n == 0) {
        f(static_cast<const std::vector<int>&>(g), 0);
        return;
    }
    std::vector<int> hits;
    for (int p = 1; p <= n; ++p) {
        std::fill(g.begin(), g.end(), 1);
        while (true) {
            hits.assign(p + 1, 0);
            int distinct = 0;
            for (int v : g)
                if (hits[v]++ == 0) ++distinct;
            if (distinct == p) f(static_cast<const std::vector<int>&>(g), p);
            int i = 0;
            while (i < n && g[i] == p) g[i++] = 1;
            if (i == n) break;
            ++g[i];
        }
    }
}

}  // namespace bpoly
