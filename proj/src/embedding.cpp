#include "bpoly/embedding.hpp"

#include "bpoly/error.hpp"

#include <algorithm>
#include <map>

namespace bpoly {

namespace {

std::vector<std::vector<ArcEnd>> ends_by_vertex(const Digraph& d) {
    std::vector<std::vector<ArcEnd>> ends(d.num_vertices());
    for (int a = 0; a < d.num_arcs(); ++a) {
        ends[d.arc(a).tail - 1].push_back({a, End::Tail});
        ends[d.arc(a).head - 1].push_back({a, End::Head});
    }
    return ends;
}

int dart_from(const ArcEnd& e) { return 2 * e.arc + (e.end == End::Tail ? 0 : 1); }

}  // namespace

void RotationSystem::validate(const Digraph& d) const {
    if (num_vertices() != d.num_vertices()) throw PreconditionError("rotation system vertex count differs from digraph");
    auto expected = ends_by_vertex(d);
    for (int v = 0; v < d.num_vertices(); ++v) {
        auto got = rot_[v];
        auto want = expected[v];
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want)
            throw PreconditionError("rotation at vertex " + std::to_string(v + 1) + " does not list exactly its arc-ends");
    }
}

FaceTrace trace_faces(const Digraph& d, const RotationSystem& rot) {
    rot.validate(d);
    int m = d.num_arcs();
    // position of each end: ends (a,Tail) -> slot 2a, (a,Head) -> slot 2a+1
    std::vector<std::pair<int, int>> where(2 * m);
    for (int v = 1; v <= d.num_vertices(); ++v) {
        const auto& r = rot.ends_at(v);
        for (std::size_t i = 0; i < r.size(); ++i) where[dart_from(r[i])] = {v, static_cast<int>(i)};
    }
    FaceTrace t;
    t.dart_face.assign(2 * m, -1);
    for (int start = 0; start < 2 * m; ++start) {
        if (t.dart_face[start] >= 0) continue;
        int f = static_cast<int>(t.faces.size());
        t.faces.emplace_back();
        int dart = start;
        while (t.dart_face[dart] < 0) {
            t.dart_face[dart] = f;
            t.faces[f].push_back(dart);
            int arrival = dart ^ 1;  // the end where the walk enters the next vertex
            auto [v, i] = where[arrival];
            const auto& r = rot.ends_at(v);
            dart = dart_from(r[(i + 1) % r.size()]);
        }
    }
    for (int v = 1; v <= d.num_vertices(); ++v)
        if (rot.ends_at(v).empty()) t.faces.emplace_back();
    return t;
}

bool is_planar_embedding(const Digraph& d, const RotationSystem& rot) {
    auto t = trace_faces(d, rot);
    int f = static_cast<int>(t.faces.size());
    return d.num_vertices() - d.num_arcs() + f == 2 * count_components(d);
}

PlanarDual planar_dual_embedded(const Digraph& d, const RotationSystem& rot) {
    auto t = trace_faces(d, rot);
    int f = static_cast<int>(t.faces.size());
    if (d.num_vertices() - d.num_arcs() + f != 2 * count_components(d))
        throw PreconditionError("rotation system fails the Euler check (not a planar embedding)");
    std::vector<Arc> arcs;
    for (int a = 0; a < d.num_arcs(); ++a) arcs.push_back({t.dart_face[2 * a + 1] + 1, t.dart_face[2 * a] + 1});
    std::vector<std::vector<ArcEnd>> rotation(f);
    for (int i = 0; i < f; ++i) {
        const auto& seq = t.faces[i];
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            int a = *it / 2;
            rotation[i].push_back({a, (*it % 2 == 0) ? End::Head : End::Tail});
        }
    }
    return {Digraph(f, std::move(arcs)), RotationSystem(std::move(rotation))};
}

Digraph planar_dual(const Digraph& d, const RotationSystem& rot) { return planar_dual_embedded(d, rot).dual; }

std::vector<RotationSystem> enumerate_rotation_systems(const Digraph& d, std::size_t limit) {
    auto ends = ends_by_vertex(d);
    int n = d.num_vertices();
    std::vector<std::vector<std::vector<ArcEnd>>> choices(n);
    std::size_t total = 1;
    for (int v = 0; v < n; ++v) {
        auto& e = ends[v];
        if (e.size() <= 2) {
            choices[v].push_back(e);
        } else {
            std::vector<ArcEnd> rest(e.begin() + 1, e.end());
            do {
                std::vector<ArcEnd> cyc{e[0]};
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                choices[v].push_back(std::move(cyc));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        total *= choices[v].size();
        if (total > limit) throw PreconditionError("too many rotation systems to enumerate");
    }
    std::vector<RotationSystem> out;
    out.reserve(total);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<std::vector<ArcEnd>> rot(n);
        for (int v = 0; v < n; ++v) rot[v] = choices[v][idx[v]];
        out.emplace_back(std::move(rot));
        int v = n - 1;
        while (v >= 0 && ++idx[v] == choices[v].size()) idx[v--] = 0;
        if (v < 0) break;
    }
    return out;
}

std::vector<RotationSystem> planar_rotation_systems(const Digraph& d, std::size_t limit) {
    std::vector<RotationSystem> out;
    for (auto& r : enumerate_rotation_systems(d, limit))
        if (is_planar_embedding(d, r)) out.push_back(std::move(r));
    return out;
}

RotationSystem default_rotation(const Digraph& d) { return RotationSystem(ends_by_vertex(d)); }

}  // namespace bpoly
