#pragma once

#include "bpoly/digraph.hpp"

#include <vector>

namespace bpoly {

enum class End : std::uint8_t { Tail, Head };

struct ArcEnd {
    int arc = 0;
    End end = End::Tail;
    auto operator<=>(const ArcEnd&) const = default;
};

// Counterclockwise cyclic order of arc-ends around each vertex
// (ends_at(v) for v = 1..n).
class RotationSystem {
public:
    RotationSystem() = default;
    explicit RotationSystem(std::vector<std::vector<ArcEnd>> rotation) : rot_(std::move(rotation)) {}

    const std::vector<ArcEnd>& ends_at(int v) const { return rot_.at(v - 1); }
    const std::vector<std::vector<ArcEnd>>& rotation() const { return rot_; }
    int num_vertices() const { return static_cast<int>(rot_.size()); }

    // Ends listed match the arc-ends of d exactly.
    void validate(const Digraph& d) const;

    bool operator==(const RotationSystem&) const = default;

private:
    std::vector<std::vector<ArcEnd>> rot_;
};

struct FaceTrace {
    // face index of dart 2a (a walked tail->head) and dart 2a+1 (head->tail)
    std::vector<int> dart_face;
    // dart sequences of each face, in walking order; vertex-only faces are empty
    std::vector<std::vector<int>> faces;
};

FaceTrace trace_faces(const Digraph& d, const RotationSystem& rot);
bool is_planar_embedding(const Digraph& d, const RotationSystem& rot);

struct PlanarDual {
    Digraph dual;
    RotationSystem rotation;
};

// Arc a* of the dual goes from the face left of a to the face right of a.
PlanarDual planar_dual_embedded(const Digraph& d, const RotationSystem& rot);
Digraph planar_dual(const Digraph& d, const RotationSystem& rot);

// Every rotation system of d (all cyclic orders at every vertex).
std::vector<RotationSystem> enumerate_rotation_systems(const Digraph& d, std::size_t limit = 1u << 20);
// Planar ones only.
std::vector<RotationSystem> planar_rotation_systems(const Digraph& d, std::size_t limit = 1u << 20);

// Rotation with ends listed by arc index at every vertex (tail before head).
RotationSystem default_rotation(const Digraph& d);

}  // namespace bpoly
