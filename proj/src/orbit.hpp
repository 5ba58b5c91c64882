#pragma once

#include "origami.hpp"
#include "sl2.hpp"

#include <cstddef>
#include <vector>

namespace stsurf {

// One side of an orbit member in the two-sided shear graph. From (member, top)
// the arrow with label a >= 1 leads to (T^a . member, bottom); from
// (member, bottom) it leads to (Tp^a . member, top). The targets are purely
// periodic in a, so exactly one period is tabulated.
struct OrbitSide {
    long long period = 0;        // least a >= 1 whose shear returns the member
    std::vector<int> targets;    // endpoint member for a = 1..period
};

struct OrbitMember {
    Origami surface;             // canonical form
    OrbitSide top;               // arrows under T^a
    OrbitSide bottom;            // arrows under Tp^a
    int parent = -1;             // BFS tree parent (-1 for the base member)
    WordStep step{Gen::T, 0};    // shear leading from the parent to this member
};

// Closure of a reduced square-tiled surface under the integral shear action,
// presented as the two-sided arrow graph: each of the `size()` surfaces in the
// orbit contributes a top and a bottom vertex, so there are 2 * size()
// vertices in total. Members are stored in canonical form in BFS discovery
// order; member 0 is the canonical form of the starting surface.
class OrbitGraph {
public:
    // Throws std::domain_error when o is not reduced and std::runtime_error
    // when the orbit exceeds max_members surfaces (the default keeps the
    // vertex count within one million).
    explicit OrbitGraph(const Origami& o, std::size_t max_members = 500'000);

    int size() const { return int(members_.size()); }
    int vertex_count() const { return 2 * size(); }
    const std::vector<OrbitMember>& members() const { return members_; }
    const OrbitMember& member(int i) const { return members_.at(i); }

    // Index of the canonical form of o among the members, or -1.
    int index_of(const Origami& o) const;

    // Endpoint member of the arrow labeled a (>= 1) out of member i's top or
    // bottom vertex; reduces a modulo the tabulated period.
    int arrow_target(int i, bool top, long long a) const;

    // Shear word w (along the BFS tree) with (w . member(0)) isomorphic to
    // member(i); empty for i == 0.
    Sl2Word word_from_base(int i) const;

private:
    std::vector<OrbitMember> members_;
};

} // namespace stsurf
