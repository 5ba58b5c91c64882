#pragma once

#include "origami.hpp"

#include <array>
#include <optional>
#include <vector>

namespace stsurf {

// A square-level involution tau realizing the central symmetry (derivative
// -Id): tau h tau^{-1} = h^{-1} and tau v tau^{-1} = v^{-1}. Each square maps
// onto tau(s) rotated by a half turn. Fixed points of the symmetry sit over
// the four 2-torsion points of the base torus:
//   center   (1/2,1/2): squares with tau(s) = s
//   h-mid    (1/2, 0 ): bottom-edge midpoints, tau(s) = v^{-1}(s)
//   v-mid    ( 0 ,1/2): left-edge midpoints,  tau(s) = h^{-1}(s)
//   vertex   ( 0 , 0 ): vertex cycles fixed by P -> vtx(v(h(tau(s))))
struct AntiAutomorphism {
    Perm tau;
    int fixed_squares = 0;
    int fixed_h_mids = 0;
    int fixed_v_mids = 0;
    int fixed_vertices = 0;
    int total() const { return fixed_squares + fixed_h_mids + fixed_v_mids + fixed_vertices; }
};

// All central symmetries of o (empty when none exist). For surfaces with
// trivial translation group there is at most one.
std::vector<AntiAutomorphism> anti_automorphisms(const Origami& o);
std::optional<AntiAutomorphism> anti_automorphism(const Origami& o);

// Orbit invariant of the central symmetry's fixed points: l0 counts fixed
// points over the torus origin other than the cone point itself; the unordered
// triple counts fixed points over the three points of exact order 2, sorted
// descending.
struct HLKInvariant {
    int l0 = 0;
    std::array<int, 3> triple{0, 0, 0};
    bool operator==(const HLKInvariant&) const = default;
};

HLKInvariant hlk_invariant(const Origami& o);   // throws when no symmetry exists

enum class H4Component { Hyperelliptic, OddPrym, OddNonPrym };

// Classification by the central-symmetry fixed-point count: 8 fixed points is
// the hyperelliptic component, 4 the Prym locus of the odd component, none the
// rest of the odd component.
H4Component component_classification(const Origami& o);   // throws when not genus 3, single zero

const char* component_name(H4Component c);

} // namespace stsurf
