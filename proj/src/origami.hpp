#pragma once

#include "perm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stsurf {

// Stratum of the translation surface: genus plus the list of cone-point orders.
// Orders are (cycle length - 1) over the vertex cycles of the corner rotation;
// zero entries (regular vertices) are dropped, except that a genus-1 surface is
// reported as a torus with one marked point, kappa = (0).
struct Stratum {
    int genus = 0;
    std::vector<int> zero_orders;   // descending
    int vertex_count = 0;           // all vertices, including regular ones

    bool operator==(const Stratum& o) const {
        return genus == o.genus && zero_orders == o.zero_orders;
    }
    bool is_h4() const { return genus == 3 && zero_orders == std::vector<int>{4}; }
    std::string to_string() const;  // e.g. "H(4)", "H(2,2)", "H(0)"
};

struct MonodromyClass {
    enum Kind { Alternating, Symmetric, Other };
    Kind kind = Other;
    int sign_h = 0;
    int sign_v = 0;
};

// A square-tiled surface given by the pair (h, v): h(s) is the square to the
// right of s, v(s) the square above s. The pair must act transitively.
class Origami {
public:
    Origami(Perm h, Perm v);

    int n() const { return h_.size(); }
    const Perm& h() const { return h_; }
    const Perm& v() const { return v_; }

    // Corner rotation around the vertex at the lower-left corner of each square:
    // a full 2*pi turn maps s to v(h(v^-1(h^-1(s)))). Vertices <-> its cycles.
    Perm corner_rotation() const;
    Stratum stratum() const;

    // Canonical relabeling: BFS from each base square, exploring h then v images,
    // labels assigned in first-visit order; the canonical pair is the lexicographic
    // minimum of the relabeled (h, v) image arrays over all base squares.
    std::pair<Perm, Perm> canonical_pair() const;
    Origami canonical() const;
    // relab[old] = new for the BFS relabeling with the given base square.
    std::vector<int> bfs_relabeling(int base) const;
    // The relabeling that realizes the canonical pair (smallest base wins ties).
    std::vector<int> canonical_relabeling() const;

    bool isomorphic_to(const Origami& o) const;
    // Isomorphism o -> other as a relabeling (tau(h s) = h'(tau s), same for v);
    // nullopt if none.
    std::optional<std::vector<int>> isomorphism_to(const Origami& other) const;

    // Translation automorphisms = simultaneous centralizer of h and v.
    std::vector<Perm> automorphism_group() const;

    // Reduced: the relative-period lattice is all of Z^2, i.e. the origami does
    // not factor through a bigger torus. Tested via index-p sublattices, p | N.
    bool is_reduced() const;

    MonodromyClass monodromy_classification() const;

    std::string to_text() const;    // "h: ...\nv: ..." (1-based images)

    bool operator==(const Origami& o) const { return h_ == o.h_ && v_ == o.v_; }

private:
    Perm h_, v_;
};

// Text input: either two lines "h: 1 2 ...\nv: ..." / "h=(1,2)...", or cycle and
// image notation per component via the two-argument form.
std::optional<Origami> origami_from_text(const std::string& text);
std::optional<Origami> origami_from_strings(const std::string& h, const std::string& v, int n);

} // namespace stsurf
