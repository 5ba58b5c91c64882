#pragma once

#include "intpoly.hpp"
#include "linalg.hpp"
#include "origami.hpp"
#include "sl2.hpp"

#include <vector>

namespace stsurf {

// Edge chains on a square-tiled surface with N squares live in Z^(2N):
// coordinate s is the bottom edge of square s (oriented left to right),
// coordinate N+s is the left edge of square s (oriented bottom to top).
using Chain = std::vector<Int>;

// Chain-level transport of edges under one generator step. The matrix E is
// 2N x 2N with column e = image chain of edge e on the target surface
// act_step(step, src).
IMat edge_transport(const WordStep& step, const Origami& src);

// Edge permutation matrix induced by a square relabeling (relab[old] = new).
IMat edge_relabel_matrix(const std::vector<int>& relab);

// Transport along a whole word (rightmost step acts first).
struct TransportResult {
    Origami target;
    IMat matrix;  // 2N x 2N over the edge basis
};
TransportResult word_transport(const Sl2Word& w, const Origami& o);

// Signed count of crossings between two 1-cycles. The second cycle is pushed
// off the 1-skeleton to its left; all crossings then happen on small arcs
// around the cone points, where the counterclockwise order of the half-edges
// is determined by the corner rotation. Exact whenever both chains are cycles
// (the answer is independent of how strands are matched at each vertex, since
// different matchings differ by full turns, whose crossing flux vanishes on
// cycles).
Int intersection_number(const Chain& a, const Chain& b, const Origami& o);

// Integral homology H_1(X; Z) = Z^(2g) of the closed surface, built from the
// 1-skeleton (vertices = cone points, edges as above, faces = squares) via a
// spanning tree and the Smith form of the face-boundary matrix.
class HomologyModel {
public:
    explicit HomologyModel(Origami o);

    const Origami& surface() const { return o_; }
    int n() const { return o_.n(); }
    int genus() const { return genus_; }
    int rank() const { return 2 * genus_; }

    // Boundary of a chain as a vector over the vertex set (cone points).
    std::vector<Int> boundary(const Chain& c) const;
    bool is_cycle(const Chain& c) const;

    // Coordinates of a 1-cycle in the fixed homology basis (throws on
    // non-cycles).
    std::vector<Int> homology_class(const Chain& c) const;

    // Edge-chain representatives of the basis: homology_class(basis_chain(i))
    // is the i-th unit vector.
    const std::vector<Chain>& basis_chains() const { return basis_chains_; }

    // Gram matrix of the intersection form on the basis (antisymmetric,
    // determinant 1).
    const IMat& intersection_gram() const { return gram_; }

    // Projection to the torus: every horizontal edge maps to (1,0), every
    // vertical edge to (0,1). Returned as a 2 x 2g matrix on the basis.
    const IMat& pi_matrix() const { return pi_; }

    // Saturated basis of the kernel of pi on H_1 (the zero-holonomy part),
    // as a 2g x (2g-2) column matrix.
    const IMat& h0_basis() const { return h0_; }

    // Matrix of the map induced on H_1 by an edge transport that returns to
    // this very labeling (column convention: column i = image of basis i).
    IMat induced_on_h1(const IMat& edge_transport_to_self) const;

    // Restriction of an induced map to the zero-holonomy subspace, solved
    // exactly in the h0 basis; throws if the subspace is not preserved
    // integrally.
    IMat restrict_to_h0(const IMat& m_full) const;

    // Elementary divisors (w_1 | w_2 | ... | w_{g-1}) of the intersection form
    // restricted to the zero-holonomy lattice; each value appears once even
    // though the Smith form lists it twice.
    std::vector<Int> symplectic_divisors_h0() const;

    int vertex_of_square(int s) const { return vertex_of_[s]; }
    int vertex_count() const { return vcount_; }

private:
    Origami o_;
    int genus_ = 0;
    int vcount_ = 0;
    std::vector<int> vertex_of_;        // square -> cone point index
    std::vector<int> edge_from_, edge_to_;
    std::vector<int> nontree_;          // edge ids of non-tree edges
    std::vector<int> nontree_index_;    // edge id -> position in nontree_, or -1
    std::vector<Chain> fundcycles_;     // one per non-tree edge
    IMat u_;                            // Smith transform of the face matrix
    int facerank_ = 0;
    std::vector<Chain> basis_chains_;
    IMat gram_, pi_, h0_;

    std::vector<Int> cycle_coords(const Chain& c) const;  // non-tree restriction
};

// Characteristic polynomial of the action on the zero-holonomy part, obtained
// by dividing det(xI - M_full) by x^2 - t x + 1 where t is the trace of the
// underlying 2x2 matrix; exact division is checked.
IntPoly charpoly_h0(const IntPoly& full, const Int& trace2);

} // namespace stsurf
