#pragma once

#include "bigint.hpp"
#include "homology.hpp"
#include "intpoly.hpp"
#include "linalg.hpp"
#include "origami.hpp"
#include "sl2.hpp"

#include <array>

namespace stsurf {

// Positive side lengths of the three-cylinder models: h1..h3 are the heights
// of the horizontal cylinders, v1..v3 the heights of the vertical ones.
struct FamilyParams {
    long long h1 = 1, h2 = 1, h3 = 1;
    long long v1 = 1, v2 = 1, v3 = 1;
};

// A model surface together with the waist curves of its three horizontal
// cylinders (sigma, oriented rightwards, bottom row of each cylinder) and of
// its three vertical cylinders (zeta, oriented upwards, leftmost column).
struct FamilyModel {
    Origami surface;
    std::array<Chain, 3> sigma;
    std::array<Chain, 3> zeta;
};

// Exact closed-form invariants of a model: the parabolic twist exponents, the
// blocks of the two parabolic actions on the zero-holonomy subspace in the
// basis (Sigma_1, Sigma_2, Z_1, Z_2), and the characteristic polynomial
// x^4 + a x^3 + b x^2 + a x + 1 of the composed map A = p_v . p_h there.
struct FamilyInvariants {
    Int n_squares;
    std::array<Int, 3> len_h;   // waist lengths of the horizontal cylinders
    std::array<Int, 3> len_v;   // waist lengths of the vertical cylinders
    Int lh, lv;                 // products of the waist lengths
    IMat qh, qv;                // 2x2 blocks (column j = image coefficients)
    Int dh, dv, d, t;
    Int delta1, delta2;
    Int a, b;
    IntPoly charpoly;           // {1, a, b, a, 1}
};

// Two-tower model: a base cylinder of height h3 spanning all v1+v2+v3
// columns, one tower of height h1 over the first v1 columns and one of
// height h2 over the next v2 columns. Lies in the odd component of H(4).
FamilyModel odd_model(const FamilyParams& p);
FamilyInvariants odd_invariants(const FamilyParams& p);
IMat odd_intersection_matrix();   // iota(sigma_i, zeta_j)

// Staircase model: cylinders of heights h3, h2, h1 stacked bottom to top
// with widths v1, v1+v2, v2+v3, each step shifted right by the width of
// the vertical cylinder it shares with the previous one. Lies in the
// hyperelliptic component of H(4).
FamilyModel hyperelliptic_model(const FamilyParams& p);
FamilyInvariants hyperelliptic_invariants(const FamilyParams& p);
IMat hyperelliptic_intersection_matrix();

// The affine map A = p_v . p_h as a generator word (rightmost step first);
// both steps fix the model surface square-by-square.
Sl2Word family_word(const FamilyInvariants& inv);

// One-parameter subfamilies used as certified Galois-pinching sources.
//
// Odd subfamilies 1..9: v1 = 1, v2 = 2, h3 = 1; (h1, h2) runs over
// (1,2),(1,3),(1,4),(2,3),...,(2,8); v3 = 3n when h1 = 1, 6n when h1 = 2
// and h2 is even, 6n+3 when h1 = 2 and h2 is odd (n >= 1).
FamilyParams odd_subfamily(int family, long long n);
int odd_subfamily_count();

// Hyperelliptic subfamilies 1..41: v1 = h2 = 1 throughout; five groups fix
// (v2, v3) and h3 while h1 runs along an arithmetic progression:
//   group 1 (families  1..4):  v2=v3=1,  h3 = 1..4,          h1 = 2n
//   group 2 (families  5..22): v2=1,v3=2, h3 = 1..18,        h1 = 6n
//   group 3 (families 23..25): v2=2,v3=1, h3 in {1,3,5},     h1 = 2n
//   group 4 (families 26..33): v2=v3=2,  h3 in {2,4,..,16},  h1 = 4n
//   group 5 (families 34..41): v2=3,v3=1, h3 in {1,3,..,15}, h1 = 4n+3
FamilyParams hyperelliptic_subfamily(int family, long long n);
int hyperelliptic_subfamily_count();
int hyperelliptic_subfamily_group(int family);   // 1..5

} // namespace stsurf
