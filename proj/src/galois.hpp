#pragma once

#include "bigint.hpp"
#include "intpoly.hpp"
#include "sl2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stsurf {

// Result of an exact integer square test. `root` is the exact square root
// when `square` is true, otherwise the floor of the square root (0 for
// negative inputs, which are never squares).
struct SquareCheck {
    Int value;
    bool square = false;
    Int root;
};

SquareCheck square_check(const Int& n);

// Monic integer quartic with palindromic coefficients,
//   P(x) = x^4 + a x^3 + b x^2 + a x + 1,
// together with the derived quantities that classify its splitting
// behaviour. The substitution y = x + 1/x - 2 sends P to the quadratic
// y^2 - t y + d, whose discriminant is delta1; delta2 = P(1) * P(-1).
struct ReciprocalQuartic {
    Int a, b;
    Int t;        // -a - 4
    Int d;        // b + 2a + 2
    Int delta1;   // a^2 - 4b + 8   (= t^2 - 4d)
    Int delta2;   // (b+2+2a)(b+2-2a)   (= d(d + 4t + 16))

    ReciprocalQuartic(Int a_, Int b_);

    // Coefficients {1, a, b, a, 1}, lowest degree first.
    IntPoly coefficients() const;
};

// Classification of the splitting behaviour of a reciprocal quartic:
//
//   ReducibleDelta1Square      P is a product of two reciprocal quadratics
//                              (delta1 is a perfect square).
//   ReducibleDelta2Square      delta1 is not a square but P is still
//                              reducible over Q (proved by exhibiting a
//                              rational root or a non-reciprocal quadratic
//                              factorization); delta2 is a square.
//   GaloisOrder4_2a            P irreducible, delta2 a square: the Galois
//                              group of the splitting field has order 4 and
//                              the resolvent root sqrt(delta2) is rational.
//   GaloisOrder4_2b            P irreducible, delta1*delta2 a square: order-4
//                              Galois group of the second kind.
//   GaloisPinching             P irreducible with Galois group of maximal
//                              order 8 and four simple, real, positive roots:
//                              none of delta1, delta2, delta1*delta2 is a
//                              square, and delta1 > 0, d > 0, t > 0.
//   ComplexOrNonpositiveRoots  maximal Galois group but some root is complex
//                              or nonpositive.
enum class GaloisVerdict {
    GaloisPinching,
    ReducibleDelta1Square,
    ReducibleDelta2Square,
    GaloisOrder4_2a,
    GaloisOrder4_2b,
    ComplexOrNonpositiveRoots,
};

std::string galois_verdict_name(GaloisVerdict v);

struct QuarticAnalysis {
    ReciprocalQuartic quartic;
    GaloisVerdict verdict;
    SquareCheck delta1_check;   // square test of delta1
    SquareCheck delta2_check;   // square test of delta2
    SquareCheck delta12_check;  // square test of delta1*delta2
};

// Exact classification of x^4 + a x^3 + b x^2 + a x + 1. Square tests are
// checked in the fixed order delta1, delta2, delta1*delta2; reducibility in
// the delta2 branch is decided exactly (a monic integer reciprocal quartic
// factors over Q iff delta1 is a square, or +-1 is a root, or a = 0 and
// -(b+2) is a square), so GaloisOrder4_2a / GaloisOrder4_2b are only
// reported for provably irreducible quartics.
QuarticAnalysis quartic_analyze(const Int& a, const Int& b);

// Degree of the square-free part of p. Throws std::domain_error on the zero
// polynomial.
int reduced_degree(const IntPoly& p);

// A unimodular matrix (a b; c d) is b-reduced when
//     a > max(b, c) >= min(b, c) >= d > 0,
// equivalently when it is a product R^{a1} L^{a2} ... R^{a_{2k-1}} L^{a_{2k}}
// with all exponents >= 1, where R = (1 1; 0 1) and L = (1 0; 1 1); that
// decomposition is unique and `digits` holds its exponents. t-reduced is the
// mirror condition d > max(b, c) >= min(b, c) >= a > 0 (conjugation by the
// coordinate swap exchanges the two).
struct ReducedSL2 {
    Mat2 m;
    bool b_reduced = false;
    bool t_reduced = false;
    std::optional<std::vector<Int>> digits;   // present iff b_reduced
};

// Classifies m and, when it is b-reduced, extracts the shear exponents by
// greedy peeling and verifies the recomposition exactly.
// Throws std::domain_error when det(m) != 1.
ReducedSL2 b_reduced_toolkit(const Mat2& m);

struct BReducedConjugate {
    Mat2 reduced;               // b-reduced representative of the conjugacy class
    Mat2 conjugator;            // u with det(u) = 1 and u * m * u^{-1} = reduced
    std::vector<Int> digits;    // shear exponents of `reduced`
};

// Finds a b-reduced matrix conjugate to m in SL2(Z), by running the
// continued-fraction expansion of the attracting fixed point of m with exact
// quadratic-surd arithmetic; among the cyclic rotations of the resulting
// shear word (all of which are b-reduced conjugates) the lexicographically
// smallest digit tuple is returned. Throws std::domain_error when
// det(m) != 1 or trace(m) <= 2.
BReducedConjugate conjugate_to_b_reduced(const Mat2& m);

} // namespace stsurf
