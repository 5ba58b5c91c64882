#pragma once

#include "bigint.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stsurf {

// Univariate polynomial with Int coefficients, lowest degree first.
// The zero polynomial is the empty vector; degree(zero) = -1.
using IntPoly = std::vector<Int>;

IntPoly poly_trim(IntPoly p);
int poly_degree(const IntPoly& p);
bool poly_is_zero(const IntPoly& p);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(IntPoly a);
IntPoly poly_scale(IntPoly a, const Int& s);
Int poly_eval(const IntPoly& p, const Int& x);
Rat poly_eval_rat(const IntPoly& p, const Rat& x);
IntPoly poly_derivative(const IntPoly& p);
Int poly_content(const IntPoly& p);           // gcd of coefficients, >= 0
IntPoly poly_primitive_part(const IntPoly& p);  // content 1, positive leading coeff

// Exact division: returns quotient q with a = q*b, or nullopt if b does not
// divide a over Z[x].
std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b);

// Primitive gcd (primitive PRS); result has positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Square-free part p / gcd(p, p') (each irreducible factor once), primitive
// with positive leading coeff.
IntPoly poly_squarefree_part(const IntPoly& p);

// Square-free decomposition (Yun): p = content * prod_i s_i^i with the s_i
// primitive, square-free and pairwise coprime (entries may be constant).
// Throws std::domain_error on the zero polynomial.
std::vector<IntPoly> poly_squarefree_decomposition(const IntPoly& p);

// Reduced degree: write p = d^2 * r with r square-free; the degree of r,
// i.e. the total degree of the factors of odd multiplicity. -1 for zero.
int poly_reduced_degree(const IntPoly& p);

// Unique interpolating polynomial through the given points (distinct x's).
// Throws std::domain_error if the interpolant has a non-integer coefficient.
IntPoly poly_interpolate_integer(const std::vector<std::pair<Int, Int>>& points);

std::string poly_to_string(const IntPoly& p, const std::string& var = "x");

} // namespace stsurf
