#pragma once

#include "bigint.hpp"

#include <initializer_list>
#include <vector>

namespace stsurf {

// Dense integer matrix, row-major flat storage.
class IMat {
public:
    IMat() = default;
    IMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static IMat identity(int n);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const IMat&) const = default;

    IMat operator*(const IMat& o) const;
    IMat operator+(const IMat& o) const;
    IMat operator-(const IMat& o) const;
    IMat transpose() const;
    bool is_zero() const;
    Int trace() const;

    std::vector<Int> apply(const std::vector<Int>& x) const;  // A * x
    IMat submatrix_cols(const std::vector<int>& cols) const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

IMat imat_from(std::initializer_list<std::initializer_list<long long>> rows);

// Smith normal form  U * A * V = D  with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_rank > 0.  uinv and vinv are exact integer inverses.
struct SmithForm {
    IMat d, u, uinv, v, vinv;
    int rank = 0;
    std::vector<Int> divisors() const;  // the nonzero diagonal entries
};
SmithForm smith_form(const IMat& a);

// Basis of the integer kernel lattice {x : A x = 0} as matrix columns.
// The basis is saturated: it spans ker(A) ∩ Z^n as a direct summand.
IMat integer_kernel_basis(const IMat& a);

int rank_of(const IMat& a);

// Rational matrices (for exact solves and change of basis).
using RatMat = std::vector<std::vector<Rat>>;

RatMat rat_from_int(const IMat& a);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatMat rat_identity(int n);

// Solve A X = B exactly over Q for A with full column rank (m >= n).
// Throws std::domain_error if the system is inconsistent or rank-deficient.
RatMat rat_solve_full_column_rank(const RatMat& a, const RatMat& b);

// True if every entry is an integer; if so, write them into `out`.
bool rat_mat_is_integral(const RatMat& a, IMat* out = nullptr);

// Characteristic polynomial det(xI - A), coefficients lowest degree first,
// monic. Faddeev–LeVerrier with exact integer divisions.
std::vector<Int> charpoly(const IMat& a);

} // namespace stsurf
