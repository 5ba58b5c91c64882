#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsurf {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat IMat::operator*(const IMat& o) const {
    if (c_ != o.r_) throw std::domain_error("IMat: dimension mismatch in *");
    IMat out(r_, o.c_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.c_; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

IMat IMat::operator+(const IMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::domain_error("IMat: dimension mismatch in +");
    IMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

IMat IMat::operator-(const IMat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::domain_error("IMat: dimension mismatch in -");
    IMat out(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

IMat IMat::transpose() const {
    IMat out(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IMat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

Int IMat::trace() const {
    if (r_ != c_) throw std::domain_error("IMat: trace of non-square matrix");
    Int t = 0;
    for (int i = 0; i < r_; ++i) t += at(i, i);
    return t;
}

std::vector<Int> IMat::apply(const std::vector<Int>& x) const {
    if (static_cast<int>(x.size()) != c_) throw std::domain_error("IMat: apply size mismatch");
    std::vector<Int> y(r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
    return y;
}

IMat IMat::submatrix_cols(const std::vector<int>& cols) const {
    IMat out(r_, static_cast<int>(cols.size()));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) out.at(i, j) = at(i, cols[j]);
    return out;
}

IMat imat_from(std::initializer_list<std::initializer_list<long long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.begin()->size()) : 0;
    IMat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::domain_error("imat_from: ragged rows");
        int j = 0;
        for (long long x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

std::vector<Int> SmithForm::divisors() const {
    std::vector<Int> out;
    for (int i = 0; i < rank; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Elementary operations on D with synchronized transforms.
// Row ops are left-multiplications E: U := E*U, Uinv := Uinv*E^{-1}.
// Col ops are right-multiplications E: V := V*E, Vinv := E^{-1}*Vinv.
struct SmithWork {
    IMat d, u, uinv, v, vinv;

    void row_swap(int i, int j) {
        for (int k = 0; k < d.cols(); ++k) std::swap(d.at(i, k), d.at(j, k));
        for (int k = 0; k < u.cols(); ++k) std::swap(u.at(i, k), u.at(j, k));
        for (int k = 0; k < uinv.rows(); ++k) std::swap(uinv.at(k, i), uinv.at(k, j));
    }
    void col_swap(int i, int j) {
        for (int k = 0; k < d.rows(); ++k) std::swap(d.at(k, i), d.at(k, j));
        for (int k = 0; k < v.rows(); ++k) std::swap(v.at(k, i), v.at(k, j));
        for (int k = 0; k < vinv.cols(); ++k) std::swap(vinv.at(i, k), vinv.at(j, k));
    }
    // row i += t * row j
    void row_add(int i, int j, const Int& t) {
        if (t == 0) return;
        for (int k = 0; k < d.cols(); ++k) d.at(i, k) += t * d.at(j, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) += t * u.at(j, k);
        for (int k = 0; k < uinv.rows(); ++k) uinv.at(k, j) -= t * uinv.at(k, i);
    }
    // col i += t * col j
    void col_add(int i, int j, const Int& t) {
        if (t == 0) return;
        for (int k = 0; k < d.rows(); ++k) d.at(k, i) += t * d.at(k, j);
        for (int k = 0; k < v.rows(); ++k) v.at(k, i) += t * v.at(k, j);
        for (int k = 0; k < vinv.cols(); ++k) vinv.at(j, k) -= t * vinv.at(i, k);
    }
    void row_negate(int i) {
        for (int k = 0; k < d.cols(); ++k) d.at(i, k) = -d.at(i, k);
        for (int k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
        for (int k = 0; k < uinv.rows(); ++k) uinv.at(k, i) = -uinv.at(k, i);
    }
};

} // namespace

SmithForm smith_form(const IMat& a) {
    SmithWork w{a, IMat::identity(a.rows()), IMat::identity(a.rows()),
                IMat::identity(a.cols()), IMat::identity(a.cols())};
    const int R = a.rows(), C = a.cols();
    const int steps = std::min(R, C);
    int t = 0;
    for (; t < steps; ++t) {
        // Locate a nonzero pivot of minimal absolute value in the submatrix.
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                const Int& x = w.d.at(i, j);
                if (x == 0) continue;
                if (pi < 0 || abs(x) < abs(w.d.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;  // submatrix is zero
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            const Int& p = w.d.at(t, t);
            // Reduce column t below the pivot.
            for (int i = t + 1; i < R; ++i) {
                if (w.d.at(i, t) == 0) continue;
                Int q = w.d.at(i, t) / p;  // truncated division is fine: remainder shrinks
                w.row_add(i, t, -q);
                if (w.d.at(i, t) != 0) {   // remainder smaller than |p|: promote it
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Reduce row t right of the pivot.
            for (int j = t + 1; j < C; ++j) {
                if (w.d.at(t, j) == 0) continue;
                Int q = w.d.at(t, j) / p;
                w.col_add(j, t, -q);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Pivot divides everything in its row/col (both are zero now).
            // Enforce divisibility into the remaining submatrix.
            for (int i = t + 1; i < R && clean; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (w.d.at(i, j) % p != 0) {
                        w.row_add(t, i, 1);  // drag a bad row up, restart cleaning
                        clean = false;
                        break;
                    }
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }
    SmithForm out{std::move(w.d), std::move(w.u), std::move(w.uinv),
                  std::move(w.v), std::move(w.vinv), t};
    return out;
}

IMat integer_kernel_basis(const IMat& a) {
    SmithForm s = smith_form(a);
    // A V y = U^{-1} D y, so ker(A) = V * span{e_i : i >= rank}.
    std::vector<int> cols;
    for (int j = s.rank; j < a.cols(); ++j) cols.push_back(j);
    return s.v.submatrix_cols(cols);
}

int rank_of(const IMat& a) {
    // Fraction-free Gaussian elimination (Bareiss) on a copy.
    IMat m = a;
    const int R = m.rows(), C = m.cols();
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < C && rank < R; ++col) {
        int piv = -1;
        for (int i = rank; i < R; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = 0; j < C; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        for (int i = rank + 1; i < R; ++i) {
            for (int j = col + 1; j < C; ++j)
                m.at(i, j) = (m.at(rank, col) * m.at(i, j) - m.at(i, col) * m.at(rank, j)) / prev;
            m.at(i, col) = 0;
        }
        prev = m.at(rank, col);
        ++rank;
    }
    return rank;
}

RatMat rat_from_int(const IMat& a) {
    RatMat out(a.rows(), std::vector<Rat>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out[i][j] = Rat(a.at(i, j));
    return out;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
    RatMat out(r, std::vector<Rat>(c));
    for (size_t i = 0; i < r; ++i) {
        if (a[i].size() != k) throw std::domain_error("rat_mul: dimension mismatch");
        for (size_t m = 0; m < k; ++m) {
            if (a[i][m] == 0) continue;
            for (size_t j = 0; j < c; ++j) out[i][j] += a[i][m] * b[m][j];
        }
    }
    return out;
}

RatMat rat_identity(int n) {
    RatMat out(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

RatMat rat_solve_full_column_rank(const RatMat& a, const RatMat& b) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    const int p = b.empty() ? 0 : static_cast<int>(b[0].size());
    if (static_cast<int>(b.size()) != m) throw std::domain_error("rat_solve: row mismatch");
    // Augmented elimination [A | B].
    RatMat w(m, std::vector<Rat>(n + p));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = a[i][j];
        for (int j = 0; j < p; ++j) w[i][n + j] = b[i][j];
    }
    int row = 0;
    std::vector<int> pivot_row(n, -1);
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int i = row; i < m; ++i)
            if (w[i][col] != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("rat_solve: matrix not full column rank");
        std::swap(w[piv], w[row]);
        Rat inv = Rat(1) / w[row][col];
        for (int j = col; j < n + p; ++j) w[row][j] *= inv;
        for (int i = 0; i < m; ++i) {
            if (i == row || w[i][col] == 0) continue;
            Rat f = w[i][col];
            for (int j = col; j < n + p; ++j) w[i][j] -= f * w[row][j];
        }
        pivot_row[col] = row;
        ++row;
    }
    // Rows beyond the pivots must have vanished entirely (consistency).
    for (int i = row; i < m; ++i)
        for (int j = 0; j < n + p; ++j)
            if (w[i][j] != 0) throw std::domain_error("rat_solve: inconsistent system");
    RatMat x(n, std::vector<Rat>(p));
    for (int col = 0; col < n; ++col)
        for (int j = 0; j < p; ++j) x[col][j] = w[pivot_row[col]][n + j];
    return x;
}

bool rat_mat_is_integral(const RatMat& a, IMat* out) {
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    IMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            if (!is_integer(a[i][j])) return false;
            m.at(i, j) = rat_num(a[i][j]);
        }
    if (out) *out = std::move(m);
    return true;
}

std::vector<Int> charpoly(const IMat& a) {
    if (a.rows() != a.cols()) throw std::domain_error("charpoly: non-square matrix");
    const int n = a.rows();
    // Faddeev–LeVerrier: M_0 = 0, c_n = 1;
    // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IMat m(n, n);  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        IMat am = a * m;
        for (int i = 0; i < n; ++i) am.at(i, i) += c[n - k + 1];
        m = std::move(am);
        IMat prod = a * m;
        Int tr = prod.trace();
        if (tr % k != 0) throw std::logic_error("charpoly: non-exact division");
        c[n - k] = -tr / k;
    }
    return c;
}

} // namespace stsurf
