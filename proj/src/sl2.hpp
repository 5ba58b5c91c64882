#pragma once

#include "bigint.hpp"
#include "origami.hpp"

#include <string>
#include <vector>

namespace stsurf {

struct Mat2 {
    Int a{1}, b{0}, c{0}, d{1};   // row-major ((a b),(c d))

    static Mat2 identity() { return {}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2&) const = default;
    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    Mat2 inverse_unimodular() const;   // requires det = +1
};

// Generator word step: T^k, Tp^k (lower-triangular shear) or S^k; k may be
// negative. Words multiply left-to-right as matrices: the word [x, y] denotes
// the matrix X*Y and acts on an origami as X.(Y.o).
enum class Gen { T, Tp, S };

struct WordStep {
    Gen g;
    long long k;
};
using Sl2Word = std::vector<WordStep>;

Mat2 gen_matrix(Gen g, long long k);
Mat2 word_matrix(const Sl2Word& w);
std::string word_to_string(const Sl2Word& w);

// Frozen conventions (charts are postcomposed with the matrix):
//   T.(h,v)  = (h, v∘h⁻¹)      Tinv.(h,v) = (h, v∘h)
//   S.(h,v)  = (v⁻¹, h)        Sinv.(h,v) = (v, h⁻¹)
//   Tp.(h,v) = (v⁻¹∘h, v)      Tpinv.(h,v)= (v∘h, v)
Origami act_step(const WordStep& s, const Origami& o);
Origami act_word(const Sl2Word& w, const Origami& o);

// Word W (in T and Tp steps) with word_matrix(W) * (p, q)^t = (1, 0)^t.
// Requires gcd(p, q) = 1. Deterministic subtractive Euclid.
Sl2Word direction_to_horizontal_word(long long p, long long q);

} // namespace stsurf
