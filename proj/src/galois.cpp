#include "galois.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace stsurf {

namespace {

Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

// Floor of (p + sqrt(dd)) / q where dd > 0 is not a perfect square, so the
// value is irrational and never an integer.
Int floor_surd(const Int& p, const Int& dd, const Int& q) {
    Int r = isqrt_floor(dd);   // r < sqrt(dd) < r + 1
    if (q > 0) return fdiv(p + r, q);
    return -(fdiv(p + r, -q) + 1);
}

Mat2 gl2_inverse(const Mat2& m) {
    Int det = m.det();
    if (det == 1) return {m.d, -m.b, -m.c, m.a};
    if (det == -1) return {-m.d, m.b, m.c, -m.a};
    throw std::domain_error("gl2_inverse: matrix is not unimodular");
}

Mat2 upper_shear(const Int& k) { return {1, k, 0, 1}; }
Mat2 lower_shear(const Int& k) { return {1, 0, k, 1}; }

bool entrywise_nonnegative(const Mat2& m) {
    return m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0;
}

// Decomposes m as R^{a1} L^{a2} ... R^{a_{2k-1}} L^{a_{2k}} with all
// exponents >= 1, R = (1 1; 0 1), L = (1 0; 1 1); such a decomposition is
// unique, and exists exactly for the b-reduced matrices. At each step the
// exponent is forced: if m = R^q * B with B the tail starting at L, then
// B.a lies in [1, m.c], so q = (m.a - 1) / m.c; mirrored for the L steps.
std::optional<std::vector<Int>> peel_positive_word(const Mat2& m) {
    if (m.det() != 1) return std::nullopt;
    std::vector<Int> digits;
    Mat2 cur = m;
    bool upper = true;
    for (;;) {
        if (!entrywise_nonnegative(cur)) return std::nullopt;
        Int q;
        if (upper) {
            if (cur.a < 1 || cur.c < 1) return std::nullopt;
            q = (cur.a - 1) / cur.c;
            if (q < 1) return std::nullopt;
            cur = {cur.a - q * cur.c, cur.b - q * cur.d, cur.c, cur.d};
        } else {
            if (cur.a < 1) return std::nullopt;
            q = cur.c / cur.a;
            if (q < 1) return std::nullopt;
            cur = {cur.a, cur.b, cur.c - q * cur.a, cur.d - q * cur.b};
        }
        digits.push_back(q);
        upper = !upper;
        if (cur == Mat2::identity()) break;
    }
    if (digits.size() % 2 != 0) return std::nullopt;
    return digits;
}

Mat2 compose_shear_word(const std::vector<Int>& digits) {
    Mat2 w = Mat2::identity();
    for (std::size_t i = 0; i < digits.size(); ++i)
        w = w * (i % 2 == 0 ? upper_shear(digits[i]) : lower_shear(digits[i]));
    return w;
}

bool matrix_is_b_reduced(const Mat2& m) {
    Int mx = std::max(m.b, m.c);
    Int mn = std::min(m.b, m.c);
    return m.a > mx && mn >= m.d && m.d > 0;
}

bool matrix_is_t_reduced(const Mat2& m) {
    Int mx = std::max(m.b, m.c);
    Int mn = std::min(m.b, m.c);
    return m.d > mx && mn >= m.a && m.a > 0;
}

// Complete reducibility test over Q for x^4 + a x^3 + b x^2 + a x + 1 when
// delta1 is not a square. Since the quartic is monic with constant term 1,
// an integer quadratic factorization (x^2+px+q)(x^2+rx+s) needs qs = 1: the
// case q = s = 1 exists iff delta1 is a square, and q = s = -1 forces a = 0
// with -(b+2) a square. Rational roots can only be +-1.
bool reducible_beyond_delta1(const ReciprocalQuartic& P) {
    if (P.d == 0) return true;                   // P(1) = 0
    if (P.b - 2 * P.a + 2 == 0) return true;     // P(-1) = 0
    if (P.a == 0 && is_perfect_square(-(P.b + 2))) return true;
    return false;
}

} // namespace

SquareCheck square_check(const Int& n) {
    SquareCheck r;
    r.value = n;
    if (n < 0) {
        r.square = false;
        r.root = 0;
        return r;
    }
    r.root = isqrt_floor(n);
    r.square = (r.root * r.root == n);
    return r;
}

ReciprocalQuartic::ReciprocalQuartic(Int a_, Int b_)
    : a(std::move(a_)), b(std::move(b_)) {
    t = -a - 4;
    d = b + 2 * a + 2;
    delta1 = a * a - 4 * b + 8;
    delta2 = (b + 2 + 2 * a) * (b + 2 - 2 * a);
    if (delta1 != t * t - 4 * d)
        throw std::logic_error("ReciprocalQuartic: delta1 identity violated");
    if (delta2 != d * (d + 4 * t + 16))
        throw std::logic_error("ReciprocalQuartic: delta2 identity violated");
}

IntPoly ReciprocalQuartic::coefficients() const { return {1, a, b, a, 1}; }

std::string galois_verdict_name(GaloisVerdict v) {
    switch (v) {
        case GaloisVerdict::GaloisPinching: return "galois-pinching";
        case GaloisVerdict::ReducibleDelta1Square: return "reducible-delta1-square";
        case GaloisVerdict::ReducibleDelta2Square: return "reducible-delta2-square";
        case GaloisVerdict::GaloisOrder4_2a: return "galois-order4-2a";
        case GaloisVerdict::GaloisOrder4_2b: return "galois-order4-2b";
        case GaloisVerdict::ComplexOrNonpositiveRoots: return "complex-or-nonpositive-roots";
    }
    throw std::logic_error("galois_verdict_name: unknown verdict");
}

QuarticAnalysis quartic_analyze(const Int& a, const Int& b) {
    ReciprocalQuartic q(a, b);
    SquareCheck c1 = square_check(q.delta1);
    SquareCheck c2 = square_check(q.delta2);
    SquareCheck c12 = square_check(q.delta1 * q.delta2);
    GaloisVerdict verdict;
    if (c1.square) {
        verdict = GaloisVerdict::ReducibleDelta1Square;
    } else if (c2.square) {
        verdict = reducible_beyond_delta1(q) ? GaloisVerdict::ReducibleDelta2Square
                                             : GaloisVerdict::GaloisOrder4_2a;
    } else if (c12.square) {
        verdict = GaloisVerdict::GaloisOrder4_2b;
    } else if (q.delta1 > 0 && q.d > 0 && q.t > 0) {
        verdict = GaloisVerdict::GaloisPinching;
    } else {
        verdict = GaloisVerdict::ComplexOrNonpositiveRoots;
    }
    return QuarticAnalysis{std::move(q), verdict, std::move(c1), std::move(c2),
                           std::move(c12)};
}

int reduced_degree(const IntPoly& p) {
    if (poly_is_zero(p))
        throw std::domain_error("reduced_degree: zero polynomial");
    return poly_reduced_degree(p);
}

ReducedSL2 b_reduced_toolkit(const Mat2& m) {
    if (m.det() != 1)
        throw std::domain_error("b_reduced_toolkit: matrix is not unimodular");
    ReducedSL2 r;
    r.m = m;
    r.b_reduced = matrix_is_b_reduced(m);
    r.t_reduced = matrix_is_t_reduced(m);
    if (r.b_reduced) {
        auto digits = peel_positive_word(m);
        if (!digits || compose_shear_word(*digits) != m)
            throw std::logic_error("b_reduced_toolkit: decomposition failed");
        r.digits = std::move(*digits);
    }
    return r;
}

BReducedConjugate conjugate_to_b_reduced(const Mat2& m) {
    if (m.det() != 1)
        throw std::domain_error("conjugate_to_b_reduced: matrix is not unimodular");
    if (m.trace() <= 2)
        throw std::domain_error("conjugate_to_b_reduced: trace must exceed 2");
    // trace > 2 with det 1 forces c != 0 for integer matrices (otherwise
    // a*d = 1 gives trace +-2), and makes D = trace^2 - 4 positive and never
    // a perfect square (t^2 - 4 = s^2 has no solution with t > 2).
    const Int D = m.trace() * m.trace() - 4;
    if (m.c == 0)
        throw std::logic_error("conjugate_to_b_reduced: unexpected triangular input");

    // Attracting fixed point of the Moebius action, as a quadratic surd
    // (P + sqrt(D)) / Q with the invariant Q | D - P^2.
    Int P = m.a - m.d;
    Int Q = 2 * m.c;

    // Continued-fraction expansion; states (P, Q) are eventually periodic.
    std::vector<Int> digits;
    std::map<std::pair<Int, Int>, std::size_t> seen;
    std::size_t period_start = 0;
    for (std::size_t step = 0;; ++step) {
        if (step > 2'000'000)
            throw std::logic_error("conjugate_to_b_reduced: expansion did not cycle");
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            period_start = it->second;
            break;
        }
        seen.emplace(std::move(key), step);
        Int q = floor_surd(P, D, Q);
        digits.push_back(q);
        Int Pn = q * Q - P;
        Int Qn = (D - Pn * Pn) / Q;
        if (Qn * Q != D - Pn * Pn || Qn == 0)
            throw std::logic_error("conjugate_to_b_reduced: surd arithmetic broke down");
        P = Pn;
        Q = Qn;
    }

    std::vector<Int> period(digits.begin() + static_cast<std::ptrdiff_t>(period_start),
                            digits.end());
    for (const Int& g : period)
        if (g < 1) throw std::logic_error("conjugate_to_b_reduced: nonpositive period digit");
    if (period.size() % 2 != 0) {
        std::vector<Int> doubled = period;
        doubled.insert(doubled.end(), period.begin(), period.end());
        period = std::move(doubled);
    }

    // Prefix of the expansion conjugates m to a matrix fixing the purely
    // periodic tail; that matrix is a positive power of the word of the
    // period (the generator of the surd's orientation-preserving stabilizer).
    Mat2 pre = Mat2::identity();
    for (std::size_t i = 0; i < period_start; ++i)
        pre = pre * Mat2{digits[i], 1, 1, 0};
    Mat2 conj = gl2_inverse(pre);
    Mat2 reduced = conj * m * gl2_inverse(conj);

    Mat2 prim = compose_shear_word(period);
    std::vector<Int> word = period;
    Mat2 w = prim;
    for (int power = 1; w != reduced; ++power) {
        if (power > 256 || w.trace() > reduced.trace())
            throw std::logic_error("conjugate_to_b_reduced: period word does not reach the matrix");
        w = w * prim;
        word.insert(word.end(), period.begin(), period.end());
    }

    if (conj.det() == -1) {
        // Conjugating by the coordinate swap exchanges the two shear kinds;
        // rotating the resulting word by its first (lower) block restores a
        // b-reduced word and brings the total conjugator back into SL2.
        Mat2 swap{0, 1, 1, 0};
        Mat2 fix = lower_shear(-word[0]) * swap;
        conj = fix * conj;
        reduced = fix * reduced * gl2_inverse(fix);
        std::rotate(word.begin(), word.begin() + 1, word.end());
    }

    // All even rotations of the word are b-reduced conjugates; return the
    // lexicographically smallest digit tuple.
    std::size_t best = 0;
    std::vector<Int> best_word = word;
    for (std::size_t r = 2; r < word.size(); r += 2) {
        std::vector<Int> cand(word.begin() + static_cast<std::ptrdiff_t>(r), word.end());
        cand.insert(cand.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r));
        if (cand < best_word) {
            best_word = std::move(cand);
            best = r;
        }
    }
    if (best != 0) {
        Mat2 prefix = Mat2::identity();
        for (std::size_t i = 0; i < best; ++i)
            prefix = prefix * (i % 2 == 0 ? upper_shear(word[i]) : lower_shear(word[i]));
        Mat2 inv = gl2_inverse(prefix);
        conj = inv * conj;
        reduced = inv * reduced * prefix;
        word = std::move(best_word);
    }

    if (conj.det() != 1 || conj * m != reduced * conj)
        throw std::logic_error("conjugate_to_b_reduced: conjugation check failed");
    if (!matrix_is_b_reduced(reduced) || compose_shear_word(word) != reduced)
        throw std::logic_error("conjugate_to_b_reduced: result is not b-reduced");
    return BReducedConjugate{reduced, conj, std::move(word)};
}

} // namespace stsurf
