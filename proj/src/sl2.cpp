#include "sl2.hpp"

#include <sstream>
#include <stdexcept>

namespace stsurf {

Mat2 Mat2::inverse_unimodular() const {
    if (det() != 1) throw std::domain_error("inverse_unimodular: det != 1");
    return {d, -b, -c, a};
}

Mat2 gen_matrix(Gen g, long long k) {
    Int n{k};
    switch (g) {
        case Gen::T:  return {1, n, 0, 1};
        case Gen::Tp: return {1, 0, n, 1};
        case Gen::S: {
            // S^4 = 1; S = ((0 -1),(1 0))
            long long r = ((k % 4) + 4) % 4;
            Mat2 s{0, -1, 1, 0};
            Mat2 acc = Mat2::identity();
            for (long long i = 0; i < r; ++i) acc = acc * s;
            return acc;
        }
    }
    throw std::logic_error("gen_matrix: bad generator");
}

Mat2 word_matrix(const Sl2Word& w) {
    Mat2 m = Mat2::identity();
    for (const auto& s : w) m = m * gen_matrix(s.g, s.k);
    return m;
}

std::string word_to_string(const Sl2Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w) {
        if (!first) os << "*";
        first = false;
        switch (s.g) {
            case Gen::T:  os << "T";  break;
            case Gen::Tp: os << "T'"; break;
            case Gen::S:  os << "S";  break;
        }
        if (s.k != 1) os << "^" << s.k;
    }
    return os.str();
}

namespace {

// p^k as a permutation, k may be negative (uses per-point cycle reduction).
Perm perm_pow(const Perm& p, long long k) {
    int n = p.size();
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = p.pow_apply(i, k);
    return Perm(im);
}

Origami act_S_once(const Origami& o) {
    return Origami(o.v().inverse(), o.h());  // S.(h,v) = (v⁻¹, h)
}

} // namespace

Origami act_step(const WordStep& s, const Origami& o) {
    switch (s.g) {
        case Gen::T:
            // T^k.(h,v) = (h, v∘h^{-k})
            return Origami(o.h(), o.v() * perm_pow(o.h(), -s.k));
        case Gen::Tp:
            // Tp^k.(h,v) = (v^{-k}∘h, v)
            return Origami(perm_pow(o.v(), -s.k) * o.h(), o.v());
        case Gen::S: {
            long long r = ((s.k % 4) + 4) % 4;  // S has order 4 on pairs
            Origami cur = o;
            for (long long i = 0; i < r; ++i) cur = act_S_once(cur);
            return cur;
        }
    }
    throw std::logic_error("act_step: bad generator");
}

Origami act_word(const Sl2Word& w, const Origami& o) {
    // Word [x, y] acts as X.(Y.o): apply steps right-to-left.
    Origami cur = o;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = act_step(*it, cur);
    return cur;
}

Sl2Word direction_to_horizontal_word(long long p, long long q) {
    if (p == 0 && q == 0) throw std::domain_error("direction (0,0)");
    // Steps in APPLICATION order (first applied first); reversed at the end
    // because word_matrix multiplies left-to-right (leftmost acts last).
    Sl2Word steps;
    // S*(p,q)^t = (-q,p)^t. Exactly one of the four rotations lands in the
    // half-open cone {x > 0, y >= 0}.
    int rot = 0;
    while (!(p > 0 && q >= 0)) {
        long long np = -q, nq = p;
        p = np; q = nq;
        if (++rot >= 4) throw std::logic_error("rotation did not terminate");
    }
    if (rot > 0) steps.push_back({Gen::S, rot});
    // Shear Euclid: T^{-k}(p,q) = (p-kq, q), Tp^{-k}(p,q) = (p, q-kp).
    // Keep p >= 1 throughout; terminates at (1, 0) iff gcd(p,q) = 1.
    while (q > 0) {
        if (p > q) {
            long long k = (p % q == 0) ? p / q - 1 : p / q;
            if (k > 0) { steps.push_back({Gen::T, -k}); p -= k * q; }
        } else {
            long long k = q / p;  // q >= p; if p | q this zeroes q
            if (q % p == 0 && p != 1) throw std::domain_error("direction not primitive");
            steps.push_back({Gen::Tp, -k});
            q -= k * p;
        }
    }
    if (p != 1) throw std::domain_error("direction not primitive");
    return Sl2Word(steps.rbegin(), steps.rend());
}

} // namespace stsurf
