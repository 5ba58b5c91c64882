#include "families.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace stsurf {

namespace {

void check_params(const FamilyParams& p) {
    for (long long x : {p.h1, p.h2, p.h3, p.v1, p.v2, p.v3})
        if (x < 1) throw std::domain_error("family parameters must be positive");
}

int checked_square_count(long long n) {
    if (n > 50'000'000LL) throw std::domain_error("family model too large");
    return static_cast<int>(n);
}

Int det2(const IMat& m) {
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
}

// d, t, deltas, and the reciprocal quartic from the two parabolic blocks.
void finish_invariants(FamilyInvariants& inv) {
    inv.dh = det2(inv.qh);
    inv.dv = det2(inv.qv);
    inv.d = inv.dh * inv.dv;
    inv.t = (inv.qh * inv.qv).trace();
    inv.delta1 = inv.t * inv.t - 4 * inv.d;
    inv.delta2 = inv.d * (inv.d + 4 * inv.t + 16);
    inv.a = -(inv.t + 4);
    inv.b = inv.d + 2 * inv.t + 6;
    inv.charpoly = {Int(1), inv.a, inv.b, inv.a, Int(1)};
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("family invariant failure: ") + what);
}

} // namespace

FamilyModel odd_model(const FamilyParams& p) {
    check_params(p);
    const long long w = p.v1 + p.v2 + p.v3;
    const int n = checked_square_count(p.h3 * w + p.h1 * p.v1 + p.h2 * p.v2);
    const long long t1 = p.h3 * w;           // first square of tower 1
    const long long t2 = t1 + p.h1 * p.v1;   // first square of tower 2

    auto base = [&](long long r, long long c) { return static_cast<int>(r * w + c); };
    auto tw1 = [&](long long r, long long c) { return static_cast<int>(t1 + r * p.v1 + c); };
    auto tw2 = [&](long long r, long long c) { return static_cast<int>(t2 + r * p.v2 + c); };

    std::vector<int> h(n), v(n);
    for (long long r = 0; r < p.h3; ++r)
        for (long long c = 0; c < w; ++c) {
            h[base(r, c)] = base(r, (c + 1) % w);
            v[base(r, c)] = r + 1 < p.h3       ? base(r + 1, c)
                            : c < p.v1         ? tw1(0, c)
                            : c < p.v1 + p.v2  ? tw2(0, c - p.v1)
                                               : base(0, c);
        }
    for (long long r = 0; r < p.h1; ++r)
        for (long long c = 0; c < p.v1; ++c) {
            h[tw1(r, c)] = tw1(r, (c + 1) % p.v1);
            v[tw1(r, c)] = r + 1 < p.h1 ? tw1(r + 1, c) : base(0, c);
        }
    for (long long r = 0; r < p.h2; ++r)
        for (long long c = 0; c < p.v2; ++c) {
            h[tw2(r, c)] = tw2(r, (c + 1) % p.v2);
            v[tw2(r, c)] = r + 1 < p.h2 ? tw2(r + 1, c) : base(0, p.v1 + c);
        }

    Origami o{Perm(std::move(h)), Perm(std::move(v))};
    require(o.stratum().is_h4(), "two-tower model not in H(4)");

    FamilyModel m{std::move(o), {}, {}};
    for (auto& c : m.sigma) c.assign(2 * static_cast<size_t>(n), Int(0));
    for (auto& c : m.zeta) c.assign(2 * static_cast<size_t>(n), Int(0));
    for (long long c = 0; c < p.v1; ++c) m.sigma[0][tw1(0, c)] = 1;
    for (long long c = 0; c < p.v2; ++c) m.sigma[1][tw2(0, c)] = 1;
    for (long long c = 0; c < w; ++c) m.sigma[2][base(0, c)] = 1;
    for (long long r = 0; r < p.h3; ++r) {
        m.zeta[0][n + base(r, 0)] = 1;
        m.zeta[1][n + base(r, p.v1)] = 1;
        m.zeta[2][n + base(r, p.v1 + p.v2)] = 1;
    }
    for (long long r = 0; r < p.h1; ++r) m.zeta[0][n + tw1(r, 0)] = 1;
    for (long long r = 0; r < p.h2; ++r) m.zeta[1][n + tw2(r, 0)] = 1;
    return m;
}

FamilyInvariants odd_invariants(const FamilyParams& p) {
    check_params(p);
    const Int h1 = p.h1, h2 = p.h2, h3 = p.h3, v1 = p.v1, v2 = p.v2, v3 = p.v3;
    const Int w = v1 + v2 + v3;
    FamilyInvariants inv;
    inv.n_squares = h3 * w + h1 * v1 + h2 * v2;
    inv.len_h = {v1, v2, w};
    inv.len_v = {h1 + h3, h2 + h3, h3};
    inv.lh = v1 * v2 * w;
    inv.lv = (h1 + h3) * (h2 + h3) * h3;
    inv.qh = IMat(2, 2);
    inv.qh.at(0, 0) = h1 * h3 * v2;
    inv.qh.at(1, 1) = h2 * h3 * v1;
    inv.qv = IMat(2, 2);
    inv.qv.at(0, 0) = v1 * (v2 + v3) * (h2 + h3);
    inv.qv.at(0, 1) = -v1 * v2 * (h2 + h3);
    inv.qv.at(1, 0) = -v1 * v2 * (h1 + h3);
    inv.qv.at(1, 1) = v2 * (v1 + v3) * (h1 + h3);
    finish_invariants(inv);
    require(inv.dh == h1 * h2 * h3 * h3 * v1 * v2, "dh closed form (two-tower)");
    require(inv.dv == v1 * v2 * v3 * w * (h1 + h3) * (h2 + h3), "dv closed form (two-tower)");
    require(inv.t == v1 * v2 * h3 *
                         (h1 * h2 * (v1 + v2 + 2 * v3) + h1 * h3 * (v2 + v3) +
                          h2 * h3 * (v1 + v3)),
            "trace closed form (two-tower)");
    return inv;
}

IMat odd_intersection_matrix() {
    return imat_from({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}});
}

FamilyModel hyperelliptic_model(const FamilyParams& p) {
    check_params(p);
    const long long b2 = p.v1 + p.v2;   // width of the middle cylinder
    const long long b1 = p.v2 + p.v3;   // width of the top cylinder
    const int n = checked_square_count(p.h3 * p.v1 + p.h2 * b2 + p.h1 * b1);
    const long long c2 = p.h3 * p.v1;
    const long long c1 = c2 + p.h2 * b2;

    auto ch3 = [&](long long r, long long c) { return static_cast<int>(r * p.v1 + c); };
    auto ch2 = [&](long long r, long long c) { return static_cast<int>(c2 + r * b2 + c); };
    auto ch1 = [&](long long r, long long c) { return static_cast<int>(c1 + r * b1 + c); };

    std::vector<int> h(n), v(n);
    for (long long r = 0; r < p.h3; ++r)
        for (long long c = 0; c < p.v1; ++c) {
            h[ch3(r, c)] = ch3(r, (c + 1) % p.v1);
            v[ch3(r, c)] = r + 1 < p.h3 ? ch3(r + 1, c) : ch2(0, c);
        }
    for (long long r = 0; r < p.h2; ++r)
        for (long long c = 0; c < b2; ++c) {
            h[ch2(r, c)] = ch2(r, (c + 1) % b2);
            v[ch2(r, c)] = r + 1 < p.h2 ? ch2(r + 1, c)
                           : c < p.v1   ? ch3(0, c)
                                        : ch1(0, c - p.v1);
        }
    for (long long r = 0; r < p.h1; ++r)
        for (long long c = 0; c < b1; ++c) {
            h[ch1(r, c)] = ch1(r, (c + 1) % b1);
            v[ch1(r, c)] = r + 1 < p.h1 ? ch1(r + 1, c)
                           : c < p.v2   ? ch2(0, p.v1 + c)
                                        : ch1(0, c);
        }

    Origami o{Perm(std::move(h)), Perm(std::move(v))};
    require(o.stratum().is_h4(), "staircase model not in H(4)");

    FamilyModel m{std::move(o), {}, {}};
    for (auto& c : m.sigma) c.assign(2 * static_cast<size_t>(n), Int(0));
    for (auto& c : m.zeta) c.assign(2 * static_cast<size_t>(n), Int(0));
    for (long long c = 0; c < b1; ++c) m.sigma[0][ch1(0, c)] = 1;
    for (long long c = 0; c < b2; ++c) m.sigma[1][ch2(0, c)] = 1;
    for (long long c = 0; c < p.v1; ++c) m.sigma[2][ch3(0, c)] = 1;
    for (long long r = 0; r < p.h3; ++r) m.zeta[0][n + ch3(r, 0)] = 1;
    for (long long r = 0; r < p.h2; ++r) {
        m.zeta[0][n + ch2(r, 0)] = 1;
        m.zeta[1][n + ch2(r, p.v1)] = 1;
    }
    for (long long r = 0; r < p.h1; ++r) {
        m.zeta[1][n + ch1(r, 0)] = 1;
        m.zeta[2][n + ch1(r, p.v2)] = 1;
    }
    return m;
}

FamilyInvariants hyperelliptic_invariants(const FamilyParams& p) {
    check_params(p);
    const Int h1 = p.h1, h2 = p.h2, h3 = p.h3, v1 = p.v1, v2 = p.v2, v3 = p.v3;
    FamilyInvariants inv;
    inv.n_squares = h3 * v1 + h2 * (v1 + v2) + h1 * (v2 + v3);
    inv.len_h = {v2 + v3, v1 + v2, v1};
    inv.len_v = {h2 + h3, h1 + h2, h1};
    inv.lh = v1 * (v1 + v2) * (v2 + v3);
    inv.lv = h1 * (h1 + h2) * (h2 + h3);
    inv.qh = IMat(2, 2);
    inv.qh.at(0, 0) = -h1 * (h2 + h3) * (v1 + v2);
    inv.qh.at(0, 1) = -h1 * h2 * (v1 + v2);
    inv.qh.at(1, 0) = h1 * h2 * (v2 + v3);
    inv.qh.at(1, 1) = h1 * h2 * (v2 + v3);
    inv.qv = IMat(2, 2);
    inv.qv.at(0, 0) = -v1 * (v2 + v3) * (h1 + h2);
    inv.qv.at(0, 1) = -v1 * v2 * (h1 + h2);
    inv.qv.at(1, 0) = v1 * v2 * (h2 + h3);
    inv.qv.at(1, 1) = v1 * v2 * (h2 + h3);
    finish_invariants(inv);
    require(inv.dh == -h1 * h1 * h2 * h3 * (v1 + v2) * (v2 + v3),
            "dh closed form (staircase)");
    require(inv.dv == -v1 * v1 * v2 * v3 * (h1 + h2) * (h2 + h3),
            "dv closed form (staircase)");
    require(inv.t == h1 * v1 *
                         (h2 * h2 * v3 * (v1 + v2) + h1 * h2 * v1 * (v2 + v3) +
                          h1 * h3 * (v1 + v2) * (v2 + v3) +
                          h2 * h3 * (v2 * v2 + v1 * v3 + 2 * v2 * v3)),
            "trace closed form (staircase)");
    return inv;
}

IMat hyperelliptic_intersection_matrix() {
    return imat_from({{0, 1, 1}, {1, 1, 0}, {1, 0, 0}});
}

Sl2Word family_word(const FamilyInvariants& inv) {
    const Int cap = std::numeric_limits<long long>::max();
    if (inv.lh > cap || inv.lv > cap)
        throw std::domain_error("twist exponent exceeds word-step range");
    return {{Gen::Tp, inv.lv.convert_to<long long>()},
            {Gen::T, inv.lh.convert_to<long long>()}};
}

FamilyParams odd_subfamily(int family, long long n) {
    if (family < 1 || family > 9) throw std::domain_error("two-tower subfamily index out of range");
    if (n < 1) throw std::domain_error("subfamily parameter must be positive");
    static constexpr std::array<std::pair<long long, long long>, 9> towers{{
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
    }};
    auto [h1, h2] = towers[static_cast<size_t>(family - 1)];
    long long v3 = h1 == 1 ? 3 * n : h2 % 2 == 0 ? 6 * n : 6 * n + 3;
    return {h1, h2, 1, 1, 2, v3};
}

int odd_subfamily_count() { return 9; }

FamilyParams hyperelliptic_subfamily(int family, long long n) {
    if (family < 1 || family > 41)
        throw std::domain_error("staircase subfamily index out of range");
    if (n < 1) throw std::domain_error("subfamily parameter must be positive");
    FamilyParams p;
    p.v1 = 1;
    p.h2 = 1;
    switch (hyperelliptic_subfamily_group(family)) {
    case 1:
        p.v2 = 1, p.v3 = 1;
        p.h3 = family;
        p.h1 = 2 * n;
        break;
    case 2:
        p.v2 = 1, p.v3 = 2;
        p.h3 = family - 4;
        p.h1 = 6 * n;
        break;
    case 3:
        p.v2 = 2, p.v3 = 1;
        p.h3 = 2 * (family - 23) + 1;
        p.h1 = 2 * n;
        break;
    case 4:
        p.v2 = 2, p.v3 = 2;
        p.h3 = 2 * (family - 25);
        p.h1 = 4 * n;
        break;
    default:
        p.v2 = 3, p.v3 = 1;
        p.h3 = 2 * (family - 34) + 1;
        p.h1 = 4 * n + 3;
        break;
    }
    return p;
}

int hyperelliptic_subfamily_count() { return 41; }

int hyperelliptic_subfamily_group(int family) {
    if (family < 1 || family > 41)
        throw std::domain_error("staircase subfamily index out of range");
    if (family <= 4) return 1;
    if (family <= 22) return 2;
    if (family <= 25) return 3;
    if (family <= 33) return 4;
    return 5;
}

} // namespace stsurf
