#include "intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stsurf {

IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

bool poly_is_zero(const IntPoly& p) { return p.empty(); }

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return poly_trim(std::move(out));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    IntPoly out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return poly_trim(std::move(out));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

IntPoly poly_neg(IntPoly a) {
    for (auto& c : a) c = -c;
    return a;
}

IntPoly poly_scale(IntPoly a, const Int& s) {
    if (s == 0) return {};
    for (auto& c : a) c *= s;
    return a;
}

Int poly_eval(const IntPoly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat poly_eval_rat(const IntPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPoly poly_derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly out(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) out[i - 1] = Int(i) * p[i];
    return poly_trim(std::move(out));
}

Int poly_content(const IntPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

IntPoly poly_primitive_part(const IntPoly& p) {
    if (p.empty()) return {};
    Int g = poly_content(p);
    IntPoly out = p;
    for (auto& c : out) c /= g;
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

std::optional<IntPoly> poly_div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return IntPoly{};
    if (a.size() < b.size()) return std::nullopt;
    IntPoly rem = a;
    IntPoly q(a.size() - b.size() + 1);
    const Int& lead = b.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Int num = rem[i + b.size() - 1];
        if (num % lead != 0) return std::nullopt;
        Int c = num / lead;
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    if (!poly_trim(std::move(rem)).empty()) return std::nullopt;
    return poly_trim(std::move(q));
}

namespace {

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
IntPoly poly_prem(IntPoly r, const IntPoly& b) {
    const int db = poly_degree(b);
    const Int& lb = b.back();
    while (poly_degree(r) >= db) {
        int shift = poly_degree(r) - db;
        Int c = r.back();
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[shift + j] -= c * b[j];
        r = poly_trim(std::move(r));
    }
    return r;
}

} // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    if (a.empty()) return b.empty() ? IntPoly{} : poly_primitive_part(b);
    if (b.empty()) return poly_primitive_part(a);
    Int content = boost::multiprecision::gcd(poly_content(a), poly_content(b));
    a = poly_primitive_part(std::move(a));
    b = poly_primitive_part(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    // Primitive PRS: pseudo-remainder, then strip content each round.
    while (!b.empty()) {
        IntPoly r = poly_prem(a, b);
        a = std::move(b);
        b = r.empty() ? IntPoly{} : poly_primitive_part(std::move(r));
    }
    return poly_scale(std::move(a), content);
}

IntPoly poly_squarefree_part(const IntPoly& p) {
    if (p.empty()) return {};
    if (poly_degree(p) == 0) return IntPoly{1};
    IntPoly g = poly_primitive_part(poly_gcd(p, poly_derivative(p)));
    auto q = poly_div_exact(poly_primitive_part(p), g);
    if (!q) throw std::logic_error("squarefree: gcd does not divide");
    return poly_primitive_part(*q);
}

std::vector<IntPoly> poly_squarefree_decomposition(const IntPoly& p) {
    if (poly_is_zero(p))
        throw std::domain_error("squarefree decomposition of the zero polynomial");
    IntPoly a = poly_primitive_part(p);
    if (poly_degree(a) == 0) return {};
    auto div = [](const IntPoly& x, const IntPoly& y) {
        auto q = poly_div_exact(x, y);
        if (!q) throw std::logic_error("squarefree decomposition: inexact division");
        return *q;
    };
    IntPoly g = poly_primitive_part(poly_gcd(a, poly_derivative(a)));
    if (poly_degree(g) == 0) return {a};
    IntPoly c = div(a, g);
    IntPoly d = poly_sub(div(poly_derivative(a), g), poly_derivative(c));
    std::vector<IntPoly> out;
    for (;;) {
        IntPoly s = poly_primitive_part(poly_gcd(c, d));
        out.push_back(s);
        c = div(c, s);
        if (poly_degree(c) == 0) break;
        d = poly_sub(div(d, s), poly_derivative(c));
    }
    return out;
}

int poly_reduced_degree(const IntPoly& p) {
    if (poly_is_zero(p)) return -1;
    int deg = 0;
    auto parts = poly_squarefree_decomposition(p);
    for (size_t i = 0; i < parts.size(); ++i)
        if (i % 2 == 0) deg += poly_degree(parts[i]);   // multiplicity i+1 odd
    return deg;
}

IntPoly poly_interpolate_integer(const std::vector<std::pair<Int, Int>>& points) {
    // Newton divided differences over Q.
    const size_t n = points.size();
    if (n == 0) return {};
    std::vector<Rat> coef(n);
    std::vector<Rat> col(n);
    for (size_t i = 0; i < n; ++i) col[i] = Rat(points[i].second);
    coef[0] = col[0];
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) {
            Rat dx = Rat(points[i + level].first - points[i].first);
            if (dx == 0) throw std::domain_error("interpolate: repeated x");
            col[i] = (col[i + 1] - col[i]) / dx;
        }
        coef[level] = col[0];
    }
    // Expand Newton form into monomial coefficients.
    std::vector<Rat> poly{coef[n - 1]};
    for (size_t i = n - 1; i-- > 0;) {
        // poly := poly * (x - x_i) + coef[i]
        std::vector<Rat> next(poly.size() + 1);
        Rat xi(points[i].first);
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * xi;
        }
        next[0] += coef[i];
        poly = std::move(next);
    }
    IntPoly out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (!is_integer(poly[i]))
            throw std::domain_error("interpolate: non-integer coefficient");
        out[i] = rat_num(poly[i]);
    }
    return poly_trim(std::move(out));
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = poly_degree(p); i >= 0; --i) {
        const Int& c = p[i];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace stsurf
