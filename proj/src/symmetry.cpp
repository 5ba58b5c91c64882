#include "symmetry.hpp"

#include <algorithm>
#include <stdexcept>

namespace stsurf {

namespace {

// Propagate tau(base) = image through tau(h(s)) = h^{-1}(tau(s)) and
// tau(v(s)) = v^{-1}(tau(s)); nullopt when inconsistent.
std::optional<Perm> propagate(const Origami& o, int base, int image) {
    const int n = o.n();
    const Perm& h = o.h();
    const Perm& v = o.v();
    std::vector<int> tau(n, -1);
    tau[base] = image;
    std::vector<int> stack{base};
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        const int pairs[2][2] = {{h(s), h.inv(tau[s])}, {v(s), v.inv(tau[s])}};
        for (auto& pr : pairs) {
            int src = pr[0], dst = pr[1];
            if (tau[src] == -1) {
                tau[src] = dst;
                stack.push_back(src);
            } else if (tau[src] != dst) {
                return std::nullopt;
            }
        }
    }
    for (int s = 0; s < n; ++s)
        if (tau[s] == -1) return std::nullopt;   // unreachable for transitive pairs
    Perm t(tau);
    for (int s = 0; s < n; ++s)
        if (t(t(s)) != s) return std::nullopt;   // the symmetry must be an involution
    return t;
}

} // namespace

std::vector<AntiAutomorphism> anti_automorphisms(const Origami& o) {
    const int n = o.n();
    const Perm& h = o.h();
    const Perm& v = o.v();
    const Perm rho = o.corner_rotation();

    // Vertex ids.
    std::vector<int> vtx(n, -1);
    {
        int id = 0;
        for (const auto& c : rho.cycles()) {
            for (int s : c) vtx[s] = id;
            ++id;
        }
    }
    const int nvert = 1 + *std::max_element(vtx.begin(), vtx.end());

    std::vector<AntiAutomorphism> out;
    for (int image = 0; image < n; ++image) {
        auto t = propagate(o, 0, image);
        if (!t) continue;
        AntiAutomorphism a;
        a.tau = *t;
        for (int s = 0; s < n; ++s) {
            if (a.tau(s) == s) ++a.fixed_squares;
            if (a.tau(s) == v.inv(s)) ++a.fixed_h_mids;
            if (a.tau(s) == h.inv(s)) ++a.fixed_v_mids;
        }
        // Induced map on vertices: the corner of s goes to the far corner of
        // tau(s), i.e. the vertex of v(h(tau(s))).
        std::vector<int> seen(nvert, 0);
        for (int s = 0; s < n; ++s) {
            int p = vtx[s];
            if (seen[p]) continue;
            seen[p] = 1;
            if (vtx[v(h(a.tau(s)))] == p) ++a.fixed_vertices;
        }
        out.push_back(std::move(a));
    }
    return out;
}

std::optional<AntiAutomorphism> anti_automorphism(const Origami& o) {
    auto all = anti_automorphisms(o);
    if (all.empty()) return std::nullopt;
    return all.front();
}

HLKInvariant hlk_invariant(const Origami& o) {
    auto a = anti_automorphism(o);
    if (!a) throw std::domain_error("hlk_invariant: surface admits no central symmetry");
    HLKInvariant inv;
    inv.l0 = a->fixed_vertices - 1;   // the cone point itself is always fixed
    inv.triple = {a->fixed_squares, a->fixed_h_mids, a->fixed_v_mids};
    std::sort(inv.triple.begin(), inv.triple.end(), std::greater<int>());
    return inv;
}

H4Component component_classification(const Origami& o) {
    if (!o.stratum().is_h4())
        throw std::domain_error("component_classification: stratum is not a single four-fold zero");
    for (const auto& a : anti_automorphisms(o)) {
        if (a.total() == 8) return H4Component::Hyperelliptic;
        if (a.total() == 4) return H4Component::OddPrym;
        throw std::logic_error("component_classification: central symmetry with unexpected fixed-point count");
    }
    return H4Component::OddNonPrym;
}

const char* component_name(H4Component c) {
    switch (c) {
        case H4Component::Hyperelliptic: return "hyperelliptic";
        case H4Component::OddPrym: return "odd-prym";
        case H4Component::OddNonPrym: return "odd-nonprym";
    }
    return "?";
}

} // namespace stsurf
