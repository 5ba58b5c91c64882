#include "homology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace stsurf {

IMat edge_transport(const WordStep& step, const Origami& src) {
    const int n = src.n();
    const Perm& h = src.h();
    const Perm& v = src.v();
    IMat e(2 * n, 2 * n);
    auto add = [&](int edge, int col, long long coef) { e.at(edge, col) += coef; };

    switch (step.g) {
        case Gen::T: {
            // Horizontal edges are fixed; a vertical edge picks up the bottom
            // edges it sweeps across while the column is sheared: full laps
            // around the h-cycle contribute the whole cycle row, then a partial
            // run, landing on the vertical edge of h^r(s).
            long long k = step.k;
            for (int s = 0; s < n; ++s) add(s, s, 1);
            for (int s = 0; s < n; ++s) {
                long long len = h.cycle_length_of(s);
                long long q = k >= 0 ? k / len : -((-k + len - 1) / len);
                long long r = k - q * len;  // 0 <= r < len
                if (q != 0) {
                    int t = s;
                    do { add(t, n + s, q); t = h(t); } while (t != s);
                }
                int t = s;
                for (long long j = 0; j < r; ++j) { add(t, n + s, 1); t = h(t); }
                add(n + t, n + s, 1);  // t = h^r(s) = h^k(s)
            }
            break;
        }
        case Gen::Tp: {
            // The action convention labels the resheared squares so that new
            // square s inherits the left edge of old v^k(s).  Consequently a
            // vertical edge relabels, e_v(u) -> e_v'(v^{-k}(u)), while the
            // bottom edge of s maps to its own new bottom edge plus the
            // vertical edges swept while the column shears: full laps around
            // the v-cycle contribute the whole cycle column, then a partial
            // run down v^{-1}(s), v^{-2}(s), ...
            long long k = step.k;
            for (int u = 0; u < n; ++u) {
                long long len = v.cycle_length_of(u);
                long long m = ((k % len) + len) % len;
                int t = u;
                for (long long j = 0; j < m; ++j) t = v.inv(t);
                add(n + t, n + u, 1);  // t = v^{-k}(u)
            }
            for (int s = 0; s < n; ++s) {
                long long len = v.cycle_length_of(s);
                long long q = k >= 0 ? k / len : -((-k + len - 1) / len);
                long long r = k - q * len;  // 0 <= r < len
                add(s, s, 1);
                if (q != 0) {
                    int t = s;
                    do { add(n + t, s, q); t = v(t); } while (t != s);
                }
                int t = s;
                for (long long j = 0; j < r; ++j) { t = v.inv(t); add(n + t, s, 1); }
            }
            break;
        }
        case Gen::S: {
            long long r = ((step.k % 4) + 4) % 4;
            if (r == 0) return IMat::identity(2 * n);
            // One quarter turn: e_h(s) -> e_v'(v^{-1}(s)), e_v(s) -> -e_h'(s);
            // higher powers by composing through the intermediate surfaces.
            IMat q(2 * n, 2 * n);
            for (int s = 0; s < n; ++s) {
                q.at(n + v.inv(s), s) = 1;
                q.at(s, n + s) = -1;
            }
            if (r == 1) return q;
            Origami mid = act_step({Gen::S, 1}, src);
            IMat rest = edge_transport({Gen::S, r - 1}, mid);
            return rest * q;
        }
    }
    return e;
}

IMat edge_relabel_matrix(const std::vector<int>& relab) {
    const int n = static_cast<int>(relab.size());
    IMat e(2 * n, 2 * n);
    for (int s = 0; s < n; ++s) {
        e.at(relab[s], s) = 1;
        e.at(n + relab[s], n + s) = 1;
    }
    return e;
}

TransportResult word_transport(const Sl2Word& w, const Origami& o) {
    Origami cur = o;
    IMat acc = IMat::identity(2 * o.n());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        acc = edge_transport(*it, cur) * acc;
        cur = act_step(*it, cur);
    }
    return {std::move(cur), std::move(acc)};
}

Int intersection_number(const Chain& a, const Chain& b, const Origami& o) {
    const int n = o.n();
    if (static_cast<int>(a.size()) != 2 * n || static_cast<int>(b.size()) != 2 * n)
        throw std::domain_error("intersection_number: chain size mismatch");
    const Perm& h = o.h();
    const Perm& v = o.v();
    Perm rho = o.corner_rotation();

    Int total = 0;
    for (const auto& cyc : rho.cycles()) {
        // Half-edge rays around this cone point, counterclockwise. Each sector
        // (square corner) contributes its east, north, west and south rays:
        // east/north are the outgoing bottom/left edge of the sector square s,
        // west is the incoming bottom edge of h^{-1}(s), south the incoming
        // left edge of h(v^{-1}(h^{-1}(s))); the next sector is rho(s).
        struct Ray { int edge; bool start; };
        std::vector<Ray> rays;
        rays.reserve(4 * cyc.size());
        for (int s : cyc) {
            rays.push_back({s, true});                              // e_h(s) out
            rays.push_back({n + s, true});                          // e_v(s) out
            rays.push_back({h.inv(s), false});                      // e_h(h^-1 s) in
            rays.push_back({n + h(v.inv(h.inv(s))), false});        // south ray in
        }
        const int m = static_cast<int>(rays.size());

        // Outward flux of each chain through each ray, and prefix sums for a.
        auto flux = [&](const Chain& c, const Ray& r) -> Int {
            return r.start ? c[r.edge] : Int(-c[r.edge]);
        };
        std::vector<Int> prefix(m + 1);
        for (int i = 0; i < m; ++i) prefix[i + 1] = prefix[i] + flux(a, rays[i]);
        // On a cycle the total flux through a vertex vanishes, which is what
        // makes the strand matching below irrelevant.
        auto interval_flux = [&](int from, int to) -> Int {
            // Inclusive counterclockwise interval [from..to].
            if (from <= to) return prefix[to + 1] - prefix[from];
            return prefix[m] - prefix[from] + prefix[to + 1];
        };

        // Strand units of b at this vertex: positive flux = outgoing units,
        // negative = incoming units. Pair them in ray order with
        // multiplicities; each strand entering at ray `in` and leaving at ray
        // `out` sweeps the inclusive arc [in..out] counterclockwise.
        std::vector<std::pair<int, Int>> ins, outs;  // (ray position, count)
        for (int i = 0; i < m; ++i) {
            Int f = flux(b, rays[i]);
            if (f > 0) outs.push_back({i, f});
            else if (f < 0) ins.push_back({i, -f});
        }
        size_t ii = 0, oo = 0;
        while (ii < ins.size() && oo < outs.size()) {
            Int take = std::min(ins[ii].second, outs[oo].second);
            total += take * interval_flux(ins[ii].first, outs[oo].first);
            ins[ii].second -= take;
            outs[oo].second -= take;
            if (ins[ii].second == 0) ++ii;
            if (outs[oo].second == 0) ++oo;
        }
        if (ii != ins.size() || oo != outs.size())
            throw std::domain_error("intersection_number: second chain is not a cycle");
    }
    return total;
}

HomologyModel::HomologyModel(Origami o) : o_(std::move(o)) {
    const int n = o_.n();
    const Perm& h = o_.h();
    const Perm& v = o_.v();

    // Cone points = cycles of the corner rotation.
    Perm rho = o_.corner_rotation();
    auto rho_cycles = rho.cycles();
    vcount_ = static_cast<int>(rho_cycles.size());
    vertex_of_.assign(n, -1);
    for (int c = 0; c < vcount_; ++c)
        for (int s : rho_cycles[c]) vertex_of_[s] = c;

    Stratum st = o_.stratum();
    genus_ = st.genus;

    // Edge endpoints: bottom edge s runs vtx(s) -> vtx(h(s)); left edge N+s
    // runs vtx(s) -> vtx(v(s)).
    edge_from_.resize(2 * n);
    edge_to_.resize(2 * n);
    for (int s = 0; s < n; ++s) {
        edge_from_[s] = vertex_of_[s];
        edge_to_[s] = vertex_of_[h(s)];
        edge_from_[n + s] = vertex_of_[s];
        edge_to_[n + s] = vertex_of_[v(s)];
    }

    // Spanning tree of the 1-skeleton by BFS.
    std::vector<int> parent_edge(vcount_, -1), parent_sign(vcount_, 0), order;
    std::vector<char> visited(vcount_, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(vcount_);  // (edge, dir)
    for (int e = 0; e < 2 * n; ++e) {
        adj[edge_from_[e]].push_back({e, +1});
        if (edge_to_[e] != edge_from_[e]) adj[edge_to_[e]].push_back({e, -1});
    }
    std::vector<char> in_tree(2 * n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    visited[0] = 1;
    while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop();
        order.push_back(a);
        for (auto [e, dir] : adj[a]) {
            int b = dir > 0 ? edge_to_[e] : edge_from_[e];
            if (visited[b]) continue;
            visited[b] = 1;
            in_tree[e] = 1;
            parent_edge[b] = e;
            parent_sign[b] = dir;  // +1: tree edge points away from root at b
            bfs.push(b);
        }
    }

    nontree_index_.assign(2 * n, -1);
    for (int e = 0; e < 2 * n; ++e)
        if (!in_tree[e]) {
            nontree_index_[e] = static_cast<int>(nontree_.size());
            nontree_.push_back(e);
        }
    const int k = static_cast<int>(nontree_.size());  // = 2n - vcount_ + 1

    // Signed tree path from a vertex up to the root, added into a chain.
    auto add_path_to_root = [&](Chain& c, int vtx, const Int& coef) {
        while (parent_edge[vtx] != -1) {
            int e = parent_edge[vtx];
            // parent_sign +1 means e is oriented parent -> vtx; walking up
            // traverses it backwards.
            c[e] -= Int(parent_sign[vtx]) * coef;
            vtx = parent_sign[vtx] > 0 ? edge_from_[e] : edge_to_[e];
        }
    };

    fundcycles_.assign(k, Chain(2 * n));
    for (int i = 0; i < k; ++i) {
        int e = nontree_[i];
        Chain& c = fundcycles_[i];
        c[e] = 1;
        add_path_to_root(c, edge_to_[e], 1);
        add_path_to_root(c, edge_from_[e], -1);
    }

    // Face boundary matrix in non-tree coordinates (one column per square).
    IMat faces(k, n);
    for (int s = 0; s < n; ++s) {
        Chain c(2 * n);
        c[s] += 1;
        c[n + h(s)] += 1;
        c[v(s)] -= 1;
        c[n + s] -= 1;
        std::vector<Int> coords = cycle_coords(c);
        for (int i = 0; i < k; ++i) faces.at(i, s) = coords[i];
    }
    SmithForm sf = smith_form(faces);
    facerank_ = sf.rank;
    if (facerank_ != n - 1)
        throw std::logic_error("homology: unexpected face boundary rank");
    for (const auto& d : sf.divisors())
        if (d != 1) throw std::logic_error("homology: torsion in H1");
    if (k - facerank_ != 2 * genus_)
        throw std::logic_error("homology: rank mismatch with genus");
    u_ = sf.u;

    // Basis lifts: columns of U^{-1} past the face rank, expanded through the
    // fundamental cycles.
    basis_chains_.assign(2 * genus_, Chain(2 * n));
    for (int b = 0; b < 2 * genus_; ++b) {
        int col = facerank_ + b;
        for (int j = 0; j < k; ++j) {
            const Int& coef = sf.uinv.at(j, col);
            if (coef == 0) continue;
            for (int e = 0; e < 2 * n; ++e)
                basis_chains_[b][e] += coef * fundcycles_[j][e];
        }
    }

    gram_ = IMat(2 * genus_, 2 * genus_);
    for (int i = 0; i < 2 * genus_; ++i)
        for (int j = 0; j < 2 * genus_; ++j)
            gram_.at(i, j) = intersection_number(basis_chains_[i], basis_chains_[j], o_);

    pi_ = IMat(2, 2 * genus_);
    for (int b = 0; b < 2 * genus_; ++b) {
        Int sh = 0, sv = 0;
        for (int s = 0; s < n; ++s) {
            sh += basis_chains_[b][s];
            sv += basis_chains_[b][n + s];
        }
        pi_.at(0, b) = sh;
        pi_.at(1, b) = sv;
    }

    h0_ = integer_kernel_basis(pi_);
    if (h0_.cols() != 2 * genus_ - 2)
        throw std::logic_error("homology: zero-holonomy rank mismatch");
}

std::vector<Int> HomologyModel::boundary(const Chain& c) const {
    if (static_cast<int>(c.size()) != 2 * o_.n())
        throw std::domain_error("boundary: chain size mismatch");
    std::vector<Int> b(vcount_);
    for (int e = 0; e < 2 * o_.n(); ++e) {
        if (c[e] == 0) continue;
        b[edge_to_[e]] += c[e];
        b[edge_from_[e]] -= c[e];
    }
    return b;
}

bool HomologyModel::is_cycle(const Chain& c) const {
    auto b = boundary(c);
    return std::all_of(b.begin(), b.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> HomologyModel::cycle_coords(const Chain& c) const {
    std::vector<Int> out(nontree_.size());
    for (size_t i = 0; i < nontree_.size(); ++i) out[i] = c[nontree_[i]];
    return out;
}

std::vector<Int> HomologyModel::homology_class(const Chain& c) const {
    if (!is_cycle(c)) throw std::domain_error("homology_class: chain is not a cycle");
    std::vector<Int> x = u_.apply(cycle_coords(c));
    return std::vector<Int>(x.begin() + facerank_, x.end());
}

IMat HomologyModel::induced_on_h1(const IMat& edge_transport_to_self) const {
    const int r = rank();
    IMat m(r, r);
    for (int i = 0; i < r; ++i) {
        Chain img = edge_transport_to_self.apply(basis_chains_[i]);
        std::vector<Int> cls = homology_class(img);
        for (int j = 0; j < r; ++j) m.at(j, i) = cls[j];
    }
    return m;
}

IMat HomologyModel::restrict_to_h0(const IMat& m_full) const {
    RatMat sol = rat_solve_full_column_rank(rat_from_int(h0_), rat_from_int(m_full * h0_));
    IMat out;
    if (!rat_mat_is_integral(sol, &out))
        throw std::logic_error("restrict_to_h0: subspace not preserved integrally");
    return out;
}

std::vector<Int> HomologyModel::symplectic_divisors_h0() const {
    IMat omega0 = h0_.transpose() * gram_ * h0_;
    auto div = smith_form(omega0).divisors();
    if (div.size() != static_cast<size_t>(2 * genus_ - 2))
        throw std::logic_error("symplectic_divisors_h0: degenerate restriction");
    std::vector<Int> out;
    for (size_t i = 0; i + 1 < div.size(); i += 2) {
        if (div[i] != div[i + 1])
            throw std::logic_error("symplectic_divisors_h0: divisors do not pair up");
        out.push_back(div[i]);
    }
    return out;
}

IntPoly charpoly_h0(const IntPoly& full, const Int& trace2) {
    IntPoly quad{1, -trace2, 1};
    auto q = poly_div_exact(full, quad);
    if (!q) throw std::logic_error("charpoly_h0: tautological factor does not divide");
    return *q;
}

} // namespace stsurf
