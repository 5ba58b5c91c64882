#include "cylinders.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stsurf {

CylinderDecomposition cylinder_decomposition(const Origami& o, long long p, long long q) {
    if (std::gcd(p, q) != 1) throw std::invalid_argument("cylinder_decomposition: direction must be primitive");
    Sl2Word word = direction_to_horizontal_word(p, q);
    Origami normalized = act_word(word, o);
    CylinderDecomposition out{p, q, std::move(word), std::move(normalized), {}, {}};

    const Origami& no = out.normalized;
    const int n = no.n();
    const Perm& h = no.h();
    const Perm& v = no.v();
    const Perm rho = no.corner_rotation();

    // Rows are h-cycles; an interface above a row is regular when every vertex
    // on it (the lower-left corners of the squares above) has trivial rotation.
    const auto rows = h.cycles();
    const int nrows = static_cast<int>(rows.size());
    std::vector<int> row_of(n, -1);
    for (int r = 0; r < nrows; ++r)
        for (int s : rows[r]) row_of[s] = r;

    std::vector<int> up(nrows, -1);        // next row in the same cylinder
    std::vector<int> indegree(nrows, 0);
    for (int r = 0; r < nrows; ++r) {
        bool clean = true;
        for (int s : rows[r])
            if (rho(v(s)) != v(s)) { clean = false; break; }
        if (clean) {
            up[r] = row_of[v(rows[r][0])];
            ++indegree[up[r]];
        }
    }

    std::vector<int> visited(nrows, 0);
    auto collect = [&](int bottom) {
        Cylinder cyl;
        cyl.width = static_cast<long long>(rows[bottom].size());
        for (int r = bottom; r != -1 && !visited[r]; r = up[r]) {
            visited[r] = 1;
            ++cyl.height;
            cyl.squares.insert(cyl.squares.end(), rows[r].begin(), rows[r].end());
        }
        std::sort(cyl.squares.begin(), cyl.squares.end());
        Chain waist(2 * n, Int(0));
        for (int s : rows[bottom]) waist[s] += 1;
        out.cylinders.push_back(std::move(cyl));
        out.waists.push_back(std::move(waist));
    };
    for (int r = 0; r < nrows; ++r)
        if (!visited[r] && indegree[r] == 0) collect(r);
    for (int r = 0; r < nrows; ++r)         // leftover regular stacks (torus)
        if (!visited[r]) collect(r);

    // Deterministic order: by smallest contained square label.
    std::vector<int> idx(out.cylinders.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return out.cylinders[a].squares.front() < out.cylinders[b].squares.front();
    });
    std::vector<Cylinder> cs;
    std::vector<Chain> ws;
    for (int i : idx) {
        cs.push_back(std::move(out.cylinders[i]));
        ws.push_back(std::move(out.waists[i]));
    }
    out.cylinders = std::move(cs);
    out.waists = std::move(ws);
    return out;
}

int homological_dimension(const Origami& o, long long p, long long q) {
    CylinderDecomposition d = cylinder_decomposition(o, p, q);
    HomologyModel m(d.normalized);
    IMat cols(m.rank(), static_cast<int>(d.waists.size()));
    for (int j = 0; j < cols.cols(); ++j) {
        Chain cls = m.homology_class(d.waists[j]);
        for (int i = 0; i < cols.rows(); ++i) cols.at(i, j) = cls[i];
    }
    return rank_of(cols);
}

Perm cyclic_conjugation_canonical(const Perm& s) {
    const int n = s.size();
    std::vector<int> best;
    for (int r = 0; r < n; ++r) {
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i)
            im[i] = ((s((i + r) % n) - r) % n + n) % n;
        if (best.empty() || im < best) best = im;
    }
    return Perm(best);
}

SaddleConfiguration saddle_configuration(const Origami& o, long long p, long long q) {
    CylinderDecomposition d = cylinder_decomposition(o, p, q);
    const Origami& no = d.normalized;
    const Perm& h = no.h();
    const Perm rho = no.corner_rotation();

    std::vector<int> cone;                  // the unique length-5 vertex cycle
    for (const auto& c : rho.cycles())
        if (c.size() > 1) {
            if (!cone.empty() || c.size() != 5)
                throw std::domain_error("saddle_configuration: surface does not have a single five-fold cone point");
            cone = c;
        }
    if (cone.empty()) throw std::domain_error("saddle_configuration: surface does not have a single five-fold cone point");

    // Walk the cone cycle in rotation order so that consecutive entries are
    // counterclockwise-consecutive sectors.
    std::vector<int> sector(5);
    sector[0] = cone[0];
    for (int r = 1; r < 5; ++r) sector[r] = rho(sector[r - 1]);
    std::vector<int> pos_of(no.n(), -1);
    for (int r = 0; r < 5; ++r) pos_of[sector[r]] = r;

    SaddleConfiguration cfg;
    cfg.pairing.assign(10, -1);
    std::vector<int> sig(5, -1);
    for (int r = 0; r < 5; ++r) {
        int t = h(sector[r]);
        while (pos_of[t] < 0) t = h(t);     // continue straight through regular vertices
        int u = pos_of[t];
        cfg.pairing[2 * r] = 2 * u + 1;
        cfg.pairing[2 * u + 1] = 2 * r;
        sig[r] = u;
        if (((u - r - 2) % 5 + 5) % 5 == 0) ++cfg.balanced_count;
    }
    cfg.sigma5 = cyclic_conjugation_canonical(Perm(sig));
    cfg.cylinder_count = static_cast<int>(d.cylinders.size());
    return cfg;
}

} // namespace stsurf
