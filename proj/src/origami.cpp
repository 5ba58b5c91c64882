#include "origami.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stsurf {

std::string Stratum::to_string() const {
    std::ostringstream out;
    out << "H(";
    if (zero_orders.empty()) {
        out << "0";
    } else {
        for (size_t i = 0; i < zero_orders.size(); ++i) {
            if (i) out << ',';
            out << zero_orders[i];
        }
    }
    out << ')';
    return out.str();
}

Origami::Origami(Perm h, Perm v) : h_(std::move(h)), v_(std::move(v)) {
    if (h_.size() != v_.size() || h_.size() == 0)
        throw std::invalid_argument("Origami: permutation sizes must match and be positive");
    // transitivity of <h, v>
    std::vector<char> seen(n(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int s = stack.back();
        stack.pop_back();
        for (int t : {h_(s), v_(s), h_.inv(s), v_.inv(s)}) {
            if (!seen[t]) {
                seen[t] = 1;
                ++count;
                stack.push_back(t);
            }
        }
    }
    if (count != n())
        throw std::invalid_argument("Origami: (h, v) does not act transitively");
}

Perm Origami::corner_rotation() const {
    std::vector<int> im(n());
    for (int s = 0; s < n(); ++s) im[s] = v_(h_(v_.inv(h_.inv(s))));
    return Perm(std::move(im));
}

Stratum Origami::stratum() const {
    Stratum st;
    Perm rho = corner_rotation();
    auto cycles = rho.cycles();
    st.vertex_count = static_cast<int>(cycles.size());
    for (const auto& c : cycles)
        if (c.size() > 1) st.zero_orders.push_back(static_cast<int>(c.size()) - 1);
    std::sort(st.zero_orders.rbegin(), st.zero_orders.rend());
    // V - E + F = 2 - 2g with E = 2N, F = N.
    int euler = st.vertex_count - n();
    if ((2 - euler) % 2 != 0) throw std::logic_error("stratum: odd Euler characteristic");
    st.genus = (2 - euler) / 2;
    if (st.genus == 1) st.zero_orders = {0};
    return st;
}

std::vector<int> Origami::bfs_relabeling(int base) const {
    std::vector<int> relab(n(), -1);
    std::vector<int> queue;
    queue.reserve(n());
    queue.push_back(base);
    relab[base] = 0;
    int next = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int s = queue[qi];
        for (int t : {h_(s), v_(s)}) {
            if (relab[t] == -1) {
                relab[t] = next++;
                queue.push_back(t);
            }
        }
    }
    if (next != n()) throw std::logic_error("bfs_relabeling: not transitive under positive words");
    return relab;
}

std::pair<Perm, Perm> Origami::canonical_pair() const {
    std::pair<Perm, Perm> best;
    bool have = false;
    for (int base = 0; base < n(); ++base) {
        auto relab = bfs_relabeling(base);
        std::pair<Perm, Perm> cand{conjugate(h_, relab), conjugate(v_, relab)};
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

Origami Origami::canonical() const {
    auto p = canonical_pair();
    return Origami(p.first, p.second);
}

std::vector<int> Origami::canonical_relabeling() const {
    std::pair<Perm, Perm> best;
    std::vector<int> best_relab;
    bool have = false;
    for (int base = 0; base < n(); ++base) {
        auto relab = bfs_relabeling(base);
        std::pair<Perm, Perm> cand{conjugate(h_, relab), conjugate(v_, relab)};
        if (!have || cand < best) {
            best = std::move(cand);
            best_relab = std::move(relab);
            have = true;
        }
    }
    return best_relab;
}

bool Origami::isomorphic_to(const Origami& o) const {
    if (n() != o.n()) return false;
    return canonical_pair() == o.canonical_pair();
}

std::optional<std::vector<int>> Origami::isomorphism_to(const Origami& other) const {
    if (n() != other.n()) return std::nullopt;
    // tau with tau(0) = t0 is forced along BFS; check consistency.
    for (int t0 = 0; t0 < n(); ++t0) {
        std::vector<int> tau(n(), -1);
        tau[0] = t0;
        std::vector<int> queue{0};
        bool ok = true;
        for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
            int s = queue[qi];
            const std::pair<int, int> steps[2] = {
                {h_(s), other.h()(tau[s])},
                {v_(s), other.v()(tau[s])},
            };
            for (auto [src, dst] : steps) {
                if (tau[src] == -1) {
                    tau[src] = dst;
                    queue.push_back(src);
                } else if (tau[src] != dst) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        // Transitivity guarantees full assignment; verify bijectivity + relations.
        std::vector<char> hit(n(), 0);
        for (int s = 0; s < n(); ++s) {
            if (tau[s] < 0 || hit[tau[s]]) { ok = false; break; }
            hit[tau[s]] = 1;
        }
        if (!ok) continue;
        for (int s = 0; s < n() && ok; ++s)
            ok = tau[h_(s)] == other.h()(tau[s]) && tau[v_(s)] == other.v()(tau[s]);
        if (ok) return tau;
    }
    return std::nullopt;
}

std::vector<Perm> Origami::automorphism_group() const {
    std::vector<Perm> out;
    for (int t0 = 0; t0 < n(); ++t0) {
        std::vector<int> tau(n(), -1);
        tau[0] = t0;
        std::vector<int> queue{0};
        bool ok = true;
        for (size_t qi = 0; qi < queue.size() && ok; ++qi) {
            int s = queue[qi];
            const std::pair<int, int> steps[2] = {
                {h_(s), h_(tau[s])},
                {v_(s), v_(tau[s])},
            };
            for (auto [src, dst] : steps) {
                if (tau[src] == -1) {
                    tau[src] = dst;
                    queue.push_back(src);
                } else if (tau[src] != dst) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        try {
            Perm cand(tau);
            bool rel = true;
            for (int s = 0; s < n() && rel; ++s)
                rel = cand(h_(s)) == h_(cand(s)) && cand(v_(s)) == v_(cand(s));
            if (rel) out.push_back(std::move(cand));
        } catch (const std::invalid_argument&) {
        }
    }
    return out;
}

bool Origami::is_reduced() const {
    // Non-reduced <=> the developing map descends mod some index-p sublattice
    // L = ker((x,y) -> a x + b y mod p) of Z^2 with p | N: then a consistent
    // coloring c with c(h s) = c(s) + a, c(v s) = c(s) + b exists.
    int N = n();
    std::vector<int> primes;
    int m = N;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);
    for (int p : primes) {
        std::vector<std::pair<int, int>> lines;
        lines.push_back({1, 0});
        for (int k = 0; k < p; ++k) lines.push_back({k, 1});
        for (auto [a, b] : lines) {
            std::vector<int> color(N, -1);
            color[0] = 0;
            std::vector<int> queue{0};
            bool consistent = true;
            for (size_t qi = 0; qi < queue.size() && consistent; ++qi) {
                int s = queue[qi];
                const std::pair<int, int> steps[2] = {
                    {h_(s), (color[s] + a) % p},
                    {v_(s), (color[s] + b) % p},
                };
                for (auto [t, c] : steps) {
                    if (color[t] == -1) {
                        color[t] = c;
                        queue.push_back(t);
                    } else if (color[t] != c) {
                        consistent = false;
                        break;
                    }
                }
            }
            if (consistent) return false;
        }
    }
    return true;
}

MonodromyClass Origami::monodromy_classification() const {
    MonodromyClass mc;
    mc.sign_h = h_.sign();
    mc.sign_v = v_.sign();
    if (stratum().is_h4() && is_reduced() && n() >= 7)
        mc.kind = (mc.sign_h == 1 && mc.sign_v == 1) ? MonodromyClass::Alternating
                                                     : MonodromyClass::Symmetric;
    else
        mc.kind = MonodromyClass::Other;
    return mc;
}

std::string Origami::to_text() const {
    std::ostringstream out;
    out << "h: " << h_.image_string() << "\n";
    out << "v: " << v_.image_string() << "\n";
    return out.str();
}

std::optional<Origami> origami_from_text(const std::string& text) {
    std::string hline, vline;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find_first_of(":=");
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        std::string val = line.substr(colon + 1);
        if (key == "h") hline = val;
        else if (key == "v") vline = val;
    }
    if (hline.empty() || vline.empty()) return std::nullopt;
    // Infer n from an image list if present, else from the largest cycle label.
    auto max_label = [](const std::string& s) {
        int best = 0;
        size_t i = 0;
        while (i < s.size()) {
            if (std::isdigit((unsigned char)s[i])) {
                size_t j = i;
                while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
                best = std::max(best, std::stoi(s.substr(i, j - i)));
                i = j;
            } else {
                ++i;
            }
        }
        return best;
    };
    int n = std::max(max_label(hline), max_label(vline));
    return origami_from_strings(hline, vline, n);
}

std::optional<Origami> origami_from_strings(const std::string& h, const std::string& v, int n) {
    auto hp = Perm::parse(h, n);
    auto vp = Perm::parse(v, n);
    if (!hp || !vp) return std::nullopt;
    try {
        return Origami(*hp, *vp);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

} // namespace stsurf
