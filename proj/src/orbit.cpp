#include "orbit.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace stsurf {

namespace {

std::vector<int> key_of(const Origami& o) {
    std::vector<int> key = o.h().images();
    const std::vector<int>& v = o.v().images();
    key.insert(key.end(), v.begin(), v.end());
    return key;
}

} // namespace

OrbitGraph::OrbitGraph(const Origami& o, std::size_t max_members) {
    if (!o.is_reduced())
        throw std::domain_error("orbit graph requires a reduced surface");

    std::map<std::vector<int>, int> index;
    auto intern = [&](Origami canonical, int parent, WordStep step) {
        auto [it, fresh] = index.try_emplace(key_of(canonical), int(members_.size()));
        if (fresh) {
            if (members_.size() >= max_members)
                throw std::runtime_error("orbit larger than the configured cap");
            members_.push_back(OrbitMember{std::move(canonical), {}, {}, parent, step});
        }
        return it->second;
    };

    intern(o.canonical(), -1, WordStep{Gen::T, 0});
    // The orbit is finite and each shear permutes it, so closing forward
    // under single positive shears reaches the whole two-generator closure.
    for (std::size_t i = 0; i < members_.size(); ++i) {
        for (bool top : {true, false}) {
            const Gen g = top ? Gen::T : Gen::Tp;
            OrbitSide side;
            Origami cur = members_[i].surface;
            for (long long a = 1;; ++a) {
                cur = act_step({g, 1}, cur);
                Origami can = cur.canonical();
                bool closed = can == members_[i].surface;
                side.targets.push_back(intern(std::move(can), int(i), WordStep{g, a}));
                if (closed) {
                    side.period = a;
                    break;
                }
                if (a > 1'000'000'000LL)
                    throw std::logic_error("shear period runaway");
            }
            (top ? members_[i].top : members_[i].bottom) = std::move(side);
        }
    }
}

Sl2Word OrbitGraph::word_from_base(int i) const {
    Sl2Word w;
    for (int at = i; at > 0; at = members_.at(std::size_t(at)).parent)
        w.push_back(members_.at(std::size_t(at)).step);
    return w;
}

int OrbitGraph::index_of(const Origami& o) const {
    Origami can = o.canonical();
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].surface == can) return int(i);
    return -1;
}

int OrbitGraph::arrow_target(int i, bool top, long long a) const {
    if (a < 1) throw std::domain_error("arrow labels start at 1");
    const OrbitSide& side = top ? members_.at(i).top : members_.at(i).bottom;
    return side.targets[std::size_t((a - 1) % side.period)];
}

} // namespace stsurf
