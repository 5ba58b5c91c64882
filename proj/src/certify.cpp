#include "certify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

namespace stsurf {

namespace {

using nlohmann::json;

bool single_zero(const Origami& o) {
    const Stratum s = o.stratum();
    return s.zero_orders.size() == 1 && s.zero_orders[0] > 0;
}

// Deterministic enumeration of primitive directions: by max(|p|,|q|), then
// |p|+|q|, then p, then |q|, then positive q before negative.
std::vector<std::pair<long long, long long>> primitive_directions(long long bound) {
    std::vector<std::pair<long long, long long>> dirs;
    for (long long m = 1; m <= bound; ++m)
        for (long long p = 0; p <= m; ++p)
            for (long long aq = 0; aq <= m; ++aq)
                for (long long q : {aq, -aq}) {
                    if (q == 0 && aq != 0) continue;       // visit q = 0 once
                    if (std::max(p, aq) != m) continue;    // exactly the ring m
                    if (p == 0 && q < 0) continue;         // normalized sign
                    if (std::gcd(p, q) != 1) continue;
                    dirs.push_back({p, q});
                }
    std::stable_sort(dirs.begin(), dirs.end(), [](const auto& x, const auto& y) {
        const long long mx = std::max(std::llabs(x.first), std::llabs(x.second));
        const long long my = std::max(std::llabs(y.first), std::llabs(y.second));
        if (mx != my) return mx < my;
        const long long sx = std::llabs(x.first) + std::llabs(x.second);
        const long long sy = std::llabs(y.first) + std::llabs(y.second);
        if (sx != sy) return sx < sy;
        if (x.first != y.first) return x.first < y.first;
        if (std::llabs(x.second) != std::llabs(y.second))
            return std::llabs(x.second) < std::llabs(y.second);
        return x.second > y.second;
    });
    return dirs;
}

CandidateReport analyze_candidate(const HomologyModel& hom, const Origami& o, Sl2Word word) {
    TransportResult tr = word_transport(word, o);
    if (!(tr.target == o))
        throw std::logic_error("candidate word does not fix the surface");
    const IMat m0 = hom.restrict_to_h0(hom.induced_on_h1(tr.matrix));
    IntPoly cp = charpoly(m0);
    if (cp.size() != 5 || cp[0] != 1 || cp[4] != 1 || cp[1] != cp[3])
        throw std::logic_error("zero-holonomy charpoly is not a reciprocal quartic");
    QuarticAnalysis qa = quartic_analyze(cp[3], cp[2]);
    Mat2 derivative = word_matrix(word);
    return CandidateReport{std::move(word), derivative, std::move(cp), std::move(qa)};
}

Sl2Word inverse_word(const Sl2Word& w) {
    Sl2Word r(w.rbegin(), w.rend());
    for (WordStep& s : r) s.k = -s.k;
    return r;
}

// Merge adjacent steps with the same generator and drop vanishing exponents.
Sl2Word compress_word(const Sl2Word& w) {
    Sl2Word r;
    for (const WordStep& s : w) {
        if (!r.empty() && r.back().g == s.g) r.back().k += s.k;
        else r.push_back(s);
        if (r.back().k == 0) r.pop_back();
    }
    return r;
}

std::vector<int> inverse_relab(const std::vector<int>& r) {
    std::vector<int> inv(r.size());
    for (int i = 0; i < int(r.size()); ++i) inv[std::size_t(r[i])] = i;
    return inv;
}

struct LoopHit {
    Sl2Word word;          // loop based at the original surface
    Mat2 derivative;
    IntPoly cp;            // {1, a, b, a, 1}
    QuarticAnalysis analysis;
};

// Tests one based loop, given its chain-level matrix on the base surface.
std::optional<LoopHit> evaluate_loop(const HomologyModel& hom, const IMat& loop_matrix,
                                     Sl2Word word) {
    const Mat2 d = word_matrix(word);
    if (!(d.trace() > 2)) return std::nullopt;
    const IMat a0 = hom.restrict_to_h0(hom.induced_on_h1(loop_matrix));
    IntPoly cp = charpoly(a0);
    if (cp.size() != 5 || cp[0] != 1 || cp[4] != 1 || cp[1] != cp[3]) return std::nullopt;
    QuarticAnalysis qa = quartic_analyze(cp[3], cp[2]);
    if (qa.verdict != GaloisVerdict::GaloisPinching) return std::nullopt;
    return LoopHit{compress_word(word), d, std::move(cp), std::move(qa)};
}

// Bounded breadth-first walk of the shear orbit, maintaining for every
// discovered surface the chain transport from the base and its inverse. Two
// kinds of based loops are examined in discovery order: the surface's own
// multi-twist product conjugated back to the base, and, for every unit arrow
// landing on already-explored territory, the corresponding closing loop.
// Returns the first Galois-pinching loop with hyperbolic derivative.
// `whole_orbit` reports whether the walk exhausted the orbit within budget.
std::optional<LoopHit> orbit_loop_search(const Origami& base, const HomologyModel& hom,
                                         std::size_t budget, bool* whole_orbit) {
    std::vector<Origami> surf{base};
    std::vector<Sl2Word> word{Sl2Word{}};
    std::vector<IMat> fwd{IMat::identity(2 * base.n())};
    std::vector<IMat> bwd{IMat::identity(2 * base.n())};
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
    auto key_of = [](const Origami& s) {
        auto cp = s.canonical_pair();
        return std::make_pair(cp.first.images(), cp.second.images());
    };
    index.emplace(key_of(base), 0);
    bool budget_hit = false;

    for (std::size_t i = 0; i < surf.size(); ++i) {
        if (i > 0) {
            // The surface's own multi-twist product, as a loop at the base.
            const ParabolicPair pi = build_parabolics(surf[i]);
            const Sl2Word vh{{Gen::Tp, pi.k_v}, {Gen::T, pi.k_h}};
            const TransportResult tc = word_transport(vh, surf[i]);
            const IMat loop = bwd[i] * (tc.matrix * fwd[i]);
            Sl2Word full = inverse_word(word[i]);
            full.insert(full.end(), vh.begin(), vh.end());
            full.insert(full.end(), word[i].begin(), word[i].end());
            if (auto hit = evaluate_loop(hom, loop, std::move(full))) {
                if (whole_orbit) *whole_orbit = false;
                return hit;
            }
        }
        for (Gen g : {Gen::T, Gen::Tp}) {
            const WordStep step{g, 1};
            Origami x = act_step(step, surf[i]);
            const IMat e = edge_transport(step, surf[i]);
            auto key = key_of(x);
            auto it = index.find(key);
            if (it == index.end()) {
                if (surf.size() >= budget) {
                    budget_hit = true;
                    continue;
                }
                const std::vector<int> relab = x.canonical_relabeling();
                fwd.push_back(edge_relabel_matrix(relab) * (e * fwd[i]));
                bwd.push_back(bwd[i] * (edge_transport({g, -1}, x) *
                                        edge_relabel_matrix(inverse_relab(relab))));
                Sl2Word w{step};
                w.insert(w.end(), word[i].begin(), word[i].end());
                word.push_back(std::move(w));
                index.emplace(std::move(key), int(surf.size()));
                surf.push_back(x.canonical());
            } else {
                const int j = it->second;
                const auto iso = x.isomorphism_to(surf[std::size_t(j)]);
                if (!iso) throw std::logic_error("orbit key collision without isomorphism");
                const IMat loop = bwd[std::size_t(j)] * (edge_relabel_matrix(*iso) * (e * fwd[i]));
                Sl2Word full = inverse_word(word[std::size_t(j)]);
                full.push_back(step);
                full.insert(full.end(), word[i].begin(), word[i].end());
                if (auto hit = evaluate_loop(hom, loop, std::move(full))) {
                    if (whole_orbit) *whole_orbit = false;
                    return hit;
                }
            }
        }
    }
    if (whole_orbit) *whole_orbit = !budget_hit;
    return std::nullopt;
}

std::string int_str(const Int& v) { return v.str(); }

json mat2_json(const Mat2& m) {
    return json::array({json::array({int_str(m.a), int_str(m.b)}),
                        json::array({int_str(m.c), int_str(m.d)})});
}

Mat2 mat2_from(const json& j) {
    return Mat2{Int(j.at(0).at(0).get<std::string>()), Int(j.at(0).at(1).get<std::string>()),
                Int(j.at(1).at(0).get<std::string>()), Int(j.at(1).at(1).get<std::string>())};
}

json word_json(const Sl2Word& w) {
    json arr = json::array();
    for (const WordStep& s : w) {
        const char* g = s.g == Gen::T ? "T" : s.g == Gen::Tp ? "Tp" : "S";
        arr.push_back(json::array({g, std::to_string(s.k)}));
    }
    return arr;
}

Sl2Word word_from(const json& j) {
    Sl2Word w;
    for (const auto& e : j) {
        const std::string g = e.at(0).get<std::string>();
        Gen gen;
        if (g == "T") gen = Gen::T;
        else if (g == "Tp") gen = Gen::Tp;
        else if (g == "S") gen = Gen::S;
        else throw std::invalid_argument("unknown generator name: " + g);
        w.push_back(WordStep{gen, std::stoll(e.at(1).get<std::string>())});
    }
    return w;
}

json square_check_json(const SquareCheck& c) {
    return json{{"value", int_str(c.value)}, {"square", c.square}, {"root", int_str(c.root)}};
}

SquareCheck square_check_from(const json& j) {
    return SquareCheck{Int(j.at("value").get<std::string>()), j.at("square").get<bool>(),
                       Int(j.at("root").get<std::string>())};
}

GaloisVerdict verdict_from_name(const std::string& name) {
    for (GaloisVerdict v : {GaloisVerdict::GaloisPinching, GaloisVerdict::ReducibleDelta1Square,
                            GaloisVerdict::ReducibleDelta2Square, GaloisVerdict::GaloisOrder4_2a,
                            GaloisVerdict::GaloisOrder4_2b,
                            GaloisVerdict::ComplexOrNonpositiveRoots})
        if (galois_verdict_name(v) == name) return v;
    throw std::invalid_argument("unknown verdict name: " + name);
}

json perm_json(const Perm& p) {
    json arr = json::array();
    for (int im : p.images()) arr.push_back(std::to_string(im));
    return arr;
}

std::vector<int> ints_from(const json& j) {
    std::vector<int> v;
    for (const auto& e : j) v.push_back(std::stoi(e.get<std::string>()));
    return v;
}

bool check(bool ok, const char* message, std::string* why) {
    if (!ok && why) *why = message;
    return ok;
}

} // namespace

const char* aut_trivial_reason_name(AutTrivialReason r) {
    switch (r) {
        case AutTrivialReason::SingleZero: return "SingleZero";
        case AutTrivialReason::CentralizerComputed: return "CentralizerComputed";
    }
    return "?";
}

const char* certify_stage_name(CertifyStage s) {
    switch (s) {
        case CertifyStage::Automorphisms: return "Automorphisms";
        case CertifyStage::GaloisCriterion: return "GaloisCriterion";
        case CertifyStage::DirectionSearch: return "DirectionSearch";
    }
    return "?";
}

ParabolicPair build_parabolics(const Origami& o) {
    ParabolicPair pp;
    const Int cap = std::numeric_limits<long long>::max();
    for (bool horizontal : {true, false}) {
        const CylinderDecomposition cd =
            cylinder_decomposition(o, horizontal ? 1 : 0, horizontal ? 0 : 1);
        Int k = 1;
        for (const Cylinder& c : cd.cylinders) {
            k *= c.width;
            if (k > cap) throw std::domain_error("parabolic twist exponent too large");
        }
        (horizontal ? pp.k_h : pp.k_v) = k.convert_to<long long>();
    }
    pp.twist_h = {{Gen::T, pp.k_h}};
    pp.twist_v = {{Gen::Tp, pp.k_v}};
    if (!(act_word(pp.twist_h, o) == o) || !(act_word(pp.twist_v, o) == o))
        throw std::logic_error("multi-twist word fails to fix the surface");
    return pp;
}

CertifyResult certify_simplicity(const Origami& o, long long direction_bound,
                                 std::size_t orbit_budget) {
    if (!o.stratum().is_h4()) throw NotH4Error{};
    if (!o.is_reduced()) throw NotReducedError{};

    CertifyResult res;

    // Hypothesis 1: trivial automorphism group. A single cone point settles
    // it without any computation; otherwise the centralizer is enumerated.
    AutTrivialReason reason = AutTrivialReason::SingleZero;
    if (!single_zero(o)) {
        if (o.automorphism_group().size() != 1) {
            res.failure = CertifyFailure{CertifyStage::Automorphisms,
                                         "criterion inconclusive: nontrivial automorphisms",
                                         {},
                                         std::nullopt};
            return res;
        }
        reason = AutTrivialReason::CentralizerComputed;
    }

    // Hypothesis 2: a Galois-pinching affine action on the zero-holonomy
    // part, searched over the standard multi-twist products.
    const ParabolicPair pp = build_parabolics(o);
    const Sl2Word vh = {{Gen::Tp, pp.k_v}, {Gen::T, pp.k_h}};   // Tp^{k_v} after T^{k_h}
    const Sl2Word hv = {{Gen::T, pp.k_h}, {Gen::Tp, pp.k_v}};
    std::vector<Sl2Word> words{vh, hv};
    for (int m = 2; m <= 3; ++m) {
        Sl2Word w;
        for (int i = 0; i < m; ++i) w.insert(w.end(), vh.begin(), vh.end());
        words.push_back(std::move(w));
    }

    HomologyModel hom(o);
    std::vector<CandidateReport> reports;
    std::optional<LoopHit> hit;
    for (const Sl2Word& w : words) {
        reports.push_back(analyze_candidate(hom, o, w));
        const CandidateReport& rep = reports.back();
        if (rep.analysis.verdict == GaloisVerdict::GaloisPinching) {
            hit = LoopHit{rep.word, rep.derivative, rep.charpoly, rep.analysis};
            break;
        }
    }
    bool whole_orbit = false;
    if (!hit) hit = orbit_loop_search(o, hom, orbit_budget, &whole_orbit);
    if (!hit) {
        CertifyFailure f;
        f.stage = CertifyStage::GaloisCriterion;
        f.verdict = reports.front().analysis.verdict;
        f.detail = "criterion inconclusive: no candidate word is Galois-pinching (first candidate: " +
                   galois_verdict_name(*f.verdict) + "); " +
                   (whole_orbit ? "the whole shear orbit was searched for pinching loops without success"
                                : "the bounded orbit search found no pinching loop within budget");
        f.candidates = std::move(reports);
        res.failure = std::move(f);
        return res;
    }
    if (hit->derivative.trace() <= 2)
        throw std::logic_error("pinching candidate with non-hyperbolic derivative");

    // Hypothesis 3: a direction whose waist classes span a plane in homology
    // (rank strictly between 1 and the genus, so exactly 2 here).
    std::optional<std::pair<long long, long long>> dir;
    for (const auto& [p, q] : primitive_directions(direction_bound)) {
        if (homological_dimension(o, p, q) == 2) {
            dir = {p, q};
            break;
        }
    }
    if (!dir) {
        std::ostringstream os;
        os << "criterion inconclusive: no primitive direction with |p|,|q| <= "
           << direction_bound << " spans a homology plane";
        res.failure = CertifyFailure{CertifyStage::DirectionSearch, os.str(), {}, std::nullopt};
        return res;
    }

    SimplicityCertificate cert;
    cert.origami = o;
    cert.aut_trivial_reason = reason;
    cert.word_a = hit->word;
    cert.derivative = hit->derivative;
    cert.trace = hit->derivative.trace();
    cert.a = hit->cp[3];
    cert.b = hit->cp[2];
    cert.analysis = hit->analysis;
    cert.dir_p = dir->first;
    cert.dir_q = dir->second;
    cert.direction_dimension = 2;
    cert.direction_cylinders = int(cylinder_decomposition(o, dir->first, dir->second).cylinders.size());
    cert.b_reduced = conjugate_to_b_reduced(cert.derivative);
    res.certificate = std::move(cert);
    return res;
}

UnipotentTwistReport unipotent_twist_report(const IMat& b_h0, const IMat& gram) {
    const int n = b_h0.rows();
    UnipotentTwistReport rep;
    rep.matrix = b_h0;
    IMat nil = b_h0 - IMat::identity(n);
    rep.identity = nil.is_zero();
    rep.image_rank = rank_of(nil);
    IMat pw = IMat::identity(n);
    for (int i = 0; i < n; ++i) pw = pw * nil;
    rep.unipotent = pw.is_zero();
    // Lagrangian image: half-dimensional (g - 1 out of 2g - 2) with the
    // intersection form vanishing identically on it.
    rep.image_lagrangian = rep.image_rank == n / 2 && (nil.transpose() * gram * nil).is_zero();
    rep.passes = rep.unipotent && !rep.identity && !rep.image_lagrangian;
    return rep;
}

UnipotentTwistReport unipotent_twist_check(const Origami& o, const Sl2Word& loop) {
    TransportResult tr = word_transport(loop, o);
    if (!(tr.target == o)) throw NonClosedWordError{};
    HomologyModel hom(o);
    const IMat b0 = hom.restrict_to_h0(hom.induced_on_h1(tr.matrix));
    const IMat gram0 = hom.h0_basis().transpose() * hom.intersection_gram() * hom.h0_basis();
    return unipotent_twist_report(b0, gram0);
}

std::string certificate_to_json(const SimplicityCertificate& c) {
    json j;
    j["format"] = "simplicity-certificate/1";
    j["surface"] = json{{"n", std::to_string(c.origami.n())},
                        {"h", perm_json(c.origami.h())},
                        {"v", perm_json(c.origami.v())}};
    j["aut_trivial_reason"] = aut_trivial_reason_name(c.aut_trivial_reason);
    j["word"] = word_json(c.word_a);
    j["derivative"] = mat2_json(c.derivative);
    j["trace"] = int_str(c.trace);
    j["charpoly"] = json{{"a", int_str(c.a)}, {"b", int_str(c.b)}};
    j["analysis"] = json{{"verdict", galois_verdict_name(c.analysis.verdict)},
                         {"delta1", square_check_json(c.analysis.delta1_check)},
                         {"delta2", square_check_json(c.analysis.delta2_check)},
                         {"delta12", square_check_json(c.analysis.delta12_check)}};
    j["direction"] = json{{"p", std::to_string(c.dir_p)},
                          {"q", std::to_string(c.dir_q)},
                          {"dimension", std::to_string(c.direction_dimension)},
                          {"cylinders", std::to_string(c.direction_cylinders)}};
    json digits = json::array();
    for (const Int& d : c.b_reduced.digits) digits.push_back(int_str(d));
    j["b_reduced"] = json{{"matrix", mat2_json(c.b_reduced.reduced)},
                          {"conjugator", mat2_json(c.b_reduced.conjugator)},
                          {"digits", digits}};
    return j.dump(2) + "\n";
}

SimplicityCertificate certificate_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        if (j.at("format").get<std::string>() != "simplicity-certificate/1")
            throw std::invalid_argument("unknown certificate format");
        SimplicityCertificate c;
        const json& s = j.at("surface");
        c.origami = Origami(Perm(ints_from(s.at("h"))), Perm(ints_from(s.at("v"))));
        if (std::stoi(s.at("n").get<std::string>()) != c.origami.n())
            throw std::invalid_argument("surface size mismatch");
        const std::string reason = j.at("aut_trivial_reason").get<std::string>();
        if (reason == "SingleZero") c.aut_trivial_reason = AutTrivialReason::SingleZero;
        else if (reason == "CentralizerComputed")
            c.aut_trivial_reason = AutTrivialReason::CentralizerComputed;
        else throw std::invalid_argument("unknown automorphism reason: " + reason);
        c.word_a = word_from(j.at("word"));
        c.derivative = mat2_from(j.at("derivative"));
        c.trace = Int(j.at("trace").get<std::string>());
        c.a = Int(j.at("charpoly").at("a").get<std::string>());
        c.b = Int(j.at("charpoly").at("b").get<std::string>());
        const json& an = j.at("analysis");
        c.analysis = QuarticAnalysis{ReciprocalQuartic(c.a, c.b),
                                     verdict_from_name(an.at("verdict").get<std::string>()),
                                     square_check_from(an.at("delta1")),
                                     square_check_from(an.at("delta2")),
                                     square_check_from(an.at("delta12"))};
        const json& d = j.at("direction");
        c.dir_p = std::stoll(d.at("p").get<std::string>());
        c.dir_q = std::stoll(d.at("q").get<std::string>());
        c.direction_dimension = std::stoi(d.at("dimension").get<std::string>());
        c.direction_cylinders = std::stoi(d.at("cylinders").get<std::string>());
        const json& br = j.at("b_reduced");
        c.b_reduced.reduced = mat2_from(br.at("matrix"));
        c.b_reduced.conjugator = mat2_from(br.at("conjugator"));
        for (const auto& e : br.at("digits")) c.b_reduced.digits.push_back(Int(e.get<std::string>()));
        return c;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
    }
}

bool verify_certificate(const SimplicityCertificate& c, std::string* why) {
    const Origami& o = c.origami;
    if (!check(o.stratum().is_h4(), "surface is not in stratum H(4)", why)) return false;
    if (!check(o.is_reduced(), "surface is not reduced", why)) return false;

    const AutTrivialReason expect =
        single_zero(o) ? AutTrivialReason::SingleZero : AutTrivialReason::CentralizerComputed;
    if (!check(c.aut_trivial_reason == expect, "automorphism reason mismatch", why)) return false;
    if (expect == AutTrivialReason::CentralizerComputed &&
        !check(o.automorphism_group().size() == 1, "automorphism group is nontrivial", why))
        return false;

    TransportResult tr = word_transport(c.word_a, o);
    IMat chain_map = tr.matrix;
    if (!(tr.target == o)) {
        // Loops found through the orbit walk close up to the isomorphism with
        // the base surface, which is unique because Aut is trivial.
        const auto iso = tr.target.isomorphism_to(o);
        if (!check(bool(iso), "certified word does not close up on the surface", why))
            return false;
        chain_map = edge_relabel_matrix(*iso) * chain_map;
    }
    if (!check(word_matrix(c.word_a) == c.derivative, "derivative mismatch", why)) return false;
    if (!check(c.derivative.trace() == c.trace, "trace mismatch", why)) return false;
    if (!check(c.trace > 2, "derivative is not hyperbolic", why)) return false;

    HomologyModel hom(o);
    const IMat m0 = hom.restrict_to_h0(hom.induced_on_h1(chain_map));
    const IntPoly cp = charpoly(m0);
    const IntPoly expect_cp{1, c.a, c.b, c.a, 1};
    if (!check(cp == expect_cp, "zero-holonomy charpoly mismatch", why)) return false;

    const QuarticAnalysis qa = quartic_analyze(c.a, c.b);
    if (!check(qa.verdict == GaloisVerdict::GaloisPinching,
               "charpoly is not Galois-pinching", why))
        return false;
    if (!check(qa.verdict == c.analysis.verdict, "verdict mismatch", why)) return false;
    auto same_check = [](const SquareCheck& x, const SquareCheck& y) {
        return x.value == y.value && x.square == y.square && x.root == y.root;
    };
    if (!check(same_check(qa.delta1_check, c.analysis.delta1_check) &&
                   same_check(qa.delta2_check, c.analysis.delta2_check) &&
                   same_check(qa.delta12_check, c.analysis.delta12_check),
               "square-test witness mismatch", why))
        return false;

    if (!check(std::gcd(c.dir_p, c.dir_q) == 1, "direction is not primitive", why)) return false;
    if (!check(c.direction_dimension == 2, "direction dimension is not 2", why)) return false;
    if (!check(homological_dimension(o, c.dir_p, c.dir_q) == 2,
               "direction waists do not span a plane", why))
        return false;
    if (!check(int(cylinder_decomposition(o, c.dir_p, c.dir_q).cylinders.size()) ==
                   c.direction_cylinders,
               "direction cylinder count mismatch", why))
        return false;

    const Mat2& u = c.b_reduced.conjugator;
    if (!check(u.det() == 1, "conjugator is not unimodular", why)) return false;
    if (!check(u * c.derivative * u.inverse_unimodular() == c.b_reduced.reduced,
               "b-reduced conjugation equation fails", why))
        return false;
    const ReducedSL2 rs = b_reduced_toolkit(c.b_reduced.reduced);
    if (!check(rs.b_reduced && rs.digits && *rs.digits == c.b_reduced.digits,
               "b-reduced digit expansion mismatch", why))
        return false;
    return true;
}

} // namespace stsurf
