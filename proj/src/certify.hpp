#pragma once

#include "cylinders.hpp"
#include "galois.hpp"
#include "homology.hpp"
#include "origami.hpp"
#include "sl2.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stsurf {

// Preconditions of the certification pipeline, raised as typed errors so
// callers can map them to stable status codes.
struct NotH4Error : std::domain_error {
    NotH4Error() : std::domain_error("surface is not in stratum H(4)") {}
};
struct NotReducedError : std::domain_error {
    NotReducedError() : std::domain_error("surface is not reduced") {}
};
struct NonClosedWordError : std::domain_error {
    NonClosedWordError() : std::domain_error("word does not return to the starting surface") {}
};

// Why the automorphism group is trivial. A surface whose cone points form a
// single orbit point admits no nontrivial automorphism (the quotient by one
// would be a cyclic ramified cover branched over too few points), so for
// single-vertex strata no group computation is needed; otherwise the
// centralizer of the two square permutations is computed explicitly.
enum class AutTrivialReason { SingleZero, CentralizerComputed };

const char* aut_trivial_reason_name(AutTrivialReason r);

// The two multi-twist words fixing every square of o: T^{k_h} and Tp^{k_v},
// where k_h (resp. k_v) is the product of the circumferences of the
// horizontal (resp. vertical) cylinders. Construction verifies by direct
// action that each word fixes the labeled surface exactly.
struct ParabolicPair {
    long long k_h = 0;
    long long k_v = 0;
    Sl2Word twist_h;   // {{T, k_h}}
    Sl2Word twist_v;   // {{Tp, k_v}}
};

// Throws std::domain_error when a circumference product exceeds the word
// exponent range.
ParabolicPair build_parabolics(const Origami& o);

// One affine word examined for a pinching action on the zero-holonomy part.
struct CandidateReport {
    Sl2Word word;            // rightmost step acts first
    Mat2 derivative;         // product of the step matrices
    IntPoly charpoly;        // degree-4 palindromic charpoly on H1^(0)
    QuarticAnalysis analysis;
};

// Everything needed to re-check, from scratch, that the spectrum-simplicity
// criterion applies to the surface: trivial automorphisms, an affine word
// whose action on the zero-holonomy part is Galois-pinching, and a cylinder
// direction whose waist classes span a plane (rank 2, strictly between 1 and
// the genus).
struct SimplicityCertificate {
    Origami origami = Origami(Perm(std::vector<int>{0}), Perm(std::vector<int>{0}));
    AutTrivialReason aut_trivial_reason = AutTrivialReason::SingleZero;
    Sl2Word word_a;                  // certified affine word
    Mat2 derivative;                 // its linear part
    Int trace;                       // derivative trace (> 2)
    Int a, b;                        // charpoly x^4 + a x^3 + b x^2 + a x + 1
    QuarticAnalysis analysis{ReciprocalQuartic{0, 0},
                             GaloisVerdict::ComplexOrNonpositiveRoots,
                             {}, {}, {}};  // verdict GaloisPinching + square-test witnesses
    long long dir_p = 0, dir_q = 0;  // primitive direction with plane-spanning waists
    int direction_dimension = 0;     // rank of the waist classes (= 2)
    int direction_cylinders = 0;     // cylinder count of that direction
    BReducedConjugate b_reduced;     // recorded conjugation of the derivative
                                     // (informational, not part of validity)
};

// Hypotheses in the order they are checked; a failure names the first one
// that could not be established.
enum class CertifyStage { Automorphisms, GaloisCriterion, DirectionSearch };

const char* certify_stage_name(CertifyStage s);

// A structured "criterion inconclusive" outcome. It never claims the
// spectrum is degenerate, only that this pipeline could not certify
// simplicity.
struct CertifyFailure {
    CertifyStage stage = CertifyStage::GaloisCriterion;
    std::string detail;
    // Populated when stage == GaloisCriterion: every candidate examined, in
    // order; `verdict` is the verdict of the first (preferred) candidate.
    std::vector<CandidateReport> candidates;
    std::optional<GaloisVerdict> verdict;
};

struct CertifyResult {
    std::optional<SimplicityCertificate> certificate;
    std::optional<CertifyFailure> failure;
    bool ok() const { return certificate.has_value(); }
};

// Runs the full criterion on a reduced surface in H(4):
//   1. automorphism triviality (single-vertex shortcut);
//   2. candidate affine words Tp^{k_v} T^{k_h}, then T^{k_h} Tp^{k_v}, then
//      (Tp^{k_v} T^{k_h})^m for m = 2, 3, each analyzed through its
//      palindromic charpoly on the zero-holonomy part until one is
//      Galois-pinching;
//   3. when every candidate fails, a bounded deterministic walk of the shear
//      orbit (at most orbit_budget surfaces, breadth-first under unit T / Tp
//      arrows with cached chain transports): each discovered surface
//      contributes its own multi-twist product and each arrow closing into
//      explored territory contributes a based loop, all tested for a
//      Galois-pinching action with hyperbolic derivative;
//   4. search of primitive directions (p, q), |p|, |q| <= direction_bound,
//      ordered by max(|p|,|q|), then |p|+|q|, then p, then |q|, then q, for
//      waist-class rank exactly 2.
// Certified words close up on o exactly or up to the unique isomorphism
// (unique because the automorphism group is trivial).
// Throws NotH4Error / NotReducedError when the preconditions fail.
CertifyResult certify_simplicity(const Origami& o, long long direction_bound = 10,
                                 std::size_t orbit_budget = 1500);

// Analysis of the action B of a closed word on the zero-holonomy part.
// `gram` is the intersection form on the same coordinates.
struct UnipotentTwistReport {
    IMat matrix;                    // B, square of size 2g - 2
    bool unipotent = false;         // (B - I)^{2g-2} = 0
    bool identity = false;
    int image_rank = 0;             // rank of B - I
    bool image_lagrangian = false;  // rank g - 1 and the form vanishes on the image
    bool passes = false;            // unipotent, not identity, image not Lagrangian
};

UnipotentTwistReport unipotent_twist_report(const IMat& b_h0, const IMat& gram);

// Transports `loop` from o back to itself and reports on the induced action.
// Throws NonClosedWordError when the word does not fix o exactly.
UnipotentTwistReport unipotent_twist_check(const Origami& o, const Sl2Word& loop);

// Deterministic JSON encoding of a certificate; every integer is rendered as
// a decimal string so arbitrarily large witnesses survive round-trips.
std::string certificate_to_json(const SimplicityCertificate& c);

// Parses the encoding above; throws std::invalid_argument on malformed input.
SimplicityCertificate certificate_from_json(const std::string& text);

// Recomputes every certified quantity from the embedded surface and compares
// it with the stored fields. On mismatch returns false and, when `why` is
// non-null, stores a description of the first failing check.
bool verify_certificate(const SimplicityCertificate& c, std::string* why = nullptr);

} // namespace stsurf
