#pragma once

#include "homology.hpp"
#include "sl2.hpp"

#include <utility>
#include <vector>

namespace stsurf {

// One maximal horizontal cylinder of the direction-normalized surface: a stack
// of width-`width` rows glued along interfaces that carry no singular vertex.
struct Cylinder {
    long long width = 0;
    long long height = 0;
    std::vector<int> squares;   // labels on the normalized surface, sorted
};

struct CylinderDecomposition {
    long long p = 1, q = 0;        // the decomposed direction
    Sl2Word to_horizontal;         // word mapping (p,q) to (1,0)
    Origami normalized;            // surface after applying the word
    std::vector<Cylinder> cylinders;
    std::vector<Chain> waists;     // one waist chain per cylinder, on `normalized`
};

// Decompose the direction (p, q), gcd(p,q)=1, into maximal cylinders by
// shearing the direction horizontal and stacking rows across regular
// interfaces. Cylinder order is by smallest contained square label.
CylinderDecomposition cylinder_decomposition(const Origami& o, long long p, long long q);

// Rank over Q of the span of the waist classes of the direction (p, q).
int homological_dimension(const Origami& o, long long p, long long q);

// Pairing of the ten horizontal separatrices at the single cone point of a
// surface with one five-fold vertex, after normalizing the direction (p, q).
// Even indices 2r are outgoing rays (east, in counterclockwise vertex order),
// odd indices are incoming rays (west); pairing[i] = j with j - i odd.
struct SaddleConfiguration {
    std::vector<int> pairing;   // involution on {0..9}
    Perm sigma5;                // induced permutation of the 5 outgoing rays,
                                // canonical under cyclic conjugation
    int balanced_count = 0;     // connections pairing i with i+5 mod 10
    int cylinder_count = 0;
};

SaddleConfiguration saddle_configuration(const Origami& o, long long p, long long q);

// Lexicographically minimal one-line form of s conjugated by powers of the
// cycle (0 1 ... n-1); quotients out the arbitrary choice of starting ray.
Perm cyclic_conjugation_canonical(const Perm& s);

} // namespace stsurf
