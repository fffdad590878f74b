#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tribill/real_cyclotomic.hpp"
#include "tribill/signature.hpp"

namespace tribill {

// How a cover between two billiard surfaces arises.
//
//   F1, F2       doubling one leg of the right triangle (s, a1, a2); the
//                source is the unfolding of an isosceles triangle
//   Composition  odd-leg double cover followed by the inverse of the
//                even-leg bijection, connecting the two isosceles surfaces
//   Equivalence  degree-1 translation equivalence between the unfoldings of
//                (a, a, b) and (2a, b, 2a+b), b odd
enum class CoverKind { F1, F2, Composition, Equivalence };

std::string to_string(CoverKind kind);

// One line of a ramification profile: `count` cone points of the source
// class map with local multiplicity `multiplicity` to the target class.
// `target_class` 0 means the image is a nonsingular point.
struct RamificationEntry {
    int source_class = 0;
    int target_class = 0;
    long multiplicity = 1;
    long count = 0;

    friend bool operator==(const RamificationEntry&, const RamificationEntry&) = default;
    bool operator<(const RamificationEntry& o) const;
};

// A candidate or verified translation cover.  Class indices in the profile
// refer to vertex positions of `source` and `target` as stored here; the
// family and search routines always store canonical signatures.
struct CoverDescriptor {
    TriangleSignature source{1, 1, 1};
    TriangleSignature target{1, 1, 1};
    long degree = 1;
    CoverKind kind = CoverKind::F1;
    bool balanced = true;
    std::vector<RamificationEntry> ramification_profile;
};

bool profile_balanced(const std::vector<RamificationEntry>& profile);

std::string to_string(const RamificationEntry& entry);
std::string to_string(const CoverDescriptor& desc);

// One member of the doubling family over Y = X(s, a1, a2).  `sig` keeps the
// construction entry order (apex and base positions matter for the explicit
// map); `sigma` is the scale at which the unfolding tiles exactly over the
// unit-scale unfolding of Y.  When `j_quarter_turn` is set the tiling
// realizes the unfolding rotated by a quarter turn, which must be undone
// before comparing J-invariants.
struct FamilyCover {
    TriangleSignature sig{1, 1, 1};
    long degree = 1;
    int apex_index = 3;
    RealCyclotomic sigma;
    bool j_quarter_turn = false;
};

struct CoverFamily {
    long a1 = 0;
    long a2 = 0;
    TriangleSignature y{1, 1, 1};
    FamilyCover x1;
    FamilyCover x2;
    // Present when exactly one leg is even: the odd-leg double cover
    // composed with the inverse of the even-leg bijection.
    std::optional<CoverDescriptor> composition;
    // a1 == a2 == 1: every surface involved is the same torus.
    bool degenerate = false;
};

// The two-parameter family of covers of the right-triangle unfolding
// X(a1+a2, a1, a2), indexed by coprime legs.  X_i doubles leg i: degree 2
// when a_i is odd, degree 1 (a translation equivalence) when a_i is even.
CoverFamily lemma7_family(long a1, long a2);

// The unfolding of (a, a, b) with b odd is translation equivalent to the
// unfolding of (2a, b, 2a+b).  Returns the canonical partner signature, or
// nullopt when the pattern does not apply.
std::optional<TriangleSignature> doubling_partner(const TriangleSignature& sig);

bool translation_equivalent(const TriangleSignature& a, const TriangleSignature& b);

// Degrees n >= 1 not excluded by Riemann-Hurwitz together with counting
// cone points: n = 1 needs equal genus and equal mass, n >= 2 needs
// (2gA-2) - n(2gB-2) >= 0 and mass(A) >= n * mass(B).  The target must have
// genus at least 2, otherwise the set would be infinite.
std::vector<long> feasible_degrees(const TriangleSignature& a, const TriangleSignature& b);

// All ways to match the singular classes of `a` onto singular classes of
// `b` (or onto nonsingular points) consistent with cone angle divisibility,
// fiber counting over each target class, and the exact Riemann-Hurwitz
// ramification total for degree n.  Entries are grouped by source class;
// profiles come out in a deterministic order.  Throws if n is not feasible.
std::vector<std::vector<RamificationEntry>>
class_matching(const TriangleSignature& a, const TriangleSignature& b, long n);

}  // namespace tribill
