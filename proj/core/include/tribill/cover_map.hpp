#pragma once

#include <array>
#include <vector>

#include "tribill/dihedral.hpp"
#include "tribill/lemma_covers.hpp"
#include "tribill/unfolding.hpp"

namespace tribill {

// Triangle-level realization of one family cover.  Each copy of the source
// unfolding is cut along the altitude through the apex into two halves;
// half h of copy c (the one containing base vertex base_index[h]) is
// carried onto target copy half_image[c][h] by the linear map copy_frame[c]
// (composed with the mirror for the half on the reflected side) plus a
// translation.  All members are plain data so tests can corrupt them and
// watch verify_map fail.
struct CoverCorrespondence {
    CoverDescriptor descriptor;
    CoverKind side = CoverKind::F1;  // which leg template was used
    bool inverted = false;           // descriptor runs opposite to the construction
    long a1 = 0, a2 = 0;
    UnfoldedSurface x;  // source unfolding at the tiling scale
    UnfoldedSurface y;  // target unfolding at scale 1
    int apex_index = 3;
    std::array<int, 2> base_index{1, 2};
    int seed_flip = 0;  // 1 when base_index[0] sits on the mirrored side
    std::vector<std::array<long, 2>> half_image;
    std::vector<DihedralElement> copy_frame;
};

// Builds the explicit map for one leg of the family (1 or 2), in the
// construction direction (member onto the right-triangle unfolding).
CoverCorrespondence construct_family_map(const CoverFamily& fam, int leg);

// Recovers the family from the descriptor and builds its map.  Accepts F1,
// F2 and Equivalence descriptors (either direction for the latter); a
// Composition must be built one leg at a time.
CoverCorrespondence construct_lemma7_map(const CoverDescriptor& desc);

// Structural check of a correspondence: fiber counts, edge-by-edge
// commutation with the two gluings, exact half-by-half geometry, and
// congruence of the source triangle with the doubled template.
bool verify_map(const CoverCorrespondence& corr);

// Reads the ramification profile off the realized map, orbit by orbit, in
// the direction of corr.descriptor.  Class indices refer to canonical
// positions.  Throws map_inconsistent if incidences of one source orbit do
// not land on a single target orbit or totals fail Riemann-Hurwitz.
std::vector<RamificationEntry> ramification_from_map(const CoverCorrespondence& corr);

// Profile of the degree-2 composition: odd-leg cover followed by the
// inverse of the even-leg bijection, computed point-level through the
// shared target surface.
std::vector<RamificationEntry> composed_ramification(const CoverCorrespondence& odd_leg,
                                                     const CoverCorrespondence& even_leg);

}  // namespace tribill
