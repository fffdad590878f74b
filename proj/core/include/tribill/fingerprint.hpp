#ifndef TRIBILL_FINGERPRINT_HPP
#define TRIBILL_FINGERPRINT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tribill/real_cyclotomic.hpp"
#include "tribill/signature.hpp"

namespace tribill {

// An angle stored as a rational multiple of pi.
struct AngleRat {
    Rational of_pi;

    AngleRat() = default;
    explicit AngleRat(Rational r) : of_pi(std::move(r)) {}

    friend bool operator==(const AngleRat& a, const AngleRat& b) { return a.of_pi == b.of_pi; }
    friend bool operator!=(const AngleRat& a, const AngleRat& b) { return a.of_pi != b.of_pi; }
    friend bool operator<(const AngleRat& a, const AngleRat& b) { return a.of_pi < b.of_pi; }
};

// Rendered as "p/q·pi" ("0" when zero, "p·pi" when the multiple is integral).
std::string to_string(const AngleRat& a);

enum class FingerprintType { I, II };

// Local picture at a vertex-class point: the distinct angular gaps between
// adjacent shortest geodesics to singular points, the cone angle, and the
// common length of those geodesics (at the surface's scale). Type I has one
// gap value, Type II two.
struct Fingerprint {
    std::vector<AngleRat> angle_set; // sorted, 1 or 2 distinct values
    AngleRat cone_angle;             // multiple of 2*pi
    RealCyclotomic length;
    FingerprintType fp_type = FingerprintType::I;
    std::set<int> shortest_targets;  // vertex classes realizing length
};

// Shortest distance from a point of class i to each singular class that can
// realize the overall minimum, keyed by class. The edge to an adjacent class
// has length scale*sin(a_k*pi/Q) (k the third index); the shortest return to
// the point's own class doubles the altitude, scale*2*sin(a_j*pi/Q)*
// sin(a_k*pi/Q), and exists as a straight geodesic only when both adjacent
// angles are at most pi/2. When one of them is obtuse that corner is itself
// singular and strictly closer, so the own-class entry is omitted.
//
// Punctured classes are removed from the surface and are not valid targets.
// A nonempty puncture set must consist of singular, non-obtuse classes other
// than i, and i must itself be singular; otherwise invalid_puncture. If no
// candidate target remains, no_singular_target.
std::map<int, RealCyclotomic> saddle_distances(
    const TriangleSignature& sig, int i, const std::set<int>& punctured = {},
    const RealCyclotomic& scale = RealCyclotomic::from_rational(Rational(1)));

// Fingerprint of the class-i point. Directions of the shortest geodesics are
// found within one fundamental sector [0, 2*angle(i)) bounded by the two
// edges at v_i: the edge to v_j at direction 0, the edge to v_k at direction
// angle(i), the own-class perpendicular at pi/2 - angle(j). Directions
// achieving the minimum distance are mirrored across the sector bisector,
// reduced mod the sector, and the cyclic gaps between them collected.
// More than two distinct gaps would contradict the gap trichotomy and throws
// trichotomy_violation.
Fingerprint fingerprint(
    const TriangleSignature& sig, int i, const std::set<int>& punctured = {},
    const RealCyclotomic& scale = RealCyclotomic::from_rational(Rational(1)));

// A Type II fingerprint determines its triangle: gaps {th1, th2} come from
// the triangle with angles ((th1+th2)/2, (pi-th1)/2, (pi-th2)/2). Returns
// the canonical signature; invalid_angles when th1 = th2 or any resulting
// angle is not strictly positive.
TriangleSignature reconstruct_from_type2(const AngleRat& th1, const AngleRat& th2);

enum class FingerprintCompat { Compatible, CompatibleWithDoubling, Incompatible };

struct FingerprintComparison {
    FingerprintCompat verdict = FingerprintCompat::Incompatible;
    bool lengths_compared = false;
};

// Compatibility of the local data across a balanced cover pairing: Compatible
// when angle set, cone angle and length all agree; CompatibleWithDoubling
// when the angle sets and lengths agree, the upstairs cone is exactly twice
// the downstairs one, and the upstairs point is the apex of an isosceles
// triangle. Lengths take part only when the two fingerprints were computed
// at construction-consistent scales; otherwise they are skipped and
// lengths_compared reports it.
FingerprintComparison check_cover_fingerprints(const Fingerprint& fx, const Fingerprint& fy,
                                               bool x_isosceles_apex,
                                               bool scales_consistent = true);

} // namespace tribill

#endif
