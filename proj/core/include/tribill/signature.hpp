#ifndef TRIBILL_SIGNATURE_HPP
#define TRIBILL_SIGNATURE_HPP

#include <array>
#include <string>
#include <vector>

#include "tribill/rational.hpp"

namespace tribill {

// One vertex class of the unfolded surface.
struct VertexClassSummary {
    int index = 0;        // which triangle vertex, 1..3
    long a = 0;           // signature entry at that vertex
    long size = 0;        // number of surface points in the class, gcd(a, Q)
    long cone_turns = 0;  // cone angle of each point is 2*pi*cone_turns
    bool singular = false;
};

// Triangle with angles (a1/Q, a2/Q, a3/Q) * pi where Q = a1 + a2 + a3.
// The constructor divides out the overall gcd, so entries are coprime.
// Entry order is meaningful (it fixes the vertex labelling) and is kept;
// canonical() sorts ascending for use as a dictionary key.
class TriangleSignature {
public:
    TriangleSignature(long a1, long a2, long a3);

    long a(int i) const; // i in 1..3
    const std::array<long, 3>& entries() const { return a_; }
    long Q() const { return q_; }
    Rational angle(int i) const { return make_rational(a(i), q_); } // multiple of pi

    VertexClassSummary vertex_class(int i) const;
    std::array<VertexClassSummary, 3> vertex_classes() const;

    long genus() const;
    long num_singular_classes() const;
    long num_singular_points() const;
    // Sum of size * cone_turns over singular classes; equals the sum of the
    // corresponding signature entries, and exceeds 2g - 2 by the number of
    // singular points.
    long mass() const;

    bool has_right_angle(int* where = nullptr) const;
    // Vertices whose two adjacent sides have equal length, i.e. the other two
    // entries agree. Equilateral triangles list all three.
    std::vector<int> isosceles_apexes() const;

    TriangleSignature canonical() const;
    bool is_canonical() const;

    friend bool operator==(const TriangleSignature& x, const TriangleSignature& y) { return x.a_ == y.a_; }
    friend bool operator!=(const TriangleSignature& x, const TriangleSignature& y) { return !(x == y); }
    friend bool operator<(const TriangleSignature& x, const TriangleSignature& y) { return x.a_ < y.a_; }

private:
    std::array<long, 3> a_;
    long q_;
};

// "X(a1,a2,a3)", the unfolded surface's label.
std::string to_string(const TriangleSignature& sig);

// All canonical signatures with Q <= q_max, ordered by (Q, a1, a2).
std::vector<TriangleSignature> canonical_signatures_up_to(long q_max);

} // namespace tribill

#endif
