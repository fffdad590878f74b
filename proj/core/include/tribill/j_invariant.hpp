#ifndef TRIBILL_J_INVARIANT_HPP
#define TRIBILL_J_INVARIANT_HPP

#include <vector>

#include "tribill/signature.hpp"
#include "tribill/unfolding.hpp"
#include "tribill/vec2.hpp"

namespace tribill {

// Element of R^2 wedge R^2 taken over Q: an antisymmetric 2d x 2d rational
// matrix, d = phi(conductor), in the basis (x tensor power-basis, y tensor
// power-basis). Comparisons and sums lift both operands to the lcm of their
// conductors first.
class JInvariant {
public:
    JInvariant() : JInvariant(1) {}
    explicit JInvariant(long conductor);
    JInvariant(long conductor, std::vector<Rational> entries);

    long conductor() const { return conductor_; }
    long dimension() const { return dim_; } // d; matrix is 2d x 2d
    const Rational& at(long r, long c) const { return entries_[r * 2 * dim_ + c]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;
    JInvariant lifted_to(long m) const;

    // Conjugate by a quarter-turn rotation of the plane. The two rotation
    // directions agree here (they differ by a half turn, which acts
    // trivially), so this is an involution.
    JInvariant quarter_turned() const;

    // Accumulate u wedge w. The vectors are lifted into this conductor.
    void add_wedge(const Vec2& u, const Vec2& w, int sign = 1);

    JInvariant& operator+=(const JInvariant& o);
    JInvariant& operator*=(const Rational& c);
    friend JInvariant operator+(JInvariant a, const JInvariant& b) { return a += b; }
    friend JInvariant operator*(const Rational& c, JInvariant j) { return j *= c; }

    friend bool operator==(const JInvariant& a, const JInvariant& b);
    friend bool operator!=(const JInvariant& a, const JInvariant& b) { return !(a == b); }

private:
    long conductor_ = 1;
    long dim_ = 1;
    std::vector<Rational> entries_; // row-major (2d)^2
};

// Sum of consecutive-vertex wedges of one closed polygon (counterclockwise
// vertex order gives the standard sign). Translating the polygon leaves the
// result unchanged.
JInvariant j_of_polygon(const std::vector<Vec2>& vertices);

// Sum over the triangle copies of the unfolding: each copy contributes the
// wedge of its two edge vectors out of v1, negated on reflected copies so
// every contribution is that of a counterclockwise polygon.
JInvariant j_invariant(const TriangleSignature& sig,
                       const RealCyclotomic& scale = RealCyclotomic::from_rational(Rational(1)));
JInvariant j_invariant(const UnfoldedSurface& surface);

// JX == n * JY after lifting to a common conductor.
bool j_compare(const JInvariant& JX, const JInvariant& JY, const Rational& n);

} // namespace tribill

#endif
