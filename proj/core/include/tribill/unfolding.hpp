#ifndef TRIBILL_UNFOLDING_HPP
#define TRIBILL_UNFOLDING_HPP

#include <array>
#include <memory>
#include <mutex>
#include <vector>

#include "tribill/dihedral.hpp"
#include "tribill/signature.hpp"
#include "tribill/vec2.hpp"

namespace tribill {

// One edge of one triangle copy. Side s_i is the side opposite vertex v_i,
// so the sides adjacent to v1 are s2 and s3.
struct EdgeSlot {
    long copy = 0; // dihedral index, 0 .. 2Q-1
    int side = 0;  // 1..3

    friend bool operator==(const EdgeSlot& a, const EdgeSlot& b) {
        return a.copy == b.copy && a.side == b.side;
    }
    friend bool operator!=(const EdgeSlot& a, const EdgeSlot& b) { return !(a == b); }
};

// Cycle of triangle corners around one surface point.
struct VertexOrbit {
    int cls = 0;        // triangle vertex the corners sit at, 1..3
    long cone_turns = 0; // cone angle is 2*pi*cone_turns
    std::vector<long> copies; // copies in walk order, each corner once
};

// The translation surface obtained by developing 2Q reflected copies of the
// triangle. Copy c carries the linear map dihedral_from_index(c); gluings
// identify (g, e) with (g * rho_e, e) where rho_e reflects across the line
// through the origin parallel to side e. Those identifications differ by
// translations, which is what makes the glued surface a translation surface.
//
// Combinatorics (gluing table, vertex orbits) is built eagerly; coordinates
// are built on first use so purely combinatorial work never touches the
// field arithmetic.
class UnfoldedSurface {
public:
    explicit UnfoldedSurface(TriangleSignature sig,
                             RealCyclotomic scale = RealCyclotomic::from_rational(Rational(1)));

    const TriangleSignature& signature() const { return sig_; }
    const RealCyclotomic& scale() const { return scale_; }
    long Q() const { return sig_.Q(); }
    long num_copies() const { return 2 * sig_.Q(); }

    DihedralElement element(long copy) const { return dihedral_from_index(copy); }
    DihedralElement side_reflection(int side) const;
    EdgeSlot glued_to(const EdgeSlot& slot) const;

    const std::vector<VertexOrbit>& vertex_orbits() const { return orbits_; }
    // Orbit (index into vertex_orbits) containing the given corner.
    long orbit_of(long copy, int cls) const;
    long genus_from_traversal() const;

    // --- geometry, built lazily ---

    // Base triangle: v1 at the origin, v2 on the positive x axis,
    // side opposite v_i of length scale * sin(a_i * pi / Q).
    const std::array<Vec2, 3>& base_triangle() const;
    // Placed vertices of one copy: the copy's linear map applied to the base
    // triangle, translated so that distinct v1-class surface points sit in
    // distinct fans along the x axis. Within a fan, gluings across the sides
    // through v1 share their segment exactly.
    std::array<Vec2, 3> copy_vertices(long copy) const;
    // Fan (v1-orbit) offset applied to the copy.
    Vec2 copy_offset(long copy) const;

    RealCyclotomic area() const;

private:
    void ensure_geometry() const;

    TriangleSignature sig_;
    RealCyclotomic scale_;
    std::vector<std::array<long, 3>> glue_; // glue_[copy][side-1] = partner copy
    std::vector<VertexOrbit> orbits_;
    std::array<std::vector<long>, 3> orbit_index_; // per class, copy -> orbit

    struct Geometry {
        std::vector<RealCyclotomic> cosv, sinv; // of 2*pi*k/Q, k in [0, Q)
        std::array<Vec2, 3> base;
        std::vector<Vec2> fan_offset; // per v1-orbit
    };
    // Shared so surfaces stay copyable; copies see the same immutable geometry.
    struct GeometryHolder {
        std::once_flag once;
        Geometry geom;
    };
    mutable std::shared_ptr<GeometryHolder> holder_;
};

namespace detail {

// Corner walk over an explicit gluing table. Exposed so structural checks
// can be exercised on corrupted tables; throws inconsistent_gluing when the
// table is not a fixed-point-free involution per side or a corner cycle does
// not close up to a whole number of turns.
std::vector<VertexOrbit> traverse_vertex_classes(long Q, const std::array<long, 3>& entries,
                                                 const std::vector<std::array<long, 3>>& glue);

} // namespace detail

} // namespace tribill

#endif
