#include "tribill/unfolding.hpp"

#include "tribill/errors.hpp"

namespace tribill {

namespace detail {

std::vector<VertexOrbit> traverse_vertex_classes(long Q, const std::array<long, 3>& entries,
                                                 const std::vector<std::array<long, 3>>& glue) {
    const long copies = 2 * Q;
    if (static_cast<long>(glue.size()) != copies)
        throw inconsistent_gluing("gluing table has wrong number of copies");
    for (long c = 0; c < copies; ++c) {
        for (int e = 0; e < 3; ++e) {
            long p = glue[c][e];
            if (p < 0 || p >= copies)
                throw inconsistent_gluing("gluing partner out of range");
            if (p == c || glue[p][e] != c)
                throw inconsistent_gluing("gluing is not a fixed-point-free involution");
        }
    }

    std::vector<VertexOrbit> orbits;
    for (int cls = 1; cls <= 3; ++cls) {
        const int side_a = cls % 3 + 1;       // the two sides adjacent to the vertex
        const int side_b = (cls + 1) % 3 + 1;
        std::vector<char> visited(copies, 0);
        for (long c0 = 0; c0 < copies; ++c0) {
            if (visited[c0]) continue;
            VertexOrbit orbit;
            orbit.cls = cls;
            long c = c0;
            int side = side_a;
            long steps = 0;
            do {
                if (visited[c])
                    throw inconsistent_gluing("corner walk re-enters a consumed corner");
                visited[c] = 1;
                orbit.copies.push_back(c);
                c = glue[c][side - 1];
                side = (side == side_a) ? side_b : side_a;
                if (++steps > copies)
                    throw inconsistent_gluing("corner walk fails to close");
            } while (!(c == c0 && side == side_a));

            long len = static_cast<long>(orbit.copies.size());
            if ((len * entries[cls - 1]) % (2 * Q) != 0)
                throw inconsistent_gluing("corner cycle closes at a fractional turn");
            orbit.cone_turns = len * entries[cls - 1] / (2 * Q);
            if (orbit.cone_turns < 1)
                throw inconsistent_gluing("corner cycle has vanishing cone angle");
            orbits.push_back(std::move(orbit));
        }
    }
    return orbits;
}

} // namespace detail

UnfoldedSurface::UnfoldedSurface(TriangleSignature sig, RealCyclotomic scale)
    : sig_(std::move(sig)), scale_(std::move(scale)),
      holder_(std::make_shared<GeometryHolder>()) {
    const long Q = sig_.Q();
    glue_.resize(2 * Q);
    for (long c = 0; c < 2 * Q; ++c) {
        DihedralElement g = dihedral_from_index(c);
        for (int e = 1; e <= 3; ++e)
            glue_[c][e - 1] = dihedral_index(compose(g, side_reflection(e), Q));
    }
    orbits_ = detail::traverse_vertex_classes(Q, sig_.entries(), glue_);
    for (int cls = 0; cls < 3; ++cls) orbit_index_[cls].assign(2 * Q, -1);
    for (std::size_t i = 0; i < orbits_.size(); ++i)
        for (long c : orbits_[i].copies)
            orbit_index_[orbits_[i].cls - 1][c] = static_cast<long>(i);
}

DihedralElement UnfoldedSurface::side_reflection(int side) const {
    const long Q = sig_.Q();
    switch (side) {
        case 1: return {(Q - sig_.a(2)) % Q, 1};
        case 2: return {sig_.a(1) % Q, 1};
        case 3: return {0, 1};
        default: throw internal_error("side index out of range");
    }
}

EdgeSlot UnfoldedSurface::glued_to(const EdgeSlot& slot) const {
    if (slot.copy < 0 || slot.copy >= num_copies() || slot.side < 1 || slot.side > 3)
        throw internal_error("edge slot out of range");
    return {glue_[slot.copy][slot.side - 1], slot.side};
}

long UnfoldedSurface::orbit_of(long copy, int cls) const {
    if (copy < 0 || copy >= num_copies() || cls < 1 || cls > 3)
        throw internal_error("corner out of range");
    return orbit_index_[cls - 1][copy];
}

long UnfoldedSurface::genus_from_traversal() const {
    const long Q = sig_.Q();
    long chi = static_cast<long>(orbits_.size()) - 3 * Q + 2 * Q;
    if ((2 - chi) % 2 != 0)
        throw inconsistent_gluing("odd Euler characteristic");
    return (2 - chi) / 2;
}

void UnfoldedSurface::ensure_geometry() const {
    Geometry& geom_ = holder_->geom;
    std::call_once(holder_->once, [this, &geom_] {
        const long Q = sig_.Q();
        geom_.cosv.reserve(Q);
        geom_.sinv.reserve(Q);
        for (long k = 0; k < Q; ++k) {
            geom_.cosv.push_back(cos_pi(Rational(2 * k, Q)));
            geom_.sinv.push_back(sin_pi(Rational(2 * k, Q)));
        }
        RealCyclotomic zero;
        geom_.base[0] = Vec2(zero, zero);
        geom_.base[1] = Vec2(scale_ * sin_pi(sig_.angle(3)), zero);
        RealCyclotomic r = scale_ * sin_pi(sig_.angle(2));
        geom_.base[2] = Vec2(r * cos_pi(sig_.angle(1)), r * sin_pi(sig_.angle(1)));

        long fans = 0;
        for (const auto& orbit : orbits_)
            if (orbit.cls == 1) ++fans;
        RealCyclotomic pitch = scale_ * Rational(11, 5);
        geom_.fan_offset.reserve(fans);
        Vec2 at(zero, zero);
        for (long f = 0; f < fans; ++f) {
            geom_.fan_offset.push_back(at);
            at.x += pitch;
        }
    });
}

const std::array<Vec2, 3>& UnfoldedSurface::base_triangle() const {
    ensure_geometry();
    return holder_->geom.base;
}

Vec2 UnfoldedSurface::copy_offset(long copy) const {
    ensure_geometry();
    return holder_->geom.fan_offset[orbit_of(copy, 1)];
}

std::array<Vec2, 3> UnfoldedSurface::copy_vertices(long copy) const {
    ensure_geometry();
    const Geometry& geom = holder_->geom;
    DihedralElement g = element(copy);
    Vec2 offset = geom.fan_offset[orbit_of(copy, 1)];
    const RealCyclotomic& c = geom.cosv[g.k];
    const RealCyclotomic& s = geom.sinv[g.k];
    std::array<Vec2, 3> out;
    for (int i = 0; i < 3; ++i) {
        RealCyclotomic vx = geom.base[i].x;
        RealCyclotomic vy = g.eps ? -geom.base[i].y : geom.base[i].y;
        out[i] = Vec2(c * vx - s * vy, s * vx + c * vy) + offset;
    }
    return out;
}

RealCyclotomic UnfoldedSurface::area() const {
    RealCyclotomic prod = RealCyclotomic::from_rational(Rational(sig_.Q()));
    prod *= scale_;
    prod *= scale_;
    for (int i = 1; i <= 3; ++i) prod *= sin_pi(sig_.angle(i));
    return prod;
}

} // namespace tribill
