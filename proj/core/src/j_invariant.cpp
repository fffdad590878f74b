#include "tribill/j_invariant.hpp"

#include "tribill/cyclotomic.hpp"
#include "tribill/errors.hpp"
#include "tribill/numtheory.hpp"

namespace tribill {

namespace {

// Coefficient vector of one coordinate at the target conductor.
std::vector<Rational> coords_at(const RealCyclotomic& v, long conductor) {
    return v.value().lifted_to(conductor).coefficients();
}

} // namespace

JInvariant::JInvariant(long conductor)
    : conductor_(normalized_conductor(conductor)),
      dim_(euler_phi(conductor_)),
      entries_(static_cast<std::size_t>(2 * dim_) * (2 * dim_), Rational(0)) {}

JInvariant::JInvariant(long conductor, std::vector<Rational> entries) : JInvariant(conductor) {
    if (entries.size() != entries_.size())
        throw domain_error("wedge matrix has the wrong size for its conductor");
    entries_ = std::move(entries);
    for (long r = 0; r < 2 * dim_; ++r)
        for (long c = 0; c <= r; ++c)
            if (at(r, c) != -at(c, r)) throw domain_error("wedge matrix must be antisymmetric");
}

bool JInvariant::is_zero() const {
    for (const Rational& e : entries_)
        if (e != 0) return false;
    return true;
}

JInvariant JInvariant::lifted_to(long m) const {
    m = normalized_conductor(m);
    if (m == conductor_) return *this;
    // columns of the basis-lift matrix: image of each power-basis element
    std::vector<std::vector<Rational>> lift(dim_);
    for (long a = 0; a < dim_; ++a) {
        std::vector<Rational> unit(dim_, Rational(0));
        unit[a] = 1;
        lift[a] = CyclotomicNumber(conductor_, std::move(unit)).lifted_to(m).coefficients();
    }
    long dm = euler_phi(m);
    JInvariant out(m);
    // out = L * M * L^T with L = blockdiag(lift, lift)
    auto block = [&](long r) { return r < dim_ ? 0L : 1L; };
    auto inner = [&](long r) { return r < dim_ ? r : r - dim_; };
    for (long r = 0; r < 2 * dim_; ++r)
        for (long c = 0; c < 2 * dim_; ++c) {
            const Rational& v = at(r, c);
            if (v == 0) continue;
            const auto& lr = lift[inner(r)];
            const auto& lc = lift[inner(c)];
            long ro = block(r) * dm, co = block(c) * dm;
            for (long i = 0; i < dm; ++i) {
                if (lr[i] == 0) continue;
                Rational vi = v * lr[i];
                for (long j = 0; j < dm; ++j) {
                    if (lc[j] == 0) continue;
                    out.entries_[(ro + i) * 2 * dm + (co + j)] += vi * lc[j];
                }
            }
        }
    return out;
}

JInvariant JInvariant::quarter_turned() const {
    // (x, y) -> (-y, x) swaps the coordinate blocks with one sign flip
    JInvariant out(conductor_);
    auto mate = [&](long r) { return r < dim_ ? r + dim_ : r - dim_; };
    auto sgn = [&](long r) { return r < dim_ ? -1 : 1; };
    for (long r = 0; r < 2 * dim_; ++r)
        for (long c = 0; c < 2 * dim_; ++c) {
            const Rational& v = at(mate(r), mate(c));
            if (v == 0) continue;
            out.entries_[r * 2 * dim_ + c] = sgn(r) * sgn(c) * v;
        }
    return out;
}

void JInvariant::add_wedge(const Vec2& u, const Vec2& w, int sign) {
    std::vector<Rational> U = coords_at(u.x, conductor_);
    std::vector<Rational> Uy = coords_at(u.y, conductor_);
    U.insert(U.end(), Uy.begin(), Uy.end());
    std::vector<Rational> W = coords_at(w.x, conductor_);
    std::vector<Rational> Wy = coords_at(w.y, conductor_);
    W.insert(W.end(), Wy.begin(), Wy.end());
    for (long r = 0; r < 2 * dim_; ++r) {
        if (U[r] == 0 && W[r] == 0) continue;
        for (long c = 0; c < 2 * dim_; ++c) {
            Rational v = U[r] * W[c] - W[r] * U[c];
            if (v == 0) continue;
            if (sign < 0) v = -v;
            entries_[r * 2 * dim_ + c] += v;
        }
    }
}

JInvariant& JInvariant::operator+=(const JInvariant& o) {
    long m = lcm_conductor(conductor_, o.conductor_);
    if (m != conductor_) *this = lifted_to(m);
    JInvariant rhs = o.conductor_ == m ? o : o.lifted_to(m);
    for (std::size_t t = 0; t < entries_.size(); ++t) entries_[t] += rhs.entries_[t];
    return *this;
}

JInvariant& JInvariant::operator*=(const Rational& c) {
    for (Rational& e : entries_) e *= c;
    return *this;
}

bool operator==(const JInvariant& a, const JInvariant& b) {
    long m = lcm_conductor(a.conductor_, b.conductor_);
    if (a.conductor_ != m || b.conductor_ != m) return a.lifted_to(m) == b.lifted_to(m);
    return a.entries_ == b.entries_;
}

namespace {

long common_conductor(const std::vector<Vec2>& vertices) {
    long m = 1;
    for (const Vec2& v : vertices) {
        m = lcm_conductor(m, v.x.conductor());
        m = lcm_conductor(m, v.y.conductor());
    }
    return m;
}

} // namespace

JInvariant j_of_polygon(const std::vector<Vec2>& vertices) {
    JInvariant out(common_conductor(vertices));
    for (std::size_t t = 0; t < vertices.size(); ++t)
        out.add_wedge(vertices[t], vertices[(t + 1) % vertices.size()]);
    return out;
}

JInvariant j_invariant(const UnfoldedSurface& surface) {
    const auto& base = surface.base_triangle();
    Vec2 e1 = base[1] - base[0];
    Vec2 e2 = base[2] - base[0];
    long m = lcm_conductor(lcm_conductor(e1.x.conductor(), e1.y.conductor()),
                           lcm_conductor(e2.x.conductor(), e2.y.conductor()));
    m = lcm_conductor(m, normalized_conductor(4 * surface.Q()));
    JInvariant out(m);
    for (long c = 0; c < surface.num_copies(); ++c) {
        auto verts = surface.copy_vertices(c);
        int sign = surface.element(c).eps ? -1 : 1;
        out.add_wedge(verts[1] - verts[0], verts[2] - verts[0], sign);
    }
    return out;
}

JInvariant j_invariant(const TriangleSignature& sig, const RealCyclotomic& scale) {
    return j_invariant(UnfoldedSurface(sig, scale));
}

bool j_compare(const JInvariant& JX, const JInvariant& JY, const Rational& n) {
    JInvariant scaled = JY;
    scaled *= n;
    return JX == scaled;
}

} // namespace tribill
