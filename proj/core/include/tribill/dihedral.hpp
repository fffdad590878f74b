#ifndef TRIBILL_DIHEDRAL_HPP
#define TRIBILL_DIHEDRAL_HPP

namespace tribill {

// Element of the dihedral group of order 2Q acting linearly on the plane:
// the map is R(2*pi*k/Q) * M^eps with M = diag(1, -1).
struct DihedralElement {
    long k = 0;  // mod Q
    int eps = 0; // 0 or 1

    friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
        return a.k == b.k && a.eps == b.eps;
    }
    friend bool operator!=(const DihedralElement& a, const DihedralElement& b) { return !(a == b); }
};

// Composition of linear maps: (a*b)(x) = a(b(x)).
inline DihedralElement compose(const DihedralElement& a, const DihedralElement& b, long Q) {
    long k = a.eps ? a.k - b.k : a.k + b.k;
    k %= Q;
    if (k < 0) k += Q;
    return {k, a.eps ^ b.eps};
}

inline DihedralElement inverse_of(const DihedralElement& g, long Q) {
    if (g.eps) return g; // reflections are involutions
    return {g.k == 0 ? 0 : Q - g.k, 0};
}

// Enumeration of the 2Q elements as 2k + eps.
inline long dihedral_index(const DihedralElement& g) { return 2 * g.k + g.eps; }
inline DihedralElement dihedral_from_index(long idx) { return {idx / 2, static_cast<int>(idx % 2)}; }

} // namespace tribill

#endif
