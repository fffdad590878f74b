#ifndef TRIBILL_CYCLOTOMIC_HPP
#define TRIBILL_CYCLOTOMIC_HPP

#include <complex>
#include <vector>

#include "tribill/numtheory.hpp"
#include "tribill/rational.hpp"

namespace tribill {

// Element of the cyclotomic field of conductor n, stored as rational
// coordinates over the power basis 1, z, ..., z^(phi(n)-1) where z is the
// primitive n-th root of unity exp(2*pi*i/n), reduced modulo the n-th
// cyclotomic polynomial.
//
// Conductors congruent to 2 mod 4 are never stored: Q(zeta_2m) = Q(zeta_m)
// for odd m, and construction rewrites such roots into the odd conductor.
// With that convention the lcm of two stored conductors is again storable,
// so mixed-conductor arithmetic lifts both operands to the lcm.
class CyclotomicNumber {
public:
    CyclotomicNumber(); // zero, conductor 1

    CyclotomicNumber(long conductor, std::vector<Rational> coeffs);

    static CyclotomicNumber from_rational(const Rational& r);
    // zeta_order^k, stored at the normalized conductor.
    static CyclotomicNumber root_of_unity(long order, long k);

    long conductor() const { return n_; }
    long degree() const { return static_cast<long>(coeffs_.size()); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational(Rational* value = nullptr) const;

    // Rewrite over conductor m; m must be a multiple of the current
    // conductor and not congruent to 2 mod 4.
    CyclotomicNumber lifted_to(long m) const;

    CyclotomicNumber conjugate() const; // z -> z^(-1)
    CyclotomicNumber inverse() const;   // throws domain_error on zero

    std::complex<double> to_complex_double() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& r);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& r) { return a *= r; }
    friend CyclotomicNumber operator*(const Rational& r, CyclotomicNumber a) { return a *= r; }
    friend CyclotomicNumber operator-(CyclotomicNumber a);

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

private:
    long n_;
    std::vector<Rational> coeffs_;
};

long normalized_conductor(long n);
long lcm_conductor(long a, long b);

} // namespace tribill

#endif
