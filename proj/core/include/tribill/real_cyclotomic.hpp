#ifndef TRIBILL_REAL_CYCLOTOMIC_HPP
#define TRIBILL_REAL_CYCLOTOMIC_HPP

#include "tribill/cyclotomic.hpp"
#include "tribill/rational.hpp"

namespace tribill {

// Real algebraic number presented as a conjugation-fixed cyclotomic element.
// Comparisons are exact: an exact zero test first, and for nonzero values a
// certified interval evaluation refined until it excludes zero.
class RealCyclotomic {
public:
    RealCyclotomic();
    explicit RealCyclotomic(CyclotomicNumber v); // v must equal its conjugate
    static RealCyclotomic from_rational(const Rational& r);

    const CyclotomicNumber& value() const { return value_; }
    long conductor() const { return value_.conductor(); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_rational(Rational* out = nullptr) const { return value_.is_rational(out); }

    int sign() const;
    double to_double() const;

    RealCyclotomic inverse() const;

    RealCyclotomic& operator+=(const RealCyclotomic& o);
    RealCyclotomic& operator-=(const RealCyclotomic& o);
    RealCyclotomic& operator*=(const RealCyclotomic& o);
    RealCyclotomic& operator*=(const Rational& r);

    friend RealCyclotomic operator+(RealCyclotomic a, const RealCyclotomic& b) { return a += b; }
    friend RealCyclotomic operator-(RealCyclotomic a, const RealCyclotomic& b) { return a -= b; }
    friend RealCyclotomic operator*(RealCyclotomic a, const RealCyclotomic& b) { return a *= b; }
    friend RealCyclotomic operator*(RealCyclotomic a, const Rational& r) { return a *= r; }
    friend RealCyclotomic operator*(const Rational& r, RealCyclotomic a) { return a *= r; }
    friend RealCyclotomic operator/(const RealCyclotomic& a, const RealCyclotomic& b) { return a * b.inverse(); }
    friend RealCyclotomic operator-(RealCyclotomic a);

    friend bool operator==(const RealCyclotomic& a, const RealCyclotomic& b) { return a.value_ == b.value_; }
    friend bool operator!=(const RealCyclotomic& a, const RealCyclotomic& b) { return !(a == b); }
    friend bool operator<(const RealCyclotomic& a, const RealCyclotomic& b) { return (a - b).sign() < 0; }
    friend bool operator>(const RealCyclotomic& a, const RealCyclotomic& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const RealCyclotomic& a, const RealCyclotomic& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const RealCyclotomic& a, const RealCyclotomic& b) { return (a - b).sign() >= 0; }

private:
    CyclotomicNumber value_;
};

// cos(r*pi) and sin(r*pi) as exact real cyclotomic values.
RealCyclotomic cos_pi(const Rational& r);
RealCyclotomic sin_pi(const Rational& r);

} // namespace tribill

#endif
