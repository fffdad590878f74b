#ifndef TRIBILL_RATIONAL_HPP
#define TRIBILL_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tribill/errors.hpp"

namespace tribill {

// Exact arithmetic throughout the library rides on GMP.  mpq_class keeps
// every value canonical (reduced, positive denominator), which is exactly
// the invariant we need, so Rational is an alias rather than a wrapper.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical fraction string: "3/4", "-1/2", integers as "5".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw domain_error("unparsable rational: " + s);
    r.canonicalize();
    return r;
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw domain_error("integer out of range");
    return z.get_si();
}

} // namespace tribill

#endif
