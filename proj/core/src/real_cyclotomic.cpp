#include "tribill/real_cyclotomic.hpp"

#include <mpfr.h>

#include "tribill/errors.hpp"

namespace tribill {

namespace {

struct MpfrFloat {
    mpfr_t x;
    explicit MpfrFloat(mpfr_prec_t prec) { mpfr_init2(x, prec); }
    ~MpfrFloat() { mpfr_clear(x); }
    MpfrFloat(const MpfrFloat&) = delete;
    MpfrFloat& operator=(const MpfrFloat&) = delete;
};

// Enclose sum_j c_j * cos(2*pi*j/n) in [lo, hi] using directed rounding.
// cos has Lipschitz constant 1, so cos of the angle interval is contained in
// cos(angle_lo) +- interval_width.
void eval_interval(const CyclotomicNumber& v, mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
    const long n = v.conductor();
    MpfrFloat pi_lo(prec), pi_hi(prec);
    mpfr_const_pi(pi_lo.x, MPFR_RNDD);
    mpfr_const_pi(pi_hi.x, MPFR_RNDU);

    mpfr_set_zero(lo, 1);
    mpfr_set_zero(hi, 1);

    MpfrFloat a_lo(prec), a_hi(prec), w(prec), c_lo(prec), c_hi(prec), t(prec);
    const auto& coeffs = v.coefficients();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const Rational& c = coeffs[j];
        if (c == 0) continue;
        if (j == 0) {
            mpfr_add_q(lo, lo, c.get_mpq_t(), MPFR_RNDD);
            mpfr_add_q(hi, hi, c.get_mpq_t(), MPFR_RNDU);
            continue;
        }
        mpfr_mul_si(a_lo.x, pi_lo.x, 2 * static_cast<long>(j), MPFR_RNDD);
        mpfr_div_si(a_lo.x, a_lo.x, n, MPFR_RNDD);
        mpfr_mul_si(a_hi.x, pi_hi.x, 2 * static_cast<long>(j), MPFR_RNDU);
        mpfr_div_si(a_hi.x, a_hi.x, n, MPFR_RNDU);
        mpfr_sub(w.x, a_hi.x, a_lo.x, MPFR_RNDU);

        mpfr_cos(c_lo.x, a_lo.x, MPFR_RNDD);
        mpfr_sub(c_lo.x, c_lo.x, w.x, MPFR_RNDD);
        mpfr_cos(c_hi.x, a_lo.x, MPFR_RNDU);
        mpfr_add(c_hi.x, c_hi.x, w.x, MPFR_RNDU);

        if (c > 0) {
            mpfr_mul_q(t.x, c_lo.x, c.get_mpq_t(), MPFR_RNDD);
            mpfr_add(lo, lo, t.x, MPFR_RNDD);
            mpfr_mul_q(t.x, c_hi.x, c.get_mpq_t(), MPFR_RNDU);
            mpfr_add(hi, hi, t.x, MPFR_RNDU);
        } else {
            mpfr_mul_q(t.x, c_hi.x, c.get_mpq_t(), MPFR_RNDD);
            mpfr_add(lo, lo, t.x, MPFR_RNDD);
            mpfr_mul_q(t.x, c_lo.x, c.get_mpq_t(), MPFR_RNDU);
            mpfr_add(hi, hi, t.x, MPFR_RNDU);
        }
    }
}

} // namespace

RealCyclotomic::RealCyclotomic() : value_() {}

RealCyclotomic::RealCyclotomic(CyclotomicNumber v) : value_(std::move(v)) {
    if (value_ != value_.conjugate())
        throw internal_error("value is not fixed by conjugation");
}

RealCyclotomic RealCyclotomic::from_rational(const Rational& r) {
    return RealCyclotomic(CyclotomicNumber::from_rational(r));
}

int RealCyclotomic::sign() const {
    Rational r;
    if (value_.is_rational(&r)) return sgn(r);
    for (mpfr_prec_t prec = 64; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
        MpfrFloat lo(prec), hi(prec);
        eval_interval(value_, prec, lo.x, hi.x);
        if (mpfr_sgn(lo.x) > 0) return 1;
        if (mpfr_sgn(hi.x) < 0) return -1;
    }
    throw internal_error("sign refinement exceeded precision cap");
}

double RealCyclotomic::to_double() const {
    MpfrFloat lo(192), hi(192), mid(192);
    eval_interval(value_, 192, lo.x, hi.x);
    mpfr_add(mid.x, lo.x, hi.x, MPFR_RNDN);
    mpfr_div_si(mid.x, mid.x, 2, MPFR_RNDN);
    return mpfr_get_d(mid.x, MPFR_RNDN);
}

RealCyclotomic RealCyclotomic::inverse() const {
    if (is_zero()) throw domain_error("division by zero");
    return RealCyclotomic(value_.inverse());
}

RealCyclotomic& RealCyclotomic::operator+=(const RealCyclotomic& o) {
    value_ += o.value_;
    return *this;
}

RealCyclotomic& RealCyclotomic::operator-=(const RealCyclotomic& o) {
    value_ -= o.value_;
    return *this;
}

RealCyclotomic& RealCyclotomic::operator*=(const RealCyclotomic& o) {
    value_ *= o.value_;
    return *this;
}

RealCyclotomic& RealCyclotomic::operator*=(const Rational& r) {
    value_ *= r;
    return *this;
}

RealCyclotomic operator-(RealCyclotomic a) {
    a.value_ = -std::move(a.value_);
    return a;
}

RealCyclotomic cos_pi(const Rational& r) {
    long p = to_long(r.get_num());
    long q = to_long(r.get_den());
    CyclotomicNumber z = CyclotomicNumber::root_of_unity(2 * q, p);
    CyclotomicNumber v = (z + z.conjugate()) * Rational(1, 2);
    return RealCyclotomic(std::move(v));
}

RealCyclotomic sin_pi(const Rational& r) {
    return cos_pi(Rational(1, 2) - r);
}

} // namespace tribill
