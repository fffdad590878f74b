#ifndef TRIBILL_HOLONOMY_HPP
#define TRIBILL_HOLONOMY_HPP

#include "tribill/signature.hpp"

namespace tribill {

// Identifies the trace field Q(zeta_Q + zeta_Q^{-1}) by the normalized
// conductor of Q. Two of these fields coincide exactly when the ids are
// equal.
struct HolonomyFieldId {
    long conductor; // normalized, never 2 mod 4
    long degree;    // phi(conductor)/2, at least 1

    friend bool operator==(const HolonomyFieldId& a, const HolonomyFieldId& b) {
        return a.conductor == b.conductor;
    }
    friend bool operator!=(const HolonomyFieldId& a, const HolonomyFieldId& b) {
        return !(a == b);
    }
};

HolonomyFieldId holonomy_field(const TriangleSignature& sig);

// Two routes to the same relation: same_holonomy compares normalized
// conductors, q_compatible applies the direct rule (equal, or the smaller
// odd and the larger twice it). Both require arguments >= 3.
bool same_holonomy(long qx, long qy);
bool q_compatible(long qx, long qy);

// Third route via ramification bookkeeping: the maximal real subfields of
// the m-th and n-th cyclotomic fields coincide exactly when the odd prime
// supports agree, 4 divides both or neither, and the totients match.
bool real_subfield_oracle(long m, long n);

} // namespace tribill

#endif
