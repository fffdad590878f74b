#include "tribill/holonomy.hpp"

#include <algorithm>

#include "tribill/cyclotomic.hpp"
#include "tribill/errors.hpp"
#include "tribill/numtheory.hpp"

namespace tribill {

namespace {

void require_q(long q, const char* who) {
    if (q < 3) throw domain_error(std::string(who) + ": argument must be at least 3, got " + std::to_string(q));
}

} // namespace

HolonomyFieldId holonomy_field(const TriangleSignature& sig) {
    long m = normalized_conductor(sig.Q());
    return {m, euler_phi(m) / 2};
}

bool same_holonomy(long qx, long qy) {
    require_q(qx, "same_holonomy");
    require_q(qy, "same_holonomy");
    return normalized_conductor(qx) == normalized_conductor(qy);
}

bool q_compatible(long qx, long qy) {
    require_q(qx, "q_compatible");
    require_q(qy, "q_compatible");
    if (qx == qy) return true;
    long lo = std::min(qx, qy);
    long hi = std::max(qx, qy);
    return lo % 2 == 1 && hi == 2 * lo;
}

bool real_subfield_oracle(long m, long n) {
    require_q(m, "real_subfield_oracle");
    require_q(n, "real_subfield_oracle");
    auto odd_primes = [](long v) {
        std::vector<long> ps = prime_divisors(v);
        ps.erase(std::remove(ps.begin(), ps.end(), 2L), ps.end());
        return ps;
    };
    if (odd_primes(m) != odd_primes(n)) return false;
    if ((m % 4 == 0) != (n % 4 == 0)) return false;
    return euler_phi(m) == euler_phi(n);
}

} // namespace tribill
