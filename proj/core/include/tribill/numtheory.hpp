#ifndef TRIBILL_NUMTHEORY_HPP
#define TRIBILL_NUMTHEORY_HPP

#include <vector>

#include "tribill/rational.hpp"

namespace tribill {

long euler_phi(long n);
std::vector<long> prime_divisors(long n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
// divisors of n; the division is exact over the integers.
std::vector<Integer> cyclotomic_polynomial(long n);

struct NumberTheoryInfo {
    long n = 0;
    long phi = 0;
    std::vector<long> primes;
    std::vector<Integer> cyclotomic; // degree phi, monic
};

NumberTheoryInfo number_theory(long n);

} // namespace tribill

#endif
