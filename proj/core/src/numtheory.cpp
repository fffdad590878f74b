#include "tribill/numtheory.hpp"

#include <map>
#include <mutex>

namespace tribill {

long euler_phi(long n) {
    if (n <= 0) throw domain_error("euler_phi of non-positive argument");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<long> prime_divisors(long n) {
    if (n <= 0) throw domain_error("prime_divisors of non-positive argument");
    std::vector<long> out;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) out.push_back(m);
    return out;
}

namespace {

// Exact division of a by b in Z[x], both with constant term first.
// Requires b monic; the quotient is returned, and the remainder must vanish.
std::vector<Integer> divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    std::vector<Integer> q;
    long da = static_cast<long>(a.size()) - 1;
    if (da < db) throw internal_error("polynomial division with deficient degree");
    q.assign(da - db + 1, Integer(0));
    for (long k = da - db; k >= 0; --k) {
        Integer c = a[k + db];
        if (c == 0) continue;
        q[k] = c;
        for (long j = 0; j <= db; ++j) a[k + j] -= c * b[j];
    }
    for (const auto& c : a)
        if (c != 0) throw internal_error("inexact polynomial division");
    return q;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(long n) {
    if (n <= 0) throw domain_error("cyclotomic polynomial with non-positive index");
    static std::map<long, std::vector<Integer>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    std::vector<Integer> result;
    if (n == 1) {
        result = {Integer(-1), Integer(1)}; // x - 1
    } else {
        // x^n - 1
        std::vector<Integer> num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        for (long d = 1; d < n; ++d)
            if (n % d == 0) num = divide_exact(std::move(num), cyclotomic_polynomial(d));
        result = std::move(num);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(n, result);
    return result;
}

NumberTheoryInfo number_theory(long n) {
    NumberTheoryInfo info;
    info.n = n;
    info.phi = euler_phi(n);
    info.primes = prime_divisors(n);
    info.cyclotomic = cyclotomic_polynomial(n);
    return info;
}

} // namespace tribill
