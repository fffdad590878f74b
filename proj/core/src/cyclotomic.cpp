#include "tribill/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>

#include "tribill/errors.hpp"

namespace tribill {

namespace {

// Cached per-conductor data: the minimal polynomial Phi_n, plus the
// reduction rows x^k mod Phi_n for k in [phi, 2*phi-1) once a product has
// been formed at this conductor.  Arbitrary exponents are streamed on
// demand instead of tabulated; a full table costs O(n * phi) big integers,
// which is gigabytes at the conductors a few mixed-field sums reach.
struct ConductorData {
    long n = 1;
    long phi = 1;
    std::vector<Integer> minpoly;  // ascending, monic, length phi+1
    mutable std::once_flag mult_once;
    mutable std::vector<std::vector<Integer>> mult_rows;
};

std::unique_ptr<ConductorData> build_conductor_data(long n) {
    auto data = std::make_unique<ConductorData>();
    data->n = n;
    data->minpoly = cyclotomic_polynomial(n);
    data->phi = static_cast<long>(data->minpoly.size()) - 1;
    return data;
}

// Streams x^e mod Phi_n for increasing e, calling visit(i, row) when e
// equals exps[i].  exps must be ascending; duplicates are visited in order.
template <typename F>
void walk_powers(const ConductorData& data, const std::vector<long>& exps, F visit) {
    if (exps.empty()) return;
    const long phi = data.phi;
    std::vector<Integer> cur(phi, 0);
    cur[0] = 1;
    std::size_t i = 0;
    for (long e = 0;; ++e) {
        while (i < exps.size() && exps[i] == e) {
            visit(i, cur);
            ++i;
        }
        if (i == exps.size()) return;
        Integer top = cur[phi - 1];
        for (long j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0) {
            for (long j = 0; j < phi; ++j) cur[j] -= top * data.minpoly[j];
        }
    }
}

// Small fields multiply often enough that the reduction rows are worth
// keeping; past this size the table would dwarf the products it serves.
constexpr long kMultTableMaxPhi = 256;

const std::vector<std::vector<Integer>>& mult_rows(const ConductorData& data) {
    static const std::vector<std::vector<Integer>> none;
    if (data.phi > kMultTableMaxPhi) return none;
    std::call_once(data.mult_once, [&] {
        std::vector<long> exps;
        for (long k = data.phi; k < 2 * data.phi - 1; ++k) exps.push_back(k);
        data.mult_rows.resize(exps.size());
        walk_powers(data, exps, [&](std::size_t i, const std::vector<Integer>& row) {
            data.mult_rows[i] = row;
        });
    });
    return data.mult_rows;
}

const ConductorData& conductor_data(long n) {
    static std::map<long, std::unique_ptr<ConductorData>> cache;
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto built = build_conductor_data(n);
    std::unique_lock lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

long poly_degree(const std::vector<Rational>& p) {
    for (long d = static_cast<long>(p.size()) - 1; d >= 0; --d)
        if (p[d] != 0) return d;
    return -1;
}

// Quotient-remainder division in Q[x]; divisor must be nonzero.
// p is consumed and becomes the remainder.
std::vector<Rational> poly_divmod(std::vector<Rational>& p, const std::vector<Rational>& d) {
    long dd = poly_degree(d);
    long dp = poly_degree(p);
    std::vector<Rational> q(dp >= dd ? dp - dd + 1 : 0, Rational(0));
    while (dp >= dd) {
        Rational c = p[dp] / d[dd];
        q[dp - dd] = c;
        for (long j = 0; j <= dd; ++j) p[dp - dd + j] -= c * d[j];
        dp = poly_degree(p);
    }
    return q;
}

} // namespace

long normalized_conductor(long n) {
    if (n <= 0) throw internal_error("conductor must be positive");
    if (n % 4 == 2) n /= 2;
    return n;
}

long lcm_conductor(long a, long b) {
    long l = std::lcm(a, b);
    if (l % 4 == 2) throw internal_error("lcm of stored conductors is 2 mod 4");
    return l;
}

CyclotomicNumber::CyclotomicNumber() : n_(1), coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Rational> coeffs)
    : n_(conductor), coeffs_(std::move(coeffs)) {
    if (n_ <= 0 || n_ % 4 == 2)
        throw internal_error("cyclotomic conductor not normalized");
    const auto& data = conductor_data(n_);
    if (static_cast<long>(coeffs_.size()) != data.phi)
        throw internal_error("cyclotomic coefficient vector has wrong length");
}

CyclotomicNumber CyclotomicNumber::from_rational(const Rational& r) {
    return CyclotomicNumber(1, {r});
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long order, long k) {
    if (order <= 0) throw internal_error("root of unity needs positive order");
    k %= order;
    if (k < 0) k += order;
    long n = order;
    bool negate = false;
    if (n % 4 == 2) {
        // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m, so rewrite over conductor m.
        long m = n / 2;
        negate = (k % 2 != 0);
        k = static_cast<long>((static_cast<long long>(k) * ((m + 1) / 2)) % m);
        n = m;
    }
    const auto& data = conductor_data(n);
    std::vector<Rational> coeffs(data.phi, Rational(0));
    walk_powers(data, {k}, [&](std::size_t, const std::vector<Integer>& row) {
        for (long j = 0; j < data.phi; ++j) {
            coeffs[j] = Rational(row[j]);
            if (negate) coeffs[j] = -coeffs[j];
        }
    });
    return CyclotomicNumber(n, std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational(Rational* value) const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        if (coeffs_[j] != 0) return false;
    if (value) *value = coeffs_[0];
    return true;
}

CyclotomicNumber CyclotomicNumber::lifted_to(long m) const {
    if (m == n_) return *this;
    if (m <= 0 || m % n_ != 0 || m % 4 == 2)
        throw internal_error("invalid conductor lift");
    const auto& data = conductor_data(m);
    const long stride = m / n_;
    std::vector<long> exps, src;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        exps.push_back(static_cast<long>(j) * stride);
        src.push_back(static_cast<long>(j));
    }
    std::vector<Rational> out(data.phi, Rational(0));
    walk_powers(data, exps, [&](std::size_t i, const std::vector<Integer>& row) {
        const Rational& c = coeffs_[src[i]];
        for (long t = 0; t < data.phi; ++t)
            if (row[t] != 0) out[t] += c * row[t];
    });
    return CyclotomicNumber(m, std::move(out));
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    if (n_ == 1) return *this;
    const auto& data = conductor_data(n_);
    std::vector<std::pair<long, long>> req;  // (exponent of the image, source power)
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        req.emplace_back((n_ - static_cast<long>(j)) % n_, static_cast<long>(j));
    }
    std::sort(req.begin(), req.end());
    std::vector<long> exps;
    for (const auto& r : req) exps.push_back(r.first);
    std::vector<Rational> out(data.phi, Rational(0));
    walk_powers(data, exps, [&](std::size_t i, const std::vector<Integer>& row) {
        const Rational& c = coeffs_[req[i].second];
        for (long t = 0; t < data.phi; ++t)
            if (row[t] != 0) out[t] += c * row[t];
    });
    return CyclotomicNumber(n_, std::move(out));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw domain_error("division by zero in cyclotomic field");
    const auto& data = conductor_data(n_);

    // Extended Euclid in Q[x]: track t with t * this == gcd mod Phi_n.
    std::vector<Rational> r0(data.minpoly.size());
    for (std::size_t j = 0; j < data.minpoly.size(); ++j) r0[j] = Rational(data.minpoly[j]);
    std::vector<Rational> r1 = coeffs_;
    std::vector<Rational> t0{Rational(0)};
    std::vector<Rational> t1{Rational(1)};

    while (poly_degree(r1) > 0) {
        std::vector<Rational> rem = r0;
        std::vector<Rational> q = poly_divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        // t_next = t0 - q * t1
        std::vector<Rational> tn(std::max(t0.size(), q.size() + t1.size()), Rational(0));
        for (std::size_t j = 0; j < t0.size(); ++j) tn[j] = t0[j];
        for (std::size_t a = 0; a < q.size(); ++a) {
            if (q[a] == 0) continue;
            for (std::size_t b = 0; b < t1.size(); ++b) tn[a + b] -= q[a] * t1[b];
        }
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    if (poly_degree(r1) != 0)
        throw internal_error("cyclotomic inverse: gcd with minimal polynomial not constant");
    Rational unit = r1[0];

    std::vector<Rational> out(data.phi, Rational(0));
    for (std::size_t j = 0; j < t1.size() && j < static_cast<std::size_t>(data.phi); ++j)
        out[j] = t1[j] / unit;
    return CyclotomicNumber(n_, std::move(out));
}

std::complex<double> CyclotomicNumber::to_complex_double() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 2.0 * 3.141592653589793238462643383279502884;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        acc += coeffs_[j].get_d() * std::polar(1.0, tau * static_cast<double>(j) / static_cast<double>(n_));
    }
    return acc;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    long m = lcm_conductor(n_, o.n_);
    if (m != n_) *this = lifted_to(m);
    if (m != o.n_) {
        CyclotomicNumber lift = o.lifted_to(m);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += lift.coeffs_[j];
    } else {
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    long m = lcm_conductor(n_, o.n_);
    if (m != n_) *this = lifted_to(m);
    if (m != o.n_) {
        CyclotomicNumber lift = o.lifted_to(m);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= lift.coeffs_[j];
    } else {
        for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    long m = lcm_conductor(n_, o.n_);
    const CyclotomicNumber a = (m == n_) ? *this : lifted_to(m);
    const CyclotomicNumber b = (m == o.n_) ? o : o.lifted_to(m);
    const auto& data = conductor_data(m);
    const long phi = data.phi;

    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (long i = 0; i < phi; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (b.coeffs_[j] == 0) continue;
            conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + phi);
    const auto& rows = mult_rows(data);
    if (!rows.empty()) {
        for (long k = phi; k < 2 * phi - 1; ++k) {
            if (conv[k] == 0) continue;
            const auto& row = rows[k - phi];
            for (long t = 0; t < phi; ++t)
                if (row[t] != 0) out[t] += conv[k] * row[t];
        }
    } else if (phi > 1) {
        std::vector<long> exps;
        for (long k = phi; k < 2 * phi - 1; ++k)
            if (conv[k] != 0) exps.push_back(k);
        walk_powers(data, exps, [&](std::size_t i, const std::vector<Integer>& row) {
            const Rational& c = conv[exps[i]];
            for (long t = 0; t < phi; ++t)
                if (row[t] != 0) out[t] += c * row[t];
        });
    }
    n_ = m;
    coeffs_ = std::move(out);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

CyclotomicNumber operator-(CyclotomicNumber a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    long m = lcm_conductor(a.n_, b.n_);
    if (m == a.n_ && m == b.n_) return a.coeffs_ == b.coeffs_;
    return a.lifted_to(m).coeffs_ == b.lifted_to(m).coeffs_;
}

} // namespace tribill
