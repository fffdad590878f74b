#include "tribill/signature.hpp"

#include <algorithm>
#include <numeric>

#include "tribill/errors.hpp"

namespace tribill {

TriangleSignature::TriangleSignature(long a1, long a2, long a3) : a_{a1, a2, a3} {
    for (long v : a_)
        if (v <= 0) throw non_positive_entry("signature entries must be positive");
    long g = std::gcd(std::gcd(a1, a2), a3);
    for (long& v : a_) v /= g;
    q_ = a_[0] + a_[1] + a_[2];
}

long TriangleSignature::a(int i) const {
    if (i < 1 || i > 3) throw internal_error("vertex index out of range");
    return a_[i - 1];
}

VertexClassSummary TriangleSignature::vertex_class(int i) const {
    VertexClassSummary s;
    s.index = i;
    s.a = a(i);
    s.size = std::gcd(s.a, q_);
    s.cone_turns = s.a / s.size;
    s.singular = s.cone_turns > 1;
    return s;
}

std::array<VertexClassSummary, 3> TriangleSignature::vertex_classes() const {
    return {vertex_class(1), vertex_class(2), vertex_class(3)};
}

long TriangleSignature::genus() const {
    long sum_sizes = 0;
    for (int i = 1; i <= 3; ++i) sum_sizes += std::gcd(a(i), q_);
    return 1 + (q_ - sum_sizes) / 2;
}

long TriangleSignature::num_singular_classes() const {
    long c = 0;
    for (const auto& s : vertex_classes())
        if (s.singular) ++c;
    return c;
}

long TriangleSignature::num_singular_points() const {
    long c = 0;
    for (const auto& s : vertex_classes())
        if (s.singular) c += s.size;
    return c;
}

long TriangleSignature::mass() const {
    long m = 0;
    for (const auto& s : vertex_classes())
        if (s.singular) m += s.a;
    return m;
}

bool TriangleSignature::has_right_angle(int* where) const {
    for (int i = 1; i <= 3; ++i) {
        if (2 * a(i) == q_) {
            if (where) *where = i;
            return true;
        }
    }
    return false;
}

std::vector<int> TriangleSignature::isosceles_apexes() const {
    std::vector<int> out;
    for (int i = 1; i <= 3; ++i) {
        int j = i % 3 + 1;
        int k = j % 3 + 1;
        if (a(j) == a(k)) out.push_back(i);
    }
    return out;
}

TriangleSignature TriangleSignature::canonical() const {
    std::array<long, 3> s = a_;
    std::sort(s.begin(), s.end());
    return TriangleSignature(s[0], s[1], s[2]);
}

bool TriangleSignature::is_canonical() const {
    return a_[0] <= a_[1] && a_[1] <= a_[2];
}

std::string to_string(const TriangleSignature& sig) {
    return "X(" + std::to_string(sig.a(1)) + "," + std::to_string(sig.a(2)) + "," +
           std::to_string(sig.a(3)) + ")";
}

std::vector<TriangleSignature> canonical_signatures_up_to(long q_max) {
    std::vector<TriangleSignature> out;
    for (long q = 3; q <= q_max; ++q) {
        for (long a1 = 1; 3 * a1 <= q; ++a1) {
            for (long a2 = a1; a1 + 2 * a2 <= q; ++a2) {
                long a3 = q - a1 - a2;
                if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
                out.emplace_back(a1, a2, a3);
            }
        }
    }
    return out;
}

} // namespace tribill
