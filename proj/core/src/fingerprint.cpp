#include "tribill/fingerprint.hpp"

#include <algorithm>
#include <iterator>

#include "tribill/errors.hpp"

namespace tribill {

namespace {

bool is_obtuse(const TriangleSignature& sig, int cls) {
    return 2 * sig.a(cls) > sig.Q();
}

void validate_point(const TriangleSignature& sig, int i, const std::set<int>& punctured) {
    if (i < 1 || i > 3) throw domain_error("vertex class index must be 1, 2 or 3");
    if (punctured.empty()) return;
    if (!sig.vertex_class(i).singular)
        throw invalid_puncture("punctured fingerprints are only defined at singular classes");
    for (int p : punctured) {
        if (p < 1 || p > 3) throw invalid_puncture("punctured class index must be 1, 2 or 3");
        if (p == i) throw invalid_puncture("cannot puncture the class being fingerprinted");
        if (!sig.vertex_class(p).singular)
            throw invalid_puncture("only singular classes can be punctured");
        if (is_obtuse(sig, p))
            throw invalid_puncture("cannot puncture a class with an obtuse angle");
    }
}

} // namespace

std::string to_string(const AngleRat& a) {
    if (a.of_pi == 0) return "0";
    return to_string(a.of_pi) + "·pi";
}

std::map<int, RealCyclotomic> saddle_distances(const TriangleSignature& sig, int i,
                                               const std::set<int>& punctured,
                                               const RealCyclotomic& scale) {
    validate_point(sig, i, punctured);
    const int j = i % 3 + 1;
    const int k = j % 3 + 1;
    auto usable = [&](int cls) {
        return sig.vertex_class(cls).singular && punctured.count(cls) == 0;
    };

    if (sig.num_singular_classes() == 0)
        throw no_singular_target("surface has no singularities");

    std::map<int, RealCyclotomic> out;
    if (usable(j)) out.emplace(j, scale * sin_pi(sig.angle(k)));
    if (usable(k)) out.emplace(k, scale * sin_pi(sig.angle(j)));
    if (usable(i) && !is_obtuse(sig, j) && !is_obtuse(sig, k)) {
        RealCyclotomic d = scale * sin_pi(sig.angle(j));
        d *= sin_pi(sig.angle(k));
        d *= Rational(2);
        out.emplace(i, std::move(d));
    }
    if (out.empty())
        throw no_singular_target("no singular class is reachable from class " +
                                 std::to_string(i) + " of " + to_string(sig));
    return out;
}

Fingerprint fingerprint(const TriangleSignature& sig, int i, const std::set<int>& punctured,
                        const RealCyclotomic& scale) {
    auto dists = saddle_distances(sig, i, punctured, scale);

    auto best = dists.begin();
    for (auto it = std::next(dists.begin()); it != dists.end(); ++it)
        if (it->second < best->second) best = it;

    Fingerprint fp;
    fp.length = best->second;
    for (const auto& [cls, d] : dists)
        if (d == fp.length) fp.shortest_targets.insert(cls);

    const int j = i % 3 + 1;
    const Rational period = 2 * sig.angle(i);
    std::set<Rational> dirs;
    auto add_dir = [&](Rational d) {
        // reduce into [0, period); directions only ever start inside one
        // period, so a single wrap each way suffices
        if (d < 0) d += period;
        if (d >= period) d -= period;
        dirs.insert(d);
        Rational m = period - d;
        if (m >= period) m -= period;
        dirs.insert(m);
    };
    for (int cls : fp.shortest_targets) {
        if (cls == j)
            add_dir(Rational(0));
        else if (cls == i)
            add_dir(Rational(1, 2) - sig.angle(j));
        else
            add_dir(sig.angle(i));
    }

    std::vector<Rational> sorted(dirs.begin(), dirs.end());
    std::set<Rational> gaps;
    for (std::size_t t = 0; t + 1 < sorted.size(); ++t) gaps.insert(sorted[t + 1] - sorted[t]);
    gaps.insert(sorted.front() + period - sorted.back());

    for (const Rational& g : gaps) fp.angle_set.emplace_back(g);
    if (fp.angle_set.size() == 1)
        fp.fp_type = FingerprintType::I;
    else if (fp.angle_set.size() == 2)
        fp.fp_type = FingerprintType::II;
    else
        throw trichotomy_violation("more than two distinct direction gaps at class " +
                                   std::to_string(i) + " of " + to_string(sig));
    fp.cone_angle = AngleRat(Rational(2 * sig.vertex_class(i).cone_turns));
    return fp;
}

TriangleSignature reconstruct_from_type2(const AngleRat& th1, const AngleRat& th2) {
    if (th1 == th2) throw invalid_angles("the two gap values must be distinct");
    if (!(th1.of_pi > 0) || !(th2.of_pi > 0))
        throw invalid_angles("gap values must be positive");
    Rational g1 = (th1.of_pi + th2.of_pi) / 2;
    Rational g2 = (1 - th1.of_pi) / 2;
    Rational g3 = (1 - th2.of_pi) / 2;
    if (!(g1 > 0) || !(g2 > 0) || !(g3 > 0))
        throw invalid_angles("gap values do not bound a triangle");

    Integer d = lcm(lcm(g1.get_den(), g2.get_den()), g3.get_den());
    auto numer = [&](const Rational& g) {
        Rational n = g * Rational(d);
        return to_long(n.get_num());
    };
    return TriangleSignature(numer(g1), numer(g2), numer(g3)).canonical();
}

FingerprintComparison check_cover_fingerprints(const Fingerprint& fx, const Fingerprint& fy,
                                               bool x_isosceles_apex, bool scales_consistent) {
    FingerprintComparison res;
    res.lengths_compared = scales_consistent;
    if (fx.angle_set != fy.angle_set) return res;
    if (scales_consistent && !(fx.length == fy.length)) return res;
    if (fx.cone_angle == fy.cone_angle)
        res.verdict = FingerprintCompat::Compatible;
    else if (fx.cone_angle.of_pi == 2 * fy.cone_angle.of_pi && x_isosceles_apex)
        res.verdict = FingerprintCompat::CompatibleWithDoubling;
    return res;
}

} // namespace tribill
