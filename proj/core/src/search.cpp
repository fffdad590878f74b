#include "tribill/search.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "tribill/cover_map.hpp"
#include "tribill/errors.hpp"
#include "tribill/fingerprint.hpp"
#include "tribill/holonomy.hpp"
#include "tribill/unfolding.hpp"

namespace tribill {
namespace {

std::vector<RamificationEntry> inverted_profile(const std::vector<RamificationEntry>& profile) {
    std::vector<RamificationEntry> out = profile;
    for (auto& e : out) {
        if (e.multiplicity != 1 || e.target_class == 0)
            throw internal_error("inverted_profile: not an equivalence profile");
        std::swap(e.source_class, e.target_class);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Grow-only master list of family arrows, extended on demand and shared by
// closure queries and the filter chain.
struct ClosureCache {
    std::mutex mu;
    long built_s = 1;
    std::vector<CoverDescriptor> arrows;
    std::set<std::tuple<std::array<long, 3>, std::array<long, 3>, long>> seen;

    void add(CoverDescriptor d) {
        if (d.source.genus() < 2) return;
        auto key = std::tuple(d.source.entries(), d.target.entries(), d.degree);
        if (auto [it, fresh] = seen.emplace(key); !fresh) {
            // a mirrored family reproduces the arrow; profiles must agree
            for (const auto& a : arrows)
                if (a.source == d.source && a.target == d.target && a.degree == d.degree &&
                    a.ramification_profile != d.ramification_profile)
                    throw internal_error("family_closure: mirrored arrow profile mismatch");
            return;
        }
        arrows.push_back(std::move(d));
    }

    void extend(long s_max) {
        for (long s = built_s + 1; s <= s_max; ++s) {
            for (long a1 = 1; a1 < s; ++a1) {
                if (std::gcd(a1, s - a1) != 1) continue;
                CoverFamily fam = lemma7_family(a1, s - a1);
                CoverCorrespondence legs[2] = {construct_family_map(fam, 1),
                                               construct_family_map(fam, 2)};
                for (auto& leg : legs) {
                    if (!verify_map(leg))
                        throw map_inconsistent("family_closure: verification failed");
                    add(leg.descriptor);
                    if (leg.descriptor.degree == 1) {
                        CoverDescriptor rev = leg.descriptor;
                        std::swap(rev.source, rev.target);
                        rev.ramification_profile =
                            inverted_profile(leg.descriptor.ramification_profile);
                        add(std::move(rev));
                    }
                }
                if (fam.composition) {
                    const auto& odd = fam.x1.degree == 2 ? legs[0] : legs[1];
                    const auto& even = fam.x1.degree == 2 ? legs[1] : legs[0];
                    if (composed_ramification(odd, even) !=
                        fam.composition->ramification_profile)
                        throw internal_error(
                            "family_closure: composition profile disagrees with the legs");
                    add(*fam.composition);
                }
            }
        }
        built_s = std::max(built_s, s_max);
    }
};

ClosureCache& cache() {
    static ClosureCache c;
    return c;
}

std::vector<CoverDescriptor> closure_filtered(long bound) {
    auto& c = cache();
    std::scoped_lock lock(c.mu);
    c.extend(bound);
    std::vector<CoverDescriptor> out;
    for (const auto& a : c.arrows)
        if (a.source.Q() <= bound) out.push_back(a);
    std::sort(out.begin(), out.end(), [](const CoverDescriptor& l, const CoverDescriptor& r) {
        return std::tuple(l.source.Q(), l.source.entries(), l.target.Q(), l.target.entries(),
                          l.degree, static_cast<int>(l.kind)) <
               std::tuple(r.source.Q(), r.source.entries(), r.target.Q(), r.target.entries(),
                          r.degree, static_cast<int>(r.kind));
    });
    return out;
}

std::vector<CoverDescriptor> closure_between(const TriangleSignature& a,
                                             const TriangleSignature& b) {
    std::vector<CoverDescriptor> out;
    for (const auto& arrow : closure_filtered(a.Q()))
        if (arrow.source == a && arrow.target == b) out.push_back(arrow);
    return out;
}

std::string angle_set_string(const Fingerprint& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.angle_set.size(); ++i) {
        if (i) s += ", ";
        s += to_string(f.angle_set[i]);
    }
    return s + "}";
}

std::string profile_string(const std::vector<RamificationEntry>& profile) {
    std::string s = "[";
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (i) s += ", ";
        s += to_string(profile[i]);
    }
    return s + "]";
}

}  // namespace

std::vector<CoverDescriptor> family_closure(long bound) {
    if (bound < 2) throw domain_error("family_closure: bound must be at least 2");
    return closure_filtered(bound);
}

Verdict filter_chain(const TriangleSignature& source, const TriangleSignature& target) {
    const TriangleSignature A = source.canonical();
    const TriangleSignature B = target.canonical();
    if (A.genus() < 2)
        throw domain_error("filter_chain: source genus must be at least 2");

    Verdict v;
    if (!q_compatible(A.Q(), B.Q())) {
        v.reasons = {"q-incompatible"};
        return v;
    }
    if (A == B) {
        v.reasons = {"self-cover"};
        return v;
    }

    if (auto arrows = closure_between(A, B); !arrows.empty()) {
        v.kind = VerdictKind::InFamily;
        v.covers = std::move(arrows);
        return v;
    }
    if (translation_equivalent(A, B))
        throw internal_error("filter_chain: equivalence missing from the closure");

    if (B.genus() < 2) {
        v.reasons = {"torus-target"};
        return v;
    }

    std::vector<long> degrees = feasible_degrees(A, B);
    std::erase(degrees, 1L);  // a degree-1 cover is a translation equivalence
    if (degrees.empty()) {
        v.reasons = {"riemann-hurwitz-mass"};
        return v;
    }

    const bool a_right = A.has_right_angle();
    const bool b_right = B.has_right_angle();
    std::optional<RealCyclotomic> area_a, area_b;
    std::vector<std::string> reasons;
    auto note = [&](std::string r) {
        if (std::find(reasons.begin(), reasons.end(), r) == reasons.end())
            reasons.push_back(std::move(r));
    };
    std::vector<std::string> survivors;

    for (long n : degrees) {
        const std::string deg_tag = "(n=" + std::to_string(n) + ")";
        auto profiles = class_matching(A, B, n);
        if (profiles.empty()) {
            note("class-matching" + deg_tag);
            continue;
        }
        const auto apexes = A.isosceles_apexes();
        for (const auto& profile : profiles) {
            if (profile_balanced(profile)) {
                // Angle-set comparison pins the local multiplicity to 1 or 2.
                if (std::any_of(profile.begin(), profile.end(),
                                [](const RamificationEntry& e) { return e.multiplicity > 2; })) {
                    note("fingerprint-multiplicity" + deg_tag);
                    continue;
                }
                // A two-gap fingerprint of a non-right unfolding pins its
                // triangle, so distinct endpoints cannot pair.
                bool rigid = false;
                for (const auto& e : profile) {
                    if (!a_right &&
                        fingerprint(A, e.source_class).fp_type == FingerprintType::II)
                        rigid = true;
                    if (!b_right &&
                        fingerprint(B, e.target_class).fp_type == FingerprintType::II)
                        rigid = true;
                }
                if (rigid) {
                    note("type2-rigidity" + deg_tag);
                    continue;
                }
                std::string why;
                for (const auto& e : profile) {
                    const Fingerprint fx = fingerprint(A, e.source_class);
                    const Fingerprint fy = fingerprint(B, e.target_class);
                    const bool apex = std::find(apexes.begin(), apexes.end(),
                                                e.source_class) != apexes.end();
                    const auto need = e.multiplicity == 1
                                          ? FingerprintCompat::Compatible
                                          : FingerprintCompat::CompatibleWithDoubling;
                    if (check_cover_fingerprints(fx, fy, apex, false).verdict != need) {
                        why = "fingerprint-mismatch" + deg_tag + " " +
                              std::to_string(e.source_class) + "->" +
                              std::to_string(e.target_class) + " " +
                              angle_set_string(fx) + " vs " + angle_set_string(fy);
                        break;
                    }
                }
                if (!why.empty()) {
                    note(std::move(why));
                    continue;
                }
                // Shortest saddle lengths at reference scale 1, tied to the
                // cover scale through the area ratio.
                if (!area_a) area_a = UnfoldedSurface(A).area();
                if (!area_b) area_b = UnfoldedSurface(B).area();
                bool length_bad = false;
                for (const auto& e : profile) {
                    const Fingerprint fx = fingerprint(A, e.source_class);
                    const Fingerprint fy = fingerprint(B, e.target_class);
                    RealCyclotomic lhs = fx.length * fx.length * (*area_b) * Rational(n);
                    RealCyclotomic rhs = fy.length * fy.length * (*area_a);
                    if (!(lhs == rhs)) {
                        length_bad = true;
                        break;
                    }
                }
                if (length_bad) {
                    note("length-area" + deg_tag);
                    continue;
                }
                survivors.push_back("degree " + std::to_string(n) + " balanced profile " +
                                    profile_string(profile) +
                                    " passed every filter without a family certificate");
            } else {
                std::set<int> punctured, matched;
                bool mixed = false;
                for (const auto& e : profile) {
                    if (e.target_class == 0) {
                        if (matched.count(e.source_class)) mixed = true;
                        punctured.insert(e.source_class);
                    } else {
                        if (punctured.count(e.source_class)) mixed = true;
                        matched.insert(e.source_class);
                    }
                }
                if (mixed) {
                    survivors.push_back("degree " + std::to_string(n) + " profile " +
                                        profile_string(profile) +
                                        " splits a class between singular and nonsingular "
                                        "images; puncture comparison not applicable");
                    continue;
                }
                bool obtuse = false;
                for (int cls : punctured)
                    if (2 * A.a(cls) > A.Q()) obtuse = true;
                if (obtuse) {
                    survivors.push_back("degree " + std::to_string(n) + " profile " +
                                        profile_string(profile) +
                                        " punctures an obtuse class; puncture comparison "
                                        "not applicable");
                    continue;
                }
                bool rigid = false;
                std::string why;
                for (const auto& e : profile) {
                    if (e.target_class == 0) continue;
                    const Fingerprint fx = fingerprint(A, e.source_class, punctured);
                    const Fingerprint fy = fingerprint(B, e.target_class);
                    if ((!a_right && fx.fp_type == FingerprintType::II) ||
                        (!b_right && fy.fp_type == FingerprintType::II)) {
                        rigid = true;
                        break;
                    }
                    const bool apex = std::find(apexes.begin(), apexes.end(),
                                                e.source_class) != apexes.end();
                    const auto need = e.multiplicity == 1
                                          ? FingerprintCompat::Compatible
                                          : FingerprintCompat::CompatibleWithDoubling;
                    if (check_cover_fingerprints(fx, fy, apex, false).verdict != need) {
                        why = "punctured-fingerprint-mismatch" + deg_tag + " " +
                              std::to_string(e.source_class) + "->" +
                              std::to_string(e.target_class) + " " +
                              angle_set_string(fx) + " vs " + angle_set_string(fy);
                        break;
                    }
                }
                if (rigid) {
                    note("type2-rigidity" + deg_tag);
                    continue;
                }
                if (!why.empty()) {
                    note(std::move(why));
                    continue;
                }
                survivors.push_back("degree " + std::to_string(n) + " punctured profile " +
                                    profile_string(profile) +
                                    " passed every filter without a family certificate");
            }
        }
    }

    if (!survivors.empty()) {
        v.kind = VerdictKind::Undecided;
        v.diagnostics = std::move(survivors);
        return v;
    }
    v.reasons = std::move(reasons);
    if (v.reasons.empty())
        throw internal_error("filter_chain: impossible verdict without reasons");
    return v;
}

SearchReport search(long q_max) {
    if (q_max < 3) throw domain_error("search: bound must be at least 3");
    SearchReport rep;
    rep.q_max = q_max;

    std::map<long, std::vector<TriangleSignature>> by_q;
    for (const auto& sig : canonical_signatures_up_to(2 * q_max))
        by_q[sig.Q()].push_back(sig);

    for (const auto& [qa, sources] : by_q) {
        if (qa > q_max) break;
        for (const auto& A : sources) {
            if (A.genus() < 2) continue;
            std::vector<long> target_qs;
            if (qa % 4 == 2) target_qs.push_back(qa / 2);
            target_qs.push_back(qa);
            if (qa % 2 == 1) target_qs.push_back(2 * qa);
            for (long qb : target_qs) {
                auto it = by_q.find(qb);
                if (it == by_q.end()) continue;
                for (const auto& B : it->second) {
                    ++rep.pairs_evaluated;
                    Verdict v = filter_chain(A, B);
                    switch (v.kind) {
                        case VerdictKind::InFamily:
                            rep.in_family.push_back({A, B, std::move(v)});
                            break;
                        case VerdictKind::Impossible:
                            ++rep.impossible_by_reason[v.reasons.front()];
                            break;
                        case VerdictKind::Undecided:
                            rep.undecided.push_back({A, B, std::move(v)});
                            break;
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace tribill
