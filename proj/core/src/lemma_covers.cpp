#include "tribill/lemma_covers.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tribill/errors.hpp"

namespace tribill {

std::string to_string(CoverKind kind) {
    switch (kind) {
        case CoverKind::F1: return "F1";
        case CoverKind::F2: return "F2";
        case CoverKind::Composition: return "Composition";
        case CoverKind::Equivalence: return "Equivalence";
    }
    throw internal_error("to_string(CoverKind): unknown kind");
}

bool RamificationEntry::operator<(const RamificationEntry& o) const {
    // Singular targets first, then the nonsingular bucket.
    auto key = [](const RamificationEntry& e) {
        return std::tuple(e.source_class, e.target_class == 0, e.target_class,
                          e.multiplicity, e.count);
    };
    return key(*this) < key(o);
}

bool profile_balanced(const std::vector<RamificationEntry>& profile) {
    return std::all_of(profile.begin(), profile.end(),
                       [](const RamificationEntry& e) { return e.target_class != 0; });
}

std::string to_string(const RamificationEntry& e) {
    std::ostringstream out;
    out << e.source_class << "->";
    if (e.target_class == 0)
        out << "ns";
    else
        out << e.target_class;
    out << " m=" << e.multiplicity << " x" << e.count;
    return out.str();
}

std::string to_string(const CoverDescriptor& d) {
    std::ostringstream out;
    out << to_string(d.source) << " -> " << to_string(d.target)
        << " deg " << d.degree << " " << to_string(d.kind);
    if (!d.ramification_profile.empty()) {
        out << " [";
        for (size_t i = 0; i < d.ramification_profile.size(); ++i) {
            if (i) out << ", ";
            out << to_string(d.ramification_profile[i]);
        }
        out << "]";
    }
    return out.str();
}

namespace {

// Maps construction label i (1..3) to the position of that vertex in the
// canonical (sorted) signature, matching the stable sort canonical() uses.
std::array<int, 3> canonical_positions(const TriangleSignature& sig) {
    const auto& e = sig.entries();
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int l, int r) { return e[l] < e[r]; });
    std::array<int, 3> pos{};
    for (int p = 0; p < 3; ++p) pos[order[p]] = p + 1;
    return pos;
}

void sort_profile(std::vector<RamificationEntry>& profile) {
    std::sort(profile.begin(), profile.end());
}

// Ramification profile of the degree-2 composition from the odd-leg family
// member `src` to the even-leg member `tgt`.  `label_targets[i-1]` lists the
// labels of tgt that source label i reaches (through the shared right
// surface).  Counts over a pair of equal-entry targets are forced by fiber
// counting.  Indices in the result refer to canonical positions.
std::vector<RamificationEntry> composition_profile(
    const TriangleSignature& src, const TriangleSignature& tgt,
    const std::array<std::vector<int>, 3>& label_targets) {
    const long n = 2;
    auto spos = canonical_positions(src);
    auto tpos = canonical_positions(tgt);
    std::vector<RamificationEntry> profile;
    long rh_total = 0;
    for (int i = 1; i <= 3; ++i) {
        auto sc = src.vertex_class(i);
        if (!sc.singular) continue;
        const auto& targets = label_targets[i - 1];
        bool any_singular = false;
        for (int j : targets)
            if (tgt.vertex_class(j).singular) any_singular = true;
        if (!any_singular) {
            profile.push_back({spos[i - 1], 0, sc.cone_turns, sc.size});
            rh_total += sc.size * (sc.cone_turns - 1);
            continue;
        }
        if (targets.size() == 1) {
            auto tc = tgt.vertex_class(targets[0]);
            if (sc.cone_turns % tc.cone_turns != 0)
                throw internal_error("composition_profile: cone turns do not divide");
            long m = sc.cone_turns / tc.cone_turns;
            profile.push_back({spos[i - 1], tpos[targets[0] - 1], m, sc.size});
            rh_total += sc.size * (m - 1);
            continue;
        }
        // One source class split over a pair of equal-entry targets; fiber
        // counting over each target fixes the counts.
        long assigned = 0;
        for (int j : targets) {
            auto tc = tgt.vertex_class(j);
            if (sc.cone_turns % tc.cone_turns != 0)
                throw internal_error("composition_profile: cone turns do not divide");
            long m = sc.cone_turns / tc.cone_turns;
            if ((n * tc.size) % m != 0)
                throw internal_error("composition_profile: fiber count not integral");
            long count = n * tc.size / m;
            profile.push_back({spos[i - 1], tpos[j - 1], m, count});
            assigned += count;
            rh_total += count * (m - 1);
        }
        if (assigned != sc.size)
            throw internal_error("composition_profile: class size mismatch");
    }
    for (int j = 1; j <= 3; ++j) {
        auto tc = tgt.vertex_class(j);
        if (!tc.singular) continue;
        long covered = 0;
        for (const auto& e : profile)
            if (e.target_class == tpos[j - 1]) covered += e.count * e.multiplicity;
        if (covered != n * tc.size)
            throw internal_error("composition_profile: fiber total mismatch");
    }
    long expect = (2 * src.genus() - 2) - n * (2 * tgt.genus() - 2);
    if (rh_total != expect)
        throw internal_error("composition_profile: Riemann-Hurwitz total mismatch");
    sort_profile(profile);
    return profile;
}

}  // namespace

CoverFamily lemma7_family(long a1, long a2) {
    if (a1 < 1 || a2 < 1)
        throw non_positive_entry("lemma7_family: legs must be positive");
    if (std::gcd(a1, a2) != 1)
        throw not_coprime("lemma7_family: legs must be coprime");

    const long s = a1 + a2;
    CoverFamily fam;
    fam.a1 = a1;
    fam.a2 = a2;
    fam.y = TriangleSignature(s, a1, a2);
    fam.degenerate = (a1 == 1 && a2 == 1);

    // Entry orders are chosen so that each member unfolds in the same frame
    // as Y, making the J-invariant comparison exact without realignment.
    // The even-a2 member comes out a quarter turn off; the flag records it.
    fam.x1.sigma = sin_pi(Rational(a1, 2 * s)).inverse();
    if (a1 % 2 == 1) {
        fam.x1.sig = TriangleSignature(a1, a1, 2 * a2);
        fam.x1.degree = 2;
        fam.x1.apex_index = 3;
    } else {
        fam.x1.sig = TriangleSignature(a1 / 2, a1 / 2, a2);
        fam.x1.degree = 1;
        fam.x1.apex_index = 3;
    }

    fam.x2.sigma = sin_pi(Rational(a2, 2 * s)).inverse();
    if (a2 % 2 == 1) {
        fam.x2.degree = 2;
        if (a1 % 2 == 1) {
            fam.x2.sig = TriangleSignature(a2, a2, 2 * a1);
            fam.x2.apex_index = 3;
        } else {
            fam.x2.sig = TriangleSignature(2 * a1, a2, a2);
            fam.x2.apex_index = 1;
        }
    } else {
        fam.x2.sig = TriangleSignature(a1, a2 / 2, a2 / 2);
        fam.x2.degree = 1;
        fam.x2.apex_index = 1;
        fam.x2.j_quarter_turn = true;
    }

    if (fam.x1.degree != fam.x2.degree) {
        // Exactly one leg is even; route the degree-2 member through Y and
        // back along the bijection.  Base vertices land on the doubled-leg
        // endpoint of Y, the apex on the other one.
        CoverDescriptor comp;
        comp.degree = 2;
        comp.kind = CoverKind::Composition;
        std::array<std::vector<int>, 3> label_targets;
        const TriangleSignature *src, *tgt;
        if (a1 % 2 == 1) {
            src = &fam.x1.sig;  // bases {1,2}, apex 3
            tgt = &fam.x2.sig;  // apex 1, bases {2,3}
            label_targets = {{{1}, {1}, {2, 3}}};
        } else {
            src = &fam.x2.sig;  // apex 1, bases {2,3}
            tgt = &fam.x1.sig;  // bases {1,2}, apex 3
            label_targets = {{{1, 2}, {3}, {3}}};
        }
        comp.source = src->canonical();
        comp.target = tgt->canonical();
        comp.ramification_profile = composition_profile(*src, *tgt, label_targets);
        comp.balanced = profile_balanced(comp.ramification_profile);
        fam.composition = comp;
    }
    return fam;
}

std::optional<TriangleSignature> doubling_partner(const TriangleSignature& sig) {
    const auto c = sig.canonical();
    const auto& e = c.entries();
    if (e[0] == e[1] && e[2] % 2 == 1)
        return TriangleSignature(2 * e[0], e[2], 2 * e[0] + e[2]).canonical();
    if (e[1] == e[2] && e[0] % 2 == 1)
        return TriangleSignature(2 * e[1], e[0], 2 * e[1] + e[0]).canonical();
    return std::nullopt;
}

bool translation_equivalent(const TriangleSignature& a, const TriangleSignature& b) {
    const auto ca = a.canonical(), cb = b.canonical();
    if (ca == cb) return true;
    if (auto p = doubling_partner(ca); p && *p == cb) return true;
    if (auto p = doubling_partner(cb); p && *p == ca) return true;
    return false;
}

std::vector<long> feasible_degrees(const TriangleSignature& a, const TriangleSignature& b) {
    const long ga = a.genus(), gb = b.genus();
    if (gb < 2)
        throw domain_error("feasible_degrees: target genus below 2 admits unbounded degrees");
    const long mass_a = a.mass(), mass_b = b.mass();
    std::vector<long> out;
    if (ga == gb && mass_a == mass_b) out.push_back(1);
    for (long n = 2; (2 * ga - 2) - n * (2 * gb - 2) >= 0; ++n)
        if (mass_a >= n * mass_b) out.push_back(n);
    return out;
}

std::vector<std::vector<RamificationEntry>>
class_matching(const TriangleSignature& a, const TriangleSignature& b, long n) {
    {
        auto feas = feasible_degrees(a, b);
        if (std::find(feas.begin(), feas.end(), n) == feas.end())
            throw domain_error("class_matching: degree is not feasible for this pair");
    }
    const long rh_target = (2 * a.genus() - 2) - n * (2 * b.genus() - 2);

    struct TargetOption {
        int target;  // 0 = nonsingular image
        long m;
    };
    struct SourceClass {
        int index;
        long size;
        std::vector<TargetOption> options;
    };

    std::vector<VertexClassSummary> b_singular;
    for (const auto& c : b.vertex_classes())
        if (c.singular) b_singular.push_back(c);

    std::vector<SourceClass> sources;
    for (const auto& c : a.vertex_classes()) {
        if (!c.singular) continue;
        SourceClass sc{c.index, c.size, {}};
        for (const auto& t : b_singular)
            if (c.cone_turns % t.cone_turns == 0 && c.cone_turns / t.cone_turns <= n)
                sc.options.push_back({t.index, c.cone_turns / t.cone_turns});
        if (c.cone_turns <= n) sc.options.push_back({0, c.cone_turns});
        sources.push_back(sc);
    }

    // Per source class, all ways to distribute its points over the options.
    std::vector<std::vector<std::vector<RamificationEntry>>> per_class;
    for (const auto& sc : sources) {
        std::vector<std::vector<RamificationEntry>> splits;
        std::vector<long> counts(sc.options.size(), 0);
        auto rec = [&](auto&& self, size_t k, long remaining) -> void {
            if (k + 1 == sc.options.size()) {
                counts[k] = remaining;
                std::vector<RamificationEntry> part;
                for (size_t i = 0; i < counts.size(); ++i)
                    if (counts[i] > 0)
                        part.push_back({sc.index, sc.options[i].target,
                                        sc.options[i].m, counts[i]});
                splits.push_back(std::move(part));
                return;
            }
            for (long c = 0; c <= remaining; ++c) {
                counts[k] = c;
                self(self, k + 1, remaining - c);
            }
        };
        if (sc.options.empty()) return {};  // this class can map nowhere
        rec(rec, 0, sc.size);
        per_class.push_back(std::move(splits));
    }

    std::vector<std::vector<RamificationEntry>> result;
    std::vector<size_t> pick(per_class.size(), 0);
    auto emit = [&]() {
        std::vector<RamificationEntry> profile;
        for (size_t i = 0; i < per_class.size(); ++i)
            for (const auto& e : per_class[i][pick[i]]) profile.push_back(e);
        // Every fiber over a singular target point must be fully accounted
        // for, and the ramification total must hit Riemann-Hurwitz exactly.
        for (const auto& t : b_singular) {
            long covered = 0;
            for (const auto& e : profile)
                if (e.target_class == t.index) covered += e.count * e.multiplicity;
            if (covered != n * t.size) return;
        }
        long rh = 0;
        for (const auto& e : profile) rh += e.count * (e.multiplicity - 1);
        if (rh != rh_target) return;
        sort_profile(profile);
        result.push_back(std::move(profile));
    };
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == per_class.size()) {
            emit();
            return;
        }
        for (pick[k] = 0; pick[k] < per_class[k].size(); ++pick[k]) self(self, k + 1);
    };
    rec(rec, 0);
    return result;
}

}  // namespace tribill
