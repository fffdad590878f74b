#include "tribill/cover_map.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "tribill/errors.hpp"
#include "tribill/vec2.hpp"

namespace tribill {
namespace {

std::array<int, 3> canonical_positions(const TriangleSignature& sig) {
    const auto& e = sig.entries();
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int l, int r) { return e[l] < e[r]; });
    std::array<int, 3> pos{};
    for (int p = 0; p < 3; ++p) pos[order[p]] = p + 1;
    return pos;
}

// The doubled template in the frame of the target: the foot of the apex
// altitude at the origin, one half equal to the target base triangle, the
// other its mirror image.  F1 doubles across the vertical leg, F2 across
// the horizontal one.
struct TemplateData {
    Vec2 apex, b0, b1;
    int base_y, apex_y;       // target labels under base and apex vertices
    int alt_side, base_side;  // target sides met by the altitude / half-base
    DihedralElement mirror;
};

TemplateData make_template(const UnfoldedSurface& y, CoverKind side) {
    const auto& base = y.base_triangle();
    if (side == CoverKind::F1)
        return {base[2], Vec2(-base[1].x, base[1].y), base[1],
                2, 3, 2, 3, DihedralElement{y.Q() / 2, 1}};
    return {base[1], Vec2(base[2].x, -base[2].y), base[2],
            3, 2, 3, 2, DihedralElement{0, 1}};
}

// Exact linear action of a target group element, in the same convention as
// copy_vertices (reflect first, then rotate).
struct LinearAction {
    const UnfoldedSurface& y;
    std::map<long, std::pair<RealCyclotomic, RealCyclotomic>> trig;

    Vec2 apply(DihedralElement g, const Vec2& v) {
        auto it = trig.find(g.k);
        if (it == trig.end()) {
            Rational turn(2 * g.k, y.Q());
            it = trig.emplace(g.k, std::pair(cos_pi(turn), sin_pi(turn))).first;
        }
        const auto& [c, s] = it->second;
        RealCyclotomic vy = g.eps ? -v.y : v.y;
        return Vec2(c * v.x - s * vy, s * v.x + c * vy);
    }
};

std::array<int, 2> other_labels(int apex) {
    switch (apex) {
        case 1: return {2, 3};
        case 2: return {1, 3};
        case 3: return {1, 2};
    }
    throw internal_error("other_labels: label out of range");
}

// Half h of a source copy always holds base vertex base_index[h]; with
// seed_flip f it sits at template end b1 when h ^ f == 1.  Crossing the
// altitude swaps halves within a copy; crossing the half-base or the leg
// moves to the source neighbor on the same half index, while the image
// crosses the matching target side.
bool assign_halves(const UnfoldedSurface& x, const UnfoldedSurface& y,
                   const TemplateData& tmpl, int apex, std::array<int, 2> bidx,
                   int flip, std::vector<std::array<long, 2>>& him) {
    const long nc = x.num_copies();
    him.assign(nc, {-1, -1});
    him[0][1 - flip] = 0;
    him[0][flip] = dihedral_index(tmpl.mirror);
    std::deque<std::pair<long, int>> queue{{0, 0}, {0, 1}};
    while (!queue.empty()) {
        auto [c, h] = queue.front();
        queue.pop_front();
        const long d = him[c][h];
        auto meet = [&](long pc, int ph, long expect) {
            long& slot = him[pc][ph];
            if (slot < 0) {
                slot = expect;
                queue.emplace_back(pc, ph);
                return true;
            }
            return slot == expect;
        };
        if (!meet(c, 1 - h, y.glued_to({d, tmpl.alt_side}).copy)) return false;
        if (!meet(x.glued_to({c, apex}).copy, h,
                  y.glued_to({d, tmpl.base_side}).copy))
            return false;
        if (!meet(x.glued_to({c, bidx[1 - h]}).copy, h, y.glued_to({d, 1}).copy))
            return false;
    }
    for (const auto& row : him)
        if (row[0] < 0 || row[1] < 0)
            throw internal_error("assign_halves: source unfolding not connected");
    return true;
}

}  // namespace

CoverCorrespondence construct_family_map(const CoverFamily& fam, int leg) {
    if (leg != 1 && leg != 2)
        throw domain_error("construct_family_map: leg must be 1 or 2");
    const FamilyCover& cov = leg == 1 ? fam.x1 : fam.x2;
    const CoverKind side = leg == 1 ? CoverKind::F1 : CoverKind::F2;

    UnfoldedSurface y(fam.y);
    UnfoldedSurface x(cov.sig, cov.sigma);
    const int apex = cov.apex_index;
    const std::array<int, 2> bidx = other_labels(apex);
    const TemplateData tmpl = make_template(y, side);

    std::vector<std::array<long, 2>> him;
    int flip = 0;
    if (!assign_halves(x, y, tmpl, apex, bidx, 0, him)) {
        flip = 1;
        if (!assign_halves(x, y, tmpl, apex, bidx, 1, him))
            throw map_inconsistent("construct_family_map: no consistent half assignment");
    }

    std::vector<DihedralElement> frames;
    frames.reserve(x.num_copies());
    for (long c = 0; c < x.num_copies(); ++c)
        frames.push_back(y.element(him[c][1 ^ flip]));

    CoverCorrespondence corr{CoverDescriptor{},
                             side,
                             false,
                             fam.a1,
                             fam.a2,
                             std::move(x),
                             std::move(y),
                             apex,
                             bidx,
                             flip,
                             std::move(him),
                             std::move(frames)};
    corr.descriptor.source = cov.sig.canonical();
    corr.descriptor.target = fam.y.canonical();
    corr.descriptor.degree = cov.degree;
    corr.descriptor.kind = cov.degree == 1 ? CoverKind::Equivalence : side;
    corr.descriptor.ramification_profile = ramification_from_map(corr);
    corr.descriptor.balanced = profile_balanced(corr.descriptor.ramification_profile);
    return corr;
}

CoverCorrespondence construct_lemma7_map(const CoverDescriptor& desc) {
    if (desc.kind == CoverKind::Composition)
        throw domain_error("construct_lemma7_map: build a composition one leg at a time");
    const auto csrc = desc.source.canonical();
    const auto ctgt = desc.target.canonical();

    auto build = [&](long a1, long a2, int leg, bool inverted) {
        CoverCorrespondence corr = construct_family_map(lemma7_family(a1, a2), leg);
        const auto& built = corr.descriptor;
        const auto& want_src = inverted ? built.target : built.source;
        const auto& want_tgt = inverted ? built.source : built.target;
        if (!(want_src == csrc && want_tgt == ctgt && built.degree == desc.degree))
            throw domain_error("construct_lemma7_map: descriptor does not match the family");
        if (desc.kind != built.kind)
            throw domain_error("construct_lemma7_map: descriptor kind does not match");
        if (inverted) {
            corr.inverted = true;
            corr.descriptor.source = csrc;
            corr.descriptor.target = ctgt;
            corr.descriptor.ramification_profile = ramification_from_map(corr);
            corr.descriptor.balanced =
                profile_balanced(corr.descriptor.ramification_profile);
        }
        if (!desc.ramification_profile.empty() &&
            desc.ramification_profile != corr.descriptor.ramification_profile)
            throw domain_error("construct_lemma7_map: ramification profile does not match");
        return corr;
    };

    if (desc.kind == CoverKind::F1 || desc.kind == CoverKind::F2) {
        if (desc.degree != 2)
            throw domain_error("construct_lemma7_map: doubling covers have degree 2");
        const auto& e = csrc.entries();
        long p = -1, d = -1;
        if (e[0] == e[1] && e[2] % 2 == 0) {
            p = e[0];
            d = e[2];
        } else if (e[1] == e[2] && e[0] % 2 == 0) {
            p = e[1];
            d = e[0];
        }
        if (p < 0 || p % 2 == 0)
            throw domain_error(
                "construct_lemma7_map: source is not a doubled isosceles unfolding");
        if (desc.kind == CoverKind::F1) return build(p, d / 2, 1, false);
        return build(d / 2, p, 2, false);
    }

    if (desc.degree != 1)
        throw domain_error("construct_lemma7_map: an equivalence has degree 1");
    auto try_iso = [&](const TriangleSignature& iso, const TriangleSignature& other,
                       bool inverted) -> std::optional<CoverCorrespondence> {
        const auto& e = iso.entries();
        std::vector<std::pair<long, long>> cand;
        if (e[0] == e[1] && e[2] % 2 == 1) cand.emplace_back(e[0], e[2]);
        if (e[1] == e[2] && e[0] % 2 == 1) cand.emplace_back(e[1], e[0]);
        for (auto [h, b] : cand)
            if (lemma7_family(2 * h, b).y.canonical() == other)
                return build(2 * h, b, 1, inverted);
        return std::nullopt;
    };
    if (auto corr = try_iso(csrc, ctgt, false)) return std::move(*corr);
    if (auto corr = try_iso(ctgt, csrc, true)) return std::move(*corr);
    throw domain_error("construct_lemma7_map: endpoints are not a doubling-equivalent pair");
}

bool verify_map(const CoverCorrespondence& corr) {
    const auto& x = corr.x;
    const auto& y = corr.y;
    const long nc = x.num_copies();
    if (static_cast<long>(corr.half_image.size()) != nc ||
        static_cast<long>(corr.copy_frame.size()) != nc)
        return false;
    const long n = corr.descriptor.degree;
    if (n * y.Q() != 2 * x.Q()) return false;

    const auto xsig = x.signature().canonical();
    const auto ysig = y.signature().canonical();
    const auto& d = corr.descriptor;
    if (!corr.inverted &&
        !(d.source.canonical() == xsig && d.target.canonical() == ysig))
        return false;
    if (corr.inverted &&
        !(n == 1 && d.source.canonical() == ysig && d.target.canonical() == xsig))
        return false;

    std::vector<long> fiber(y.num_copies(), 0);
    for (const auto& row : corr.half_image)
        for (long img : row) {
            if (img < 0 || img >= y.num_copies()) return false;
            ++fiber[img];
        }
    for (long f : fiber)
        if (f != n) return false;

    const TemplateData tmpl = make_template(y, corr.side);
    LinearAction act{y, {}};
    for (long c = 0; c < nc; ++c) {
        for (int h = 0; h < 2; ++h) {
            const long img = corr.half_image[c][h];
            if (corr.half_image[c][1 - h] != y.glued_to({img, tmpl.alt_side}).copy)
                return false;
            if (corr.half_image[x.glued_to({c, corr.apex_index}).copy][h] !=
                y.glued_to({img, tmpl.base_side}).copy)
                return false;
            if (corr.half_image[x.glued_to({c, corr.base_index[1 - h]}).copy][h] !=
                y.glued_to({img, 1}).copy)
                return false;

            const Vec2& end = (h ^ corr.seed_flip) ? tmpl.b1 : tmpl.b0;
            const auto verts = y.copy_vertices(img);
            if (!(act.apply(corr.copy_frame[c], end) ==
                  verts[tmpl.base_y - 1] - verts[0]))
                return false;
            if (!(act.apply(corr.copy_frame[c], tmpl.apex) ==
                  verts[tmpl.apex_y - 1] - verts[0]))
                return false;
        }
    }

    const auto& xt = x.base_triangle();
    auto d2 = [](const Vec2& u, const Vec2& v) {
        Vec2 w = u - v;
        return dot(w, w);
    };
    const Vec2& xa = xt[corr.apex_index - 1];
    const Vec2& x0 = xt[corr.base_index[0] - 1];
    const Vec2& x1 = xt[corr.base_index[1] - 1];
    return d2(xa, x0) == d2(tmpl.apex, tmpl.b0) &&
           d2(xa, x1) == d2(tmpl.apex, tmpl.b1) &&
           d2(x0, x1) == d2(tmpl.b0, tmpl.b1);
}

std::vector<RamificationEntry> ramification_from_map(const CoverCorrespondence& corr) {
    const auto& x = corr.x;
    const auto& y = corr.y;
    const auto yorbs = y.vertex_orbits();
    const auto spos = canonical_positions(x.signature());
    const auto tpos = canonical_positions(y.signature());
    const int apex_y = corr.side == CoverKind::F1 ? 3 : 2;
    const int base_y = corr.side == CoverKind::F1 ? 2 : 3;
    const long n = 2 * x.Q() / y.Q();

    std::map<std::tuple<int, int, long>, long> agg;
    long rh = 0;
    for (const auto& orb : x.vertex_orbits()) {
        if (orb.cone_turns <= 1) continue;
        const int cls = orb.cls;
        const int ylab = cls == corr.apex_index ? apex_y : base_y;
        long oid = -1;
        auto see = [&](long c, int h) {
            long o = y.orbit_of(corr.half_image[c][h], ylab);
            if (oid < 0)
                oid = o;
            else if (oid != o)
                throw map_inconsistent(
                    "ramification_from_map: orbit image not well defined");
        };
        for (long c : orb.copies) {
            if (cls == corr.apex_index) {
                see(c, 0);
                see(c, 1);
            } else {
                see(c, cls == corr.base_index[0] ? 0 : 1);
            }
        }
        const long ty = yorbs[oid].cone_turns;
        if (orb.cone_turns % ty != 0)
            throw map_inconsistent("ramification_from_map: cone turns do not divide");
        const long m = orb.cone_turns / ty;
        if (m < 1 || m > n)
            throw map_inconsistent("ramification_from_map: multiplicity out of range");
        agg[{spos[cls - 1], ty > 1 ? tpos[ylab - 1] : 0, m}] += 1;
        rh += m - 1;
    }
    const long expect = (2 * x.signature().genus() - 2) - n * (2 * y.signature().genus() - 2);
    if (rh != expect)
        throw map_inconsistent("ramification_from_map: Riemann-Hurwitz total mismatch");

    std::vector<RamificationEntry> out;
    for (const auto& [key, count] : agg)
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
    std::sort(out.begin(), out.end());
    if (corr.inverted) {
        for (auto& e : out) {
            if (e.multiplicity != 1 || e.target_class == 0)
                throw map_inconsistent(
                    "ramification_from_map: equivalence profile not invertible");
            std::swap(e.source_class, e.target_class);
        }
        std::sort(out.begin(), out.end());
    }
    return out;
}

std::vector<RamificationEntry> composed_ramification(const CoverCorrespondence& odd_leg,
                                                     const CoverCorrespondence& even_leg) {
    if (odd_leg.inverted || even_leg.inverted)
        throw domain_error("composed_ramification: legs must be in construction direction");
    if (!(odd_leg.y.signature() == even_leg.y.signature()))
        throw domain_error("composed_ramification: legs share no common target");
    if (odd_leg.descriptor.degree != 2 || even_leg.descriptor.degree != 1)
        throw domain_error("composed_ramification: need a degree-2 leg and a bijection");

    auto image_orbit = [](const CoverCorrespondence& corr, const VertexOrbit& orb) {
        const int apex_y = corr.side == CoverKind::F1 ? 3 : 2;
        const int base_y = corr.side == CoverKind::F1 ? 2 : 3;
        const long c = orb.copies.front();
        const int h = orb.cls == corr.apex_index
                          ? 0
                          : (orb.cls == corr.base_index[0] ? 0 : 1);
        const int ylab = orb.cls == corr.apex_index ? apex_y : base_y;
        return corr.y.orbit_of(corr.half_image[c][h], ylab);
    };

    const auto eorbs = even_leg.x.vertex_orbits();
    std::vector<long> pre(even_leg.y.vertex_orbits().size(), -1);
    for (std::size_t k = 0; k < eorbs.size(); ++k) {
        const long oid = image_orbit(even_leg, eorbs[k]);
        if (pre[oid] >= 0)
            throw map_inconsistent("composed_ramification: bijection image collision");
        pre[oid] = static_cast<long>(k);
    }

    const auto spos = canonical_positions(odd_leg.x.signature());
    const auto tpos = canonical_positions(even_leg.x.signature());
    std::map<std::tuple<int, int, long>, long> agg;
    long rh = 0;
    for (const auto& orb : odd_leg.x.vertex_orbits()) {
        if (orb.cone_turns <= 1) continue;
        const long k = pre[image_orbit(odd_leg, orb)];
        long ty = 1;
        int tgt = 0;
        if (k >= 0) {
            ty = eorbs[k].cone_turns;
            if (ty > 1) tgt = tpos[eorbs[k].cls - 1];
        }
        if (orb.cone_turns % ty != 0)
            throw map_inconsistent("composed_ramification: cone turns do not divide");
        const long m = orb.cone_turns / ty;
        agg[{spos[orb.cls - 1], tgt, m}] += 1;
        rh += m - 1;
    }
    const long expect = (2 * odd_leg.x.signature().genus() - 2) -
                        2 * (2 * even_leg.x.signature().genus() - 2);
    if (rh != expect)
        throw map_inconsistent("composed_ramification: Riemann-Hurwitz total mismatch");

    std::vector<RamificationEntry> out;
    for (const auto& [key, count] : agg)
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), count});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tribill
