#include "tribill/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "tribill/fingerprint.hpp"

namespace tribill {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct Frame {
    double min_x, max_y, scale, margin;
    double x(double v) const { return (v - min_x) * scale + margin; }
    double y(double v) const { return (max_y - v) * scale + margin; }
};

} // namespace

std::string to_svg(const UnfoldedSurface& surface, const SvgOptions& options) {
    long copies = surface.num_copies();
    std::vector<std::array<std::pair<double, double>, 3>> pts(copies);
    double min_x = std::numeric_limits<double>::max(), max_x = -min_x;
    double min_y = min_x, max_y = max_x;
    auto take = [&](double x, double y) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    };
    for (long c = 0; c < copies; ++c) {
        auto verts = surface.copy_vertices(c);
        for (int v = 0; v < 3; ++v) {
            pts[c][v] = {verts[v].x.to_double(), verts[v].y.to_double()};
            take(pts[c][v].first, pts[c][v].second);
        }
    }
    std::vector<std::array<std::pair<double, double>, 2>> extra;
    for (const auto& seg : options.overlay) {
        extra.push_back({std::pair{seg.a.x.to_double(), seg.a.y.to_double()},
                         std::pair{seg.b.x.to_double(), seg.b.y.to_double()}});
        take(extra.back()[0].first, extra.back()[0].second);
        take(extra.back()[1].first, extra.back()[1].second);
    }

    Frame f{min_x, max_y, options.pixels_per_unit, options.margin};
    double w = (max_x - min_x) * f.scale + 2 * options.margin;
    double h = (max_y - min_y) * f.scale + 2 * options.margin;

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
    for (long c = 0; c < copies; ++c) {
        out += "  <polygon points=\"";
        for (int v = 0; v < 3; ++v) {
            if (v) out += " ";
            out += fmt(f.x(pts[c][v].first)) + "," + fmt(f.y(pts[c][v].second));
        }
        out += std::string("\" fill=\"") + (surface.element(c).eps ? "#dce7f5" : "#f5efdc") +
               "\" stroke=\"none\"/>\n";
    }
    // one color per glued side pair, both partners drawn in it
    long pair_index = 0;
    for (long c = 0; c < copies; ++c)
        for (int side = 1; side <= 3; ++side) {
            EdgeSlot partner = surface.glued_to({c, side});
            if (partner.copy < c || (partner.copy == c && partner.side < side)) continue;
            long hue = (pair_index * 137) % 360;
            ++pair_index;
            std::string color = "hsl(" + std::to_string(hue) + ",65%,42%)";
            for (EdgeSlot slot : {EdgeSlot{c, side}, partner}) {
                const auto& tri = pts[slot.copy];
                const auto& a = tri[slot.side % 3];       // side s connects the two
                const auto& b = tri[(slot.side + 1) % 3]; // vertices other than s
                out += "  <line x1=\"" + fmt(f.x(a.first)) + "\" y1=\"" + fmt(f.y(a.second)) +
                       "\" x2=\"" + fmt(f.x(b.first)) + "\" y2=\"" + fmt(f.y(b.second)) +
                       "\" stroke=\"" + color + "\" stroke-width=\"1\"/>\n";
            }
        }
    for (const auto& seg : extra) {
        out += "  <line x1=\"" + fmt(f.x(seg[0].first)) + "\" y1=\"" + fmt(f.y(seg[0].second)) +
               "\" x2=\"" + fmt(f.x(seg[1].first)) + "\" y2=\"" + fmt(f.y(seg[1].second)) +
               "\" stroke=\"#111111\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

std::vector<SvgSegment> fingerprint_overlay(const UnfoldedSurface& surface, int vertex_class) {
    Fingerprint fp = fingerprint(surface.signature(), vertex_class, {}, surface.scale());
    int i = vertex_class;
    std::vector<SvgSegment> segs;
    for (long c = 0; c < surface.num_copies(); ++c) {
        auto verts = surface.copy_vertices(c);
        const Vec2& from = verts[i - 1];
        for (int target : fp.shortest_targets) {
            if (target != i) {
                segs.push_back({from, verts[target - 1]});
                continue;
            }
            // foot of the perpendicular dropped onto the opposite side
            const Vec2& p = verts[i % 3];
            const Vec2& q = verts[(i + 1) % 3];
            Vec2 d = q - p;
            RealCyclotomic t = dot(from - p, d) * dot(d, d).inverse();
            segs.push_back({from, p + t * d});
        }
    }
    return segs;
}

} // namespace tribill
