#ifndef TRIBILL_SVG_HPP
#define TRIBILL_SVG_HPP

#include <string>
#include <vector>

#include "tribill/unfolding.hpp"

namespace tribill {

struct SvgSegment {
    Vec2 a;
    Vec2 b;
};

struct SvgOptions {
    double pixels_per_unit = 60.0;
    double margin = 24.0;
    std::vector<SvgSegment> overlay; // drawn thicker than triangulation edges
};

// Deterministic SVG 1.1 document: one polygon per copy, every glued side
// pair drawn in a shared color, overlay segments on top. Coordinates are
// 12-significant-digit decimal approximations of the exact values.
std::string to_svg(const UnfoldedSurface& surface, const SvgOptions& options = {});

// Segments realizing the shortest saddle connections out of the given
// vertex class, one bundle per copy: the joining edge toward each achieving
// class, or the perpendicular half of the doubled-triangle connection when
// the class is its own nearest neighbor.
std::vector<SvgSegment> fingerprint_overlay(const UnfoldedSurface& surface, int vertex_class);

} // namespace tribill

#endif
