#pragma once

#include "pentlab/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pentlab {

// A static SVG 1.1 figure in world coordinates (y up). Output is byte-deterministic.
struct SvgScene {
    std::vector<std::vector<Vec>> polygons;  // closed polylines, one color per entry
    std::vector<std::pair<Vec, Vec>> diagonals;  // dashed segments
    std::vector<Vec> dots;
    std::vector<std::pair<Vec, Vec>> axes;  // thin reference lines
    std::optional<Vec> marker;  // collapse point

    std::string render(int width = 600) const;
};

// Decimal rendering with 12 significant digits.
std::string svg_number(const Rational& x);

}  // namespace pentlab
