#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "arrowtips/render_program.hpp"

namespace arrowtips {

/// Fixed 4-decimal rendering with trailing zeros stripped and "-0" folded to "0".
std::string format_number(double v);

/// SVG path data for an outline in internal (y-up) coordinates. Circles become
/// two half-circle arcs.
std::string to_path_data(const Outline& outline);

struct SvgStyle {
    std::string paint = "#000000";
    double width = 1.0;
    LineCap cap = LineCap::butt;
    LineJoin join = LineJoin::miter;
};

/// Throws std::invalid_argument unless `color` is #rgb or #rrggbb.
void validate_paint(const std::string& color);

/// One <path> element for a drawable.
std::string path_element(const Drawable& drawable, const std::string& paint);

struct LabeledScene {
    std::string label;
    EvaluatedScene scene;
};

struct GridLayout {
    std::size_t columns = 1;
};

/// Deterministic SVG 1.1 document: scenes laid out row-major on a uniform grid,
/// one labeled group per scene. Each scene is flipped to y-down by its group
/// transform, so path data keeps internal coordinates.
std::string render_document(std::span<const LabeledScene> scenes, const GridLayout& layout,
                            const std::string& paint = "#000000");

}  // namespace arrowtips
