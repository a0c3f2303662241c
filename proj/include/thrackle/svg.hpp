#pragma once

#include <string>

#include "thrackle/drawing.hpp"

namespace thrackle {

/// How to flatten a drawing onto the page. Orthographic projections view the
/// sphere along an axis; the planar projection draws 2D coordinates as-is.
struct Projection {
  enum class Kind { Orthographic, Planar };
  Kind kind = Kind::Orthographic;
  UnitVec3 axis{0, 0, 1};
};

/// Accepts "planar" or "orthographic:A" where A is one of x, y, z, -x, -y,
/// -z. Throws Error on anything else.
Projection parse_projection(const std::string& text);

/// Deterministic standalone SVG. Spherical arcs are sampled (at least 64
/// points per arc); portions on the far hemisphere are drawn dashed. The
/// projection kind must match the document kind.
std::string render_svg(const DrawingDocument& doc, const Projection& proj);

}  // namespace thrackle
