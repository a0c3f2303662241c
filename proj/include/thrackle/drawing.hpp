#pragma once

#include <map>
#include <string>
#include <vector>

#include "thrackle/geom.hpp"
#include "thrackle/graph.hpp"

namespace thrackle {

/// Great-circle drawing: one unit position per vertex, one geodesic arc per
/// edge. Arcs are derived from positions and long_flags; arc i starts at the
/// first endpoint of edge i and ends at the second.
struct SphericalDrawing {
  Graph graph;
  std::vector<UnitVec3> positions;
  std::vector<bool> long_flags;
  std::vector<GeodesicArc> arcs;
};

/// Straight-line drawing in the plane.
struct PlanarDrawing {
  Graph graph;
  std::vector<Vec2> positions;
};

enum class DrawingKind { Spherical, Planar };

/// Serializable container; exactly one payload is active, selected by kind.
struct DrawingDocument {
  DrawingKind kind = DrawingKind::Spherical;
  SphericalDrawing spherical;
  PlanarDrawing planar;
  std::map<std::string, std::string> meta;
};

/// Realizes each edge as the short arc between its endpoints, or the
/// complementary long arc where the flag is set. Throws DegeneratePairError
/// when any two positions are near-coincident or near-antipodal and
/// ExactlyPiError when an edge cannot be classed as short or long.
SphericalDrawing build_spherical_drawing(const Graph& g, const std::vector<UnitVec3>& positions,
                                         const std::vector<bool>& long_flags,
                                         const Tolerances& tol = {});

/// Gnomonic lift into the open upper hemisphere: coordinates are scaled into
/// the half-unit disk, then (x, y) maps to normalize(x, y, 1). Every edge
/// becomes a short arc; straight-line meeting structure is preserved.
SphericalDrawing lift_planar_to_sphere(const PlanarDrawing& d, const Tolerances& tol = {});

DrawingDocument document_of(SphericalDrawing d, std::map<std::string, std::string> meta = {});
DrawingDocument document_of(PlanarDrawing d, std::map<std::string, std::string> meta = {});

}  // namespace thrackle
