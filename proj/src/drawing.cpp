#include "thrackle/drawing.hpp"

#include <algorithm>
#include <cmath>

namespace thrackle {

SphericalDrawing build_spherical_drawing(const Graph& g, const std::vector<UnitVec3>& positions,
                                         const std::vector<bool>& long_flags,
                                         const Tolerances& tol) {
  require_simple(g);
  if (static_cast<int>(positions.size()) != g.n)
    throw Error("position count does not match vertex count");
  if (long_flags.size() != g.edges.size())
    throw Error("long flag count does not match edge count");
  for (const auto& p : positions)
    if (!is_unit(p, 1e-9)) throw Error("vertex positions must be unit vectors");
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      const double ang = angle_between(positions[u], positions[v]);
      if (ang < tol.degenerate)
        throw DegeneratePairError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                  " coincide");
      if (kPi - ang < tol.degenerate)
        throw DegeneratePairError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                                  " are antipodal");
    }

  SphericalDrawing d;
  d.graph = g;
  d.positions = positions;
  d.long_flags = long_flags;
  d.arcs.reserve(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    const double ang = angle_between(positions[u], positions[v]);
    const double len = long_flags[e] ? kTwoPi - ang : ang;
    if (std::fabs(len - kPi) <= tol.degenerate)
      throw ExactlyPiError("edge " + std::to_string(e) + " has length indistinguishable from pi");
    d.arcs.push_back(long_flags[e] ? long_arc_between(positions[u], positions[v], tol)
                                   : short_arc_between(positions[u], positions[v], tol));
  }
  return d;
}

SphericalDrawing lift_planar_to_sphere(const PlanarDrawing& d, const Tolerances& tol) {
  double max_norm = 0.0;
  for (const Vec2& p : d.positions) max_norm = std::max(max_norm, norm(p));
  const double scale = max_norm > tol.norm ? 0.5 / max_norm : 1.0;
  std::vector<UnitVec3> lifted;
  lifted.reserve(d.positions.size());
  for (const Vec2& p : d.positions)
    lifted.push_back(normalized(Vec3{p.x * scale, p.y * scale, 1.0}));
  return build_spherical_drawing(d.graph, lifted,
                                 std::vector<bool>(d.graph.edges.size(), false), tol);
}

DrawingDocument document_of(SphericalDrawing d, std::map<std::string, std::string> meta) {
  DrawingDocument doc;
  doc.kind = DrawingKind::Spherical;
  doc.spherical = std::move(d);
  doc.meta = std::move(meta);
  return doc;
}

DrawingDocument document_of(PlanarDrawing d, std::map<std::string, std::string> meta) {
  DrawingDocument doc;
  doc.kind = DrawingKind::Planar;
  doc.planar = std::move(d);
  doc.meta = std::move(meta);
  return doc;
}

}  // namespace thrackle
