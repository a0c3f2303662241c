#include "thrackle/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace thrackle {

namespace {

constexpr double kCanvas = 640.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);
  return buf;
}

void open_svg(std::ostringstream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
      << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
  out << "<style>\n"
         ".edge { fill: none; stroke: #1a1a1a; stroke-width: 1.6; }\n"
         ".edge.hidden { stroke: #9a9a9a; stroke-dasharray: 5 4; stroke-width: 1.2; }\n"
         ".vertex { fill: #1a1a1a; }\n"
         ".vertex.hidden { fill: #9a9a9a; }\n"
         ".horizon { fill: none; stroke: #c0c0c0; stroke-width: 1; }\n"
         "</style>\n";
}

void render_spherical(std::ostringstream& out, const SphericalDrawing& d, const UnitVec3& axis) {
  Vec3 b1, b2;
  tangent_basis(axis, b1, b2);
  const double cx = kCanvas / 2, cy = kCanvas / 2;
  const double radius = kCanvas / 2 - kMargin;
  const auto place_x = [&](const Vec3& p) { return cx + radius * dot(p, b1); };
  const auto place_y = [&](const Vec3& p) { return cy - radius * dot(p, b2); };

  out << "<circle class=\"horizon\" cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\""
      << fmt(radius) << "\"/>\n";

  for (const GeodesicArc& arc : d.arcs) {
    const int samples = std::max(64, static_cast<int>(std::ceil(arc.length * 64.0 / kPi)));
    // Split the sampled polyline into maximal front/back runs.
    std::vector<Vec3> run;
    bool run_front = true;
    const auto flush = [&]() {
      if (run.size() < 2) {
        run.clear();
        return;
      }
      out << "<polyline class=\"edge" << (run_front ? "" : " hidden") << "\" points=\"";
      for (size_t i = 0; i < run.size(); ++i) {
        if (i) out << " ";
        out << fmt(place_x(run[i])) << "," << fmt(place_y(run[i]));
      }
      out << "\"/>\n";
      run.clear();
    };
    for (int i = 0; i <= samples; ++i) {
      const Vec3 p = arc_point_at(arc, static_cast<double>(i) / samples).vec();
      const bool front = dot(p, axis.vec()) >= 0.0;
      if (!run.empty() && front != run_front) {
        run.push_back(p);  // share the boundary point so runs join up
        flush();
      }
      if (run.empty()) run_front = front;
      run.push_back(p);
    }
    flush();
  }

  for (const UnitVec3& p : d.positions) {
    const bool front = dot(p.vec(), axis.vec()) >= 0.0;
    out << "<circle class=\"vertex" << (front ? "" : " hidden") << "\" cx=\""
        << fmt(place_x(p.vec())) << "\" cy=\"" << fmt(place_y(p.vec())) << "\" r=\"4\"/>\n";
  }
}

void render_planar(std::ostringstream& out, const PlanarDrawing& d) {
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!d.positions.empty()) {
    lo_x = hi_x = d.positions[0].x;
    lo_y = hi_y = d.positions[0].y;
    for (const Vec2& p : d.positions) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double scale = (kCanvas - 2 * kMargin) / span;
  const double mid_x = (lo_x + hi_x) / 2, mid_y = (lo_y + hi_y) / 2;
  const auto place_x = [&](const Vec2& p) { return kCanvas / 2 + scale * (p.x - mid_x); };
  const auto place_y = [&](const Vec2& p) { return kCanvas / 2 - scale * (p.y - mid_y); };

  for (const auto& [u, v] : d.graph.edges)
    out << "<line class=\"edge\" x1=\"" << fmt(place_x(d.positions[u])) << "\" y1=\""
        << fmt(place_y(d.positions[u])) << "\" x2=\"" << fmt(place_x(d.positions[v]))
        << "\" y2=\"" << fmt(place_y(d.positions[v])) << "\"/>\n";

  for (const Vec2& p : d.positions)
    out << "<circle class=\"vertex\" cx=\"" << fmt(place_x(p)) << "\" cy=\"" << fmt(place_y(p))
        << "\" r=\"4\"/>\n";
}

}  // namespace

Projection parse_projection(const std::string& text) {
  if (text == "planar") return {Projection::Kind::Planar, {}};
  const std::string prefix = "orthographic:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string axis = text.substr(prefix.size());
    Projection proj;
    proj.kind = Projection::Kind::Orthographic;
    if (axis == "x") proj.axis = UnitVec3{1, 0, 0};
    else if (axis == "y") proj.axis = UnitVec3{0, 1, 0};
    else if (axis == "z") proj.axis = UnitVec3{0, 0, 1};
    else if (axis == "-x") proj.axis = UnitVec3{-1, 0, 0};
    else if (axis == "-y") proj.axis = UnitVec3{0, -1, 0};
    else if (axis == "-z") proj.axis = UnitVec3{0, 0, -1};
    else throw Error("unknown projection axis: " + axis);
    return proj;
  }
  throw Error("unknown projection: " + text);
}

std::string render_svg(const DrawingDocument& doc, const Projection& proj) {
  std::ostringstream out;
  open_svg(out);
  if (doc.kind == DrawingKind::Spherical) {
    if (proj.kind != Projection::Kind::Orthographic)
      throw Error("spherical documents need an orthographic projection");
    render_spherical(out, doc.spherical, proj.axis);
  } else {
    if (proj.kind != Projection::Kind::Planar)
      throw Error("planar documents need the planar projection");
    render_planar(out, doc.planar);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace thrackle
