#include "thrackle/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace thrackle {

PlanarDrawing construct_star_polygon_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    throw EvenCycleLengthError("star polygon cycle needs an odd length >= 3, got " +
                               std::to_string(n));
  PlanarDrawing d;
  d.graph = cycle_graph(n);
  const int step = (n - 1) / 2;
  for (int k = 0; k < n; ++k) {
    const double a = kTwoPi * static_cast<double>(step) * k / n;
    d.positions.push_back({std::cos(a), std::sin(a)});
  }
  return d;
}

PlanarDrawing construct_caterpillar_straight_line(const Graph& t) {
  if (!is_tree(t) || !is_caterpillar(t))
    throw NotACaterpillarError("straight-line construction needs a caterpillar tree");

  const std::vector<int> spine = diameter_paths(t).front();
  const int m = static_cast<int>(spine.size());
  std::vector<bool> on_spine(t.n, false);
  for (const int s : spine) on_spine[s] = true;

  // Leaves hang off internal spine vertices only: a neighbor of a spine
  // endpoint off the path would extend the diameter.
  const auto adj = adjacency(t);
  std::vector<std::vector<int>> leaves_of(t.n);
  for (int u = 0; u < t.n; ++u) {
    if (on_spine[u]) continue;
    if (adj[u].size() != 1)
      throw NotACaterpillarError("off-spine vertex " + std::to_string(u) + " is not a leaf");
    leaves_of[adj[u][0]].push_back(u);
  }

  // Two arcs of the circle: even spine vertices ++ leaves of the following
  // odd one, then leaves of the preceding even vertex ++ odd spine
  // vertices. Nonadjacent chords then interleave pairwise.
  std::vector<int> order;
  for (int j = 0; j < m; j += 2) {
    order.push_back(spine[j]);
    if (j + 1 < m)
      for (const int u : leaves_of[spine[j + 1]]) order.push_back(u);
  }
  for (int j = 1; j < m; j += 2) {
    for (const int u : leaves_of[spine[j - 1]]) order.push_back(u);
    order.push_back(spine[j]);
  }

  PlanarDrawing d;
  d.graph = t;
  d.positions.resize(t.n);
  for (int slot = 0; slot < t.n; ++slot) {
    const double a = kTwoPi * slot / t.n;
    d.positions[order[slot]] = {std::cos(a), std::sin(a)};
  }
  return d;
}

namespace {

void require_param(bool ok, const std::string& what) {
  if (!ok) throw ParamsViolateInequalitiesError(what);
}

// Range of distances from the north pole to the points of the circle with
// pole m that lie in the hemisphere {x >= 0}. through: a point on the circle.
std::pair<double, double> hub_distance_range(const UnitVec3& m, const UnitVec3& through) {
  const Vec3 c1 = through.vec();
  const Vec3 c2 = cross(m.vec(), c1);
  const Vec3 v{0.0, 0.0, 1.0};
  const Vec3 ex{1.0, 0.0, 0.0};

  const double hx = dot(ex, c1), hy = dot(ex, c2);
  const double vx = dot(v, c1), vy = dot(v, c2);
  const double rx = std::hypot(hx, hy);
  const double rv = std::hypot(vx, vy);

  std::vector<double> candidates;
  if (rx < 1e-12) {
    // whole circle sits on the hemisphere boundary
    candidates = {std::atan2(vy, vx), std::atan2(vy, vx) + kPi};
  } else {
    const double phix = std::atan2(hy, hx);
    candidates = {phix - kPi / 2, phix + kPi / 2};
    const double phiv = std::atan2(vy, vx);
    for (const double t : {phiv, phiv + kPi}) {
      const double x = rx * std::cos(t - phix);
      if (x >= -1e-12) candidates.push_back(t);
    }
  }
  double hmin = 1.0, hmax = -1.0;
  for (const double t : candidates) {
    const double h = rv * std::cos(t - std::atan2(vy, vx));
    hmin = std::min(hmin, h);
    hmax = std::max(hmax, h);
  }
  const auto clamp1 = [](double x) { return std::max(-1.0, std::min(1.0, x)); };
  return {std::acos(clamp1(hmax)), std::acos(clamp1(hmin))};
}

}  // namespace

SphericalDrawing construct_spider_3_2_gc(const SpiderConstructionParams& params) {
  const auto& p = params;
  require_param(p.l_e1 > 0.0 && p.l_e1 < kPi, "l_e1 must lie in (0, pi)");
  require_param(p.l_e2 > kPi && p.l_e2 < kTwoPi, "l_e2 must lie in (pi, 2pi)");
  require_param(p.min_e2 > 0.0 && p.max_e2 < kPi && p.min_e2 <= p.max_e2,
                "the distance envelope needs 0 < min_e2 <= max_e2 < pi");
  require_param(p.bearing_f > 0.0 && p.bearing_f < kPi / 2,
                "bearing_f must lie in (0, pi/2)");
  require_param(p.bearing_g > -kPi / 2 && p.bearing_g < 0.0,
                "bearing_g must lie in (-pi/2, 0)");
  require_param(p.l_f1 > p.max_e2 && p.l_f1 < kPi, "l_f1 must lie in (max_e2, pi)");
  require_param(p.l_g1 > p.max_e2 && p.l_g1 < kPi, "l_g1 must lie in (max_e2, pi)");
  require_param(p.p_f_dist > 0.0 && p.p_f_dist < p.min_e2 && p.p_f_dist < p.l_f1,
                "p_f must sit on f1 within min_e2 of the hub");
  require_param(p.p_g_dist > 0.0 && p.p_g_dist < p.min_e2 && p.p_g_dist < p.l_g1,
                "p_g must sit on g1 within min_e2 of the hub");
  require_param(p.f2_overshoot > 0.0 && p.g2_overshoot > 0.0,
                "overshoots must be positive");

  const UnitVec3 v{0.0, 0.0, 1.0};
  const Vec3 ex{1.0, 0.0, 0.0};
  const Vec3 ey{0.0, 1.0, 0.0};

  const auto walk = [&](const UnitVec3& from, const Vec3& dir, double len) {
    return normalized(from.vec() * std::cos(len) + dir * std::sin(len));
  };
  const auto at_bearing = [&](double b) { return ex * std::cos(b) + ey * std::sin(b); };

  // long leg: e1 along bearing 0, e2 on the tilted circle through a1
  const UnitVec3 a1 = walk(v, ex, p.l_e1);
  const Vec3 w2 = cross(a1.vec(), ey);  // in the xz-plane, orthogonal to a1
  const UnitVec3 pole_e2 =
      normalized(ey * std::cos(p.tilt_e2) + w2 * std::sin(p.tilt_e2));

  const auto [near_d, far_d] = hub_distance_range(pole_e2, a1);
  require_param(near_d >= p.min_e2 - 1e-9 && far_d <= p.max_e2 + 1e-9,
                "C(e2) leaves the claimed distance envelope inside the hemisphere");

  const GeodesicArc e2 = make_arc(a1, pole_e2, p.l_e2);
  const UnitVec3 a2 = arc_endpoint(e2);

  // short legs crossing C(e2) from opposite sides of C(e1)
  const UnitVec3 w_f = walk(v, at_bearing(p.bearing_f), p.l_f1);
  const UnitVec3 w_g = walk(v, at_bearing(p.bearing_g), p.l_g1);
  const UnitVec3 p_f = walk(v, at_bearing(p.bearing_f), p.p_f_dist);
  const UnitVec3 p_g = walk(v, at_bearing(p.bearing_g), p.p_g_dist);

  // closing edges: f2 from w_f through p_g, g2 from w_g through p_f
  const double reach_f = angle_between(w_f, p_g) + p.f2_overshoot;
  const double reach_g = angle_between(w_g, p_f) + p.g2_overshoot;
  require_param(reach_f < kPi, "f2 must stay short");
  require_param(reach_g < kPi, "g2 must stay short");
  const UnitVec3 x_f = arc_point_at(
      make_arc(w_f, normalized(cross(w_f.vec(), p_g.vec())), reach_f), 1.0);
  const UnitVec3 x_g = arc_point_at(
      make_arc(w_g, normalized(cross(w_g.vec(), p_f.vec())), reach_g), 1.0);

  Graph g;
  g.n = 7;
  g.edges = {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}};
  const std::vector<UnitVec3> positions{v, a1, a2, w_f, x_f, w_g, x_g};
  const std::vector<bool> long_flags{false, true, false, false, false, false};
  return build_spherical_drawing(g, positions, long_flags);
}

}  // namespace thrackle
