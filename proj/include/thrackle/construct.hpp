#pragma once

#include "thrackle/drawing.hpp"

namespace thrackle {

/// Star polygon {n/k} with k = (n-1)/2: the n-cycle drawn with vertices on
/// the unit circle so that every nonadjacent chord pair crosses.
/// Throws EvenCycleLengthError unless n is odd and at least 3.
PlanarDrawing construct_star_polygon_cycle(int n);

/// Straight-line thrackle of a caterpillar: all vertices on the unit
/// circle, spine alternating between two arcs with leaves spliced in so
/// every segment pair crosses or shares a vertex.
/// Throws NotACaterpillarError when t is not a caterpillar tree.
PlanarDrawing construct_caterpillar_straight_line(const Graph& t);

/// Parameters for the great-circle spider drawing. The hub v sits at the
/// north pole on the boundary of the hemisphere S = {x >= 0}; edges leave v
/// with tangent direction cos(b)*x + sin(b)*y for bearing b. The long leg
/// runs v -> a1 (edge e1, bearing 0) -> a2 (edge e2, long); the other legs
/// are v -> w_f -> x_f and v -> w_g -> x_g. Angles in radians, lengths are
/// arc lengths on the unit sphere.
struct SpiderConstructionParams {
  double l_e1 = 0.60 * kPi;   // length of e1, in (0, pi)
  double l_e2 = 1.8333333333333333 * kPi;  // length of e2, in (pi, 2pi)
  // rotation of C(e2) about a1: pole = cos(tilt)*y + sin(tilt)*w2 where w2
  // completes {a1, y} to a right-handed frame
  double tilt_e2 = 0.5 * kPi;
  // claimed envelope of hub distances to C(e2) within S; the constructed
  // circle must stay inside it
  double min_e2 = 0.50 * kPi;
  double max_e2 = 0.60 * kPi;
  // first edges of the two short legs
  double bearing_f = 0.30 * kPi;
  double l_f1 = 0.8333333333333333 * kPi;   // in (max_e2, pi)
  double bearing_g = -0.2888888888888889 * kPi;
  double l_g1 = 0.6666666666666666 * kPi;   // in (max_e2, pi)
  // anchor points: p_f on f1 and p_g on g1, within min_e2 of the hub
  double p_f_dist = 0.15555555555555556 * kPi;
  double p_g_dist = 0.16666666666666666 * kPi;
  // how far f2 runs past p_g and g2 past p_f
  double f2_overshoot = 0.06666666666666667 * kPi;
  double g2_overshoot = 0.0777777777777778 * kPi;
};

/// Great-circle thrackle of the spider with three legs of length two.
/// Vertex order: hub, a1, a2, w_f, x_f, w_g, x_g; exactly edge e2 is long.
/// Throws ParamsViolateInequalitiesError when the parameters break the
/// construction's inequalities.
SphericalDrawing construct_spider_3_2_gc(const SpiderConstructionParams& params = {});

}  // namespace thrackle
