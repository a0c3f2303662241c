#include "thrackle/geom.hpp"

#include <algorithm>
#include <cmath>

namespace thrackle {

namespace {

double clamp_unit(double v) { return std::max(-1.0, std::min(1.0, v)); }

double wrap_two_pi(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// Second basis vector of the arc's circle frame; point(theta) =
// start*cos(theta) + seat*sin(theta).
Vec3 arc_seat(const GeodesicArc& a) { return cross(a.pole.vec(), a.start.vec()); }

// Containment of a swept angle against [0, len] with an angular band around
// both endpoints. Returns -1 outside, 0 on an endpoint, +1 interior.
int angle_containment(double theta, double len, double band) {
  if (theta >= kTwoPi - band || theta <= band) return 0;        // start
  if (std::fabs(theta - len) <= band) return 0;                 // end
  if (theta > band && theta < len - band) return 1;
  return -1;
}


}  // namespace

UnitVec3 normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 1e-300)) throw Error("cannot normalize a vector of zero length");
  return UnitVec3{v.x / n, v.y / n, v.z / n};
}

double angle_between(const UnitVec3& a, const UnitVec3& b) {
  return std::acos(clamp_unit(dot(a, b)));
}

void tangent_basis(const UnitVec3& p, Vec3& u1, Vec3& u2) {
  const Vec3 axis = std::fabs(p.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
  u1 = normalized(cross(axis, p.vec())).vec();
  u2 = cross(p.vec(), u1);
}

Side side(const GreatCircle& c, const UnitVec3& p, const Tolerances& tol) {
  const double s = dot(c.pole, p);
  if (std::fabs(s) <= tol.side) return Side::On;
  return s > 0.0 ? Side::Plus : Side::Minus;
}

GreatCircle great_circle_through(const UnitVec3& p, const UnitVec3& q, const Tolerances& tol) {
  const Vec3 n = cross(p.vec(), q.vec());
  if (norm(n) < tol.degenerate)
    throw DegeneratePairError("points are coincident or antipodal; great circle not unique");
  return {normalized(n)};
}

GeodesicArc make_arc(const UnitVec3& start, const UnitVec3& pole, double length,
                     const Tolerances& tol) {
  if (!(length > 0.0) || !(length < kTwoPi))
    throw Error("arc length must lie strictly between 0 and 2*pi");
  if (!is_unit(start, 1e-9) || !is_unit(pole, 1e-9))
    throw Error("arc start and pole must be unit vectors");
  if (std::fabs(dot(start, pole)) > 1e-9)
    throw Error("arc pole must be perpendicular to its start");
  (void)tol;
  return {start, pole, length};
}

GeodesicArc short_arc_between(const UnitVec3& p, const UnitVec3& q, const Tolerances& tol) {
  const GreatCircle c = great_circle_through(p, q, tol);
  return {p, c.pole, angle_between(p, q)};
}

GeodesicArc long_arc_between(const UnitVec3& p, const UnitVec3& q, const Tolerances& tol) {
  const GreatCircle c = great_circle_through(p, q, tol);
  return {p, antipode(c.pole), kTwoPi - angle_between(p, q)};
}

UnitVec3 arc_point_at(const GeodesicArc& a, double t) {
  const double theta = t * a.length;
  const Vec3 p = a.start.vec() * std::cos(theta) + arc_seat(a) * std::sin(theta);
  return normalized(p);
}

Vec3 arc_direction_at(const GeodesicArc& a, double t) {
  const double theta = t * a.length;
  return normalized(arc_seat(a) * std::cos(theta) - a.start.vec() * std::sin(theta)).vec();
}

double arc_angle_of(const GeodesicArc& a, const UnitVec3& p) {
  return wrap_two_pi(std::atan2(dot(p.vec(), arc_seat(a)), dot(p.vec(), a.start.vec())));
}

bool arc_contains(const GeodesicArc& a, const UnitVec3& p, bool include_endpoints,
                  const Tolerances& tol) {
  if (std::fabs(dot(a.pole, p)) > tol.side) return false;
  const int c = angle_containment(arc_angle_of(a, p), a.length, tol.side);
  return include_endpoints ? c >= 0 : c == 1;
}

LengthClass edge_length_class(const GeodesicArc& a, const Tolerances& tol) {
  if (std::fabs(a.length - kPi) <= tol.degenerate)
    throw ExactlyPiError("arc length indistinguishable from pi");
  return a.length < kPi ? LengthClass::Short : LengthClass::Long;
}

namespace {

// Overlap of a second arc's angle interval with [0, len_a], both on one
// shared circle. Intervals are given as (start, sweep) with sweep > 0 in a's
// frame. Returns total overlap measure and a witness angle inside the
// largest component, plus the closest gap when there is no overlap.
struct CircularOverlap {
  double measure = 0.0;
  double witness = 0.0;
  double gap = kTwoPi;
  double touch = 0.0;  // witness angle for a touching contact
};

CircularOverlap circular_overlap(double b_start, double b_sweep, double len_a) {
  CircularOverlap out;
  const double s = wrap_two_pi(b_start);
  double best_component = 0.0;
  for (const double shift : {s - kTwoPi, s, s + kTwoPi}) {
    const double lo = std::max(0.0, shift);
    const double hi = std::min(len_a, shift + b_sweep);
    if (hi > lo) {
      out.measure += hi - lo;
      if (hi - lo > best_component) {
        best_component = hi - lo;
        out.witness = 0.5 * (lo + hi);
      }
    }
    for (const double be : {shift, shift + b_sweep})
      for (const double ae : {0.0, len_a}) {
        const double d = std::fabs(be - ae);
        if (d < out.gap) {
          out.gap = d;
          out.touch = ae;
        }
      }
  }
  return out;
}

}  // namespace

std::vector<Meeting> arc_arc_meetings(const GeodesicArc& a, const GeodesicArc& b,
                                      const Tolerances& tol) {
  std::vector<Meeting> out;
  const Vec3 n = cross(a.pole.vec(), b.pole.vec());
  const double nn = norm(n);

  if (nn < tol.degenerate) {
    // One common circle. Any contact is tangential: report one Degenerate
    // meeting whether the arcs overlap along a stretch or only touch.
    const bool same_orientation = dot(a.pole, b.pole) > 0.0;
    const double beta = arc_angle_of(a, b.start);
    const double b_start = same_orientation ? beta : beta - b.length;
    const CircularOverlap ov = circular_overlap(b_start, b.length, a.length);
    if (ov.measure > tol.side) {
      out.push_back({arc_point_at(a, ov.witness / a.length), MeetingKind::Degenerate});
    } else if (ov.gap <= tol.side || ov.measure > 0.0) {
      out.push_back({arc_point_at(a, ov.touch / a.length), MeetingKind::Degenerate});
    }
    return out;
  }

  const UnitVec3 w = normalized(n);
  for (const UnitVec3& cand : {w, antipode(w)}) {
    const int ca = angle_containment(arc_angle_of(a, cand), a.length, tol.side);
    const int cb = angle_containment(arc_angle_of(b, cand), b.length, tol.side);
    if (ca < 0 || cb < 0) continue;
    MeetingKind kind;
    if (ca == 0 && cb == 0)
      kind = MeetingKind::SharedEndpoint;
    else if (ca == 1 && cb == 1)
      kind = MeetingKind::TransversalCrossing;
    else
      kind = MeetingKind::Degenerate;
    out.push_back({cand, kind});
  }
  return out;
}

std::vector<PlanarMeeting> segment_meetings(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                                            const Vec2& q1, const Tolerances& tol) {
  std::vector<PlanarMeeting> out;
  const Vec2 d1 = p1 - p0;
  const Vec2 d2 = q1 - q0;
  const double l1 = norm(d1);
  const double l2 = norm(d2);
  if (l1 <= tol.side || l2 <= tol.side) throw Error("zero-length segment");

  // Perpendicular distances of q's endpoints from p's supporting line.
  const double h0 = cross2(d1, q0 - p0) / l1;
  const double h1 = cross2(d1, q1 - p0) / l1;

  if (std::fabs(h0) <= tol.side && std::fabs(h1) <= tol.side) {
    // Same supporting line: any contact is tangential, hence Degenerate.
    const double a0 = dot(d1, q0 - p0) / l1;
    const double a1 = dot(d1, q1 - p0) / l1;
    const double lo = std::max(0.0, std::min(a0, a1));
    const double hi = std::min(l1, std::max(a0, a1));
    if (hi >= lo - tol.side) {
      const double mid = 0.5 * (std::max(lo, 0.0) + std::min(hi, l1));
      out.push_back({p0 + d1 * (mid / l1), MeetingKind::Degenerate});
    }
    return out;
  }

  const double denom = cross2(d1, d2);
  if (std::fabs(denom) <= tol.side * l1 * l2) return out;  // parallel, distinct lines

  const double s = cross2(q0 - p0, d2) / denom;
  const double t = cross2(q0 - p0, d1) / denom;
  const double band_s = tol.side / l1;
  const double band_t = tol.side / l2;
  if (s < -band_s || s > 1.0 + band_s || t < -band_t || t > 1.0 + band_t) return out;

  const bool end_s = s <= band_s || s >= 1.0 - band_s;
  const bool end_t = t <= band_t || t >= 1.0 - band_t;
  MeetingKind kind;
  if (end_s && end_t)
    kind = MeetingKind::SharedEndpoint;
  else if (!end_s && !end_t)
    kind = MeetingKind::TransversalCrossing;
  else
    kind = MeetingKind::Degenerate;
  out.push_back({p0 + d1 * s, kind});
  return out;
}

}  // namespace thrackle
