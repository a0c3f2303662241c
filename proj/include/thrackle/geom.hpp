#pragma once

#include <cmath>
#include <vector>

#include "thrackle/errors.hpp"

namespace thrackle {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Comparison bands used by the kernel. `norm` bounds drift from unit length,
/// `side` is the which-side band for signed distances and arc parameters, and
/// `degenerate` is the band below which two circles count as one.
struct Tolerances {
  double norm = 1e-12;
  double side = 1e-9;
  double degenerate = 1e-9;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Point on the unit sphere. Factories keep the unit invariant; aggregate
/// construction is for literal axis points in tests and callers that already
/// hold unit data.
struct UnitVec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;

  operator Vec3() const { return {x, y, z}; }
  Vec3 vec() const { return {x, y, z}; }
};

/// Normalizes `v`. Raises on vectors too close to zero to carry a direction.
UnitVec3 normalized(const Vec3& v);

inline UnitVec3 antipode(const UnitVec3& p) { return {-p.x, -p.y, -p.z}; }
inline bool is_unit(const UnitVec3& p, double eps = Tolerances{}.norm) {
  return std::fabs(dot(p, p) - 1.0) <= 2.0 * eps;
}

/// Angle in [0, pi] between two unit vectors.
double angle_between(const UnitVec3& a, const UnitVec3& b);

/// Right-handed orthonormal pair spanning the tangent plane at `p`.
void tangent_basis(const UnitVec3& p, Vec3& u1, Vec3& u2);

/// Oriented great circle, stored as its pole. Points with dot(pole, p) > 0
/// are on the Plus side.
struct GreatCircle {
  UnitVec3 pole;
};

enum class Side { Plus, Minus, On };

Side side(const GreatCircle& c, const UnitVec3& p, const Tolerances& tol = {});

/// Unique great circle through two points that are neither coincident nor
/// antipodal. Raises DegeneratePairError otherwise.
GreatCircle great_circle_through(const UnitVec3& p, const UnitVec3& q,
                                 const Tolerances& tol = {});

/// Directed geodesic arc: travel from `start` counterclockwise around `pole`
/// for `length` radians. Lengths over pi wrap past the antipode of `start`,
/// so the representation covers long edges without a sign convention.
struct GeodesicArc {
  UnitVec3 start;
  UnitVec3 pole;  // perpendicular to start
  double length = 0.0;  // in (0, 2*pi)
};

/// Validating constructor for GeodesicArc.
GeodesicArc make_arc(const UnitVec3& start, const UnitVec3& pole, double length,
                     const Tolerances& tol = {});

/// Shorter of the two arcs from `p` to `q`; raises DegeneratePairError when
/// no unique one exists.
GeodesicArc short_arc_between(const UnitVec3& p, const UnitVec3& q,
                              const Tolerances& tol = {});
/// Longer of the two arcs from `p` to `q`.
GeodesicArc long_arc_between(const UnitVec3& p, const UnitVec3& q,
                             const Tolerances& tol = {});

/// Point at normalized parameter t in [0, 1] along the arc.
UnitVec3 arc_point_at(const GeodesicArc& a, double t);
inline UnitVec3 arc_endpoint(const GeodesicArc& a) { return arc_point_at(a, 1.0); }
/// Unit tangent in the direction of travel at normalized parameter t.
Vec3 arc_direction_at(const GeodesicArc& a, double t);
inline GreatCircle arc_circle(const GeodesicArc& a) { return {a.pole}; }

/// Angle in [0, 2*pi) swept from the arc start to the projection of `p` onto
/// the arc's circle.
double arc_angle_of(const GeodesicArc& a, const UnitVec3& p);

/// Whether `p` lies on the arc. With `include_endpoints` false the tolerance
/// band around both endpoints is excluded.
bool arc_contains(const GeodesicArc& a, const UnitVec3& p, bool include_endpoints = true,
                  const Tolerances& tol = {});

enum class MeetingKind { SharedEndpoint, TransversalCrossing, Degenerate };

struct Meeting {
  UnitVec3 point;
  MeetingKind kind = MeetingKind::Degenerate;
};

/// All meetings of two arcs. Arcs on distinct circles meet in at most two
/// points (the intersection pair of their circles, filtered by containment);
/// a point that is an endpoint of both arcs is a SharedEndpoint, a point
/// interior to both is a TransversalCrossing, and an endpoint resting on the
/// other arc's interior is Degenerate. Arcs on one common circle that touch
/// at all yield a single Degenerate meeting: contact without a transversal
/// crossing is tangential no matter how small the overlap.
std::vector<Meeting> arc_arc_meetings(const GeodesicArc& a, const GeodesicArc& b,
                                      const Tolerances& tol = {});

enum class LengthClass { Short, Long };

/// Short means length < pi. Raises ExactlyPiError inside the degenerate band
/// around pi where the classification would be meaningless.
LengthClass edge_length_class(const GeodesicArc& a, const Tolerances& tol = {});

// Planar companions used by the flat verifier and renderer.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Vec2& a, double s) { return {a.x * s, a.y * s}; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::sqrt(dot(a, a)); }

struct PlanarMeeting {
  Vec2 point;
  MeetingKind kind = MeetingKind::Degenerate;
};

/// All meetings of two closed segments, classified like arc_arc_meetings.
/// Collinear segments that touch or overlap are a single Degenerate meeting.
std::vector<PlanarMeeting> segment_meetings(const Vec2& p0, const Vec2& p1, const Vec2& q0,
                                            const Vec2& q1, const Tolerances& tol = {});

}  // namespace thrackle
