#pragma once

#include <string>
#include <vector>

#include "thrackle/drawing.hpp"

namespace thrackle {

enum class ThrackleStatus { Thrackle, NotThrackle, DegenerateGeometry };

struct PairRecord {
  int edge_a = 0;
  int edge_b = 0;
  std::vector<MeetingKind> kinds;  // one entry per meeting found
};

struct VerificationReport {
  ThrackleStatus status = ThrackleStatus::NotThrackle;
  bool is_thrackle = false;
  bool is_general_position = false;
  std::vector<PairRecord> pairs;
  std::vector<std::string> violations;
};

struct GeneralPositionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// General position on the sphere: no three vertices on one great circle,
/// no two coincident or antipodal.
GeneralPositionReport verify_general_position(const SphericalDrawing& d,
                                              const Tolerances& tol = {});

/// Thrackle test for either document kind. Every edge pair must meet exactly
/// once: adjacent pairs precisely at their shared vertex, nonadjacent pairs
/// in one transversal crossing. Any tangential or endpoint-on-interior
/// contact makes the status DegenerateGeometry.
VerificationReport verify_thrackle(const DrawingDocument& doc, const Tolerances& tol = {});

/// Which open side of circle c the interior of edge e occupies near its
/// endpoint v, judged from the arc's exact initial tangent direction.
/// Throws NotIncidentError when v is not an endpoint of e.
Side reaches_side(const SphericalDrawing& d, int e, int v, const GreatCircle& c,
                  const Tolerances& tol = {});

/// True iff two other edges at v reach v through opposite open sides of
/// e's great circle. Throws DegreeTooLowError when deg(v) < 3.
bool edge_separates_at(const SphericalDrawing& d, int e, int v, const Tolerances& tol = {});

/// True iff the path's end edge at v separates at v. The path is a sequence
/// of edge indices; one of its free endpoints must be v.
/// Throws NotAPathAtVertexError when the sequence is not a simple path at v.
bool path_separates_at(const SphericalDrawing& d, const std::vector<int>& path_edges, int v,
                       const Tolerances& tol = {});

/// True iff all edges at v leave it through one open half-plane of the
/// tangent plane (equivalently, one open hemisphere bounded by a great
/// circle through v).
bool is_pointed(const SphericalDrawing& d, int v, const Tolerances& tol = {});

struct LemmaAuditReport {
  std::vector<std::string> adjacent_long_violations;      // no two long edges share a vertex
  std::vector<std::string> separation_count_violations;   // >= k-2 always; == k-2 when pointed
  std::vector<std::string> long_terminal_violations;      // separating long edges end at leaves
  std::vector<std::string> short_path_violations;         // all-short vertices: separating paths <= 2 edges
  std::vector<int> separating_edge_count;                 // per vertex; -1 where degree < 3
  std::vector<bool> pointed;                               // per vertex
  bool all_pass() const {
    return adjacent_long_violations.empty() && separation_count_violations.empty() &&
           long_terminal_violations.empty() && short_path_violations.empty();
  }
};

/// Audits the four structural invariants that hold on every general-position
/// great-circle thrackle. Requires the drawing to verify first; pass
/// force = true to audit a failing drawing anyway.
/// Throws NotAThrackleError when the precondition fails and force is unset.
LemmaAuditReport lemma_audit(const SphericalDrawing& d, bool force = false,
                             const Tolerances& tol = {});

struct AlternationReport {
  std::vector<int> internal_spine;                 // internal vertices, spine order
  std::vector<bool> two_path_separates;            // per internal spine vertex
  std::vector<std::pair<int, int>> violations;     // adjacent internal pairs separating at both
  bool consistent() const { return violations.empty(); }
};

/// Checks the conjectured alternation along a spine: adjacent internal spine
/// vertices never both admit a separating 2-path.
AlternationReport conjecture3_audit(const SphericalDrawing& d, const std::vector<int>& spine,
                                    const Tolerances& tol = {});

}  // namespace thrackle
