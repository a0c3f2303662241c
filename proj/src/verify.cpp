#include "thrackle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace thrackle {

namespace {

std::vector<std::vector<int>> incident_edges(const Graph& g) {
  std::vector<std::vector<int>> incident(g.n);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(static_cast<int>(e));
    incident[g.edges[e].second].push_back(static_cast<int>(e));
  }
  return incident;
}

// Unit tangent of arc e at its endpoint v, pointing into the arc.
Vec3 initial_tangent(const SphericalDrawing& d, int e, int v) {
  const auto [a, b] = d.graph.edges[e];
  if (a == v) return arc_direction_at(d.arcs[e], 0.0);
  if (b == v) return arc_direction_at(d.arcs[e], 1.0) * -1.0;
  throw NotIncidentError("edge " + std::to_string(e) + " is not incident to vertex " +
                         std::to_string(v));
}

std::string pair_label(int e, int f) {
  return "edges " + std::to_string(e) + " and " + std::to_string(f);
}

}  // namespace

GeneralPositionReport verify_general_position(const SphericalDrawing& d, const Tolerances& tol) {
  GeneralPositionReport report;
  const int n = d.graph.n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Vec3 c = cross(d.positions[i].vec(), d.positions[j].vec());
      if (norm(c) <= tol.side) {
        const bool same = dot(d.positions[i], d.positions[j]) > 0.0;
        report.violations.push_back("vertices " + std::to_string(i) + " and " +
                                    std::to_string(j) +
                                    (same ? " coincide" : " are antipodal"));
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (std::fabs(triple(d.positions[i].vec(), d.positions[j].vec(),
                             d.positions[k].vec())) <= tol.side)
          report.violations.push_back("vertices " + std::to_string(i) + ", " +
                                      std::to_string(j) + ", and " + std::to_string(k) +
                                      " lie on one great circle");
  report.ok = report.violations.empty();
  return report;
}

namespace {

// Shared meeting-rule evaluation: one meeting per pair; adjacent pairs meet
// exactly at the shared vertex, nonadjacent pairs in one transversal
// crossing. Meeting lists come from the geometry kernel per document kind.
struct PairScan {
  bool all_met = true;
  bool degenerate = false;
  std::vector<PairRecord> pairs;
  std::vector<std::string> violations;
};

template <typename MeetingsOf, typename AtSharedVertex>
PairScan scan_pairs(const Graph& g, const MeetingsOf& meetings_of,
                    const AtSharedVertex& at_shared_vertex) {
  PairScan scan;
  const int m = static_cast<int>(g.edges.size());
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      const auto meetings = meetings_of(e, f);
      PairRecord record;
      record.edge_a = e;
      record.edge_b = f;
      for (const auto& meeting : meetings) record.kinds.push_back(meeting.kind);
      const auto shared = shared_endpoint(g, e, f);

      for (const auto& meeting : meetings)
        if (meeting.kind == MeetingKind::Degenerate) {
          scan.degenerate = true;
          scan.violations.push_back(pair_label(e, f) + " touch tangentially");
        }

      if (meetings.empty()) {
        scan.all_met = false;
        scan.violations.push_back(pair_label(e, f) + " never meet");
      } else if (meetings.size() > 1) {
        scan.all_met = false;
        scan.violations.push_back(pair_label(e, f) + " meet " +
                                  std::to_string(meetings.size()) + " times");
      } else {
        const auto& meeting = meetings.front();
        if (shared) {
          if (meeting.kind == MeetingKind::SharedEndpoint && !at_shared_vertex(meeting, *shared)) {
            scan.all_met = false;
            scan.violations.push_back(pair_label(e, f) +
                                      " meet at an endpoint away from their shared vertex");
          } else if (meeting.kind == MeetingKind::TransversalCrossing) {
            scan.all_met = false;
            scan.violations.push_back(pair_label(e, f) +
                                      " are adjacent but meet in a crossing instead of their "
                                      "shared vertex");
          }
        } else if (meeting.kind == MeetingKind::SharedEndpoint) {
          scan.all_met = false;
          scan.violations.push_back(pair_label(e, f) +
                                    " are not adjacent but meet at endpoints");
        }
      }
      scan.pairs.push_back(std::move(record));
    }
  return scan;
}

VerificationReport report_of(PairScan scan, bool general_position) {
  VerificationReport report;
  report.pairs = std::move(scan.pairs);
  report.violations = std::move(scan.violations);
  report.is_general_position = general_position;
  if (scan.degenerate)
    report.status = ThrackleStatus::DegenerateGeometry;
  else
    report.status = scan.all_met ? ThrackleStatus::Thrackle : ThrackleStatus::NotThrackle;
  report.is_thrackle = report.status == ThrackleStatus::Thrackle;
  return report;
}

VerificationReport verify_spherical(const SphericalDrawing& d, const Tolerances& tol) {
  PairScan scan = scan_pairs(
      d.graph,
      [&](int e, int f) { return arc_arc_meetings(d.arcs[e], d.arcs[f], tol); },
      [&](const Meeting& meeting, int v) {
        return norm(meeting.point.vec() - d.positions[v].vec()) < 1e-7;
      });
  return report_of(std::move(scan), verify_general_position(d, tol).ok);
}

VerificationReport verify_planar(const PlanarDrawing& d, const Tolerances& tol) {
  const int n = d.graph.n;
  bool coincident = false;
  std::vector<std::string> position_violations;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (norm(d.positions[i] - d.positions[j]) <= tol.side) {
        coincident = true;
        position_violations.push_back("vertices " + std::to_string(i) + " and " +
                                      std::to_string(j) + " coincide");
      }

  bool general_position = !coincident;
  for (int i = 0; i < n && general_position; ++i)
    for (int j = i + 1; j < n && general_position; ++j)
      for (int k = j + 1; k < n; ++k)
        if (std::fabs(cross2(d.positions[j] - d.positions[i],
                             d.positions[k] - d.positions[i])) <= tol.side) {
          general_position = false;
          break;
        }

  PairScan scan = scan_pairs(
      d.graph,
      [&](int e, int f) {
        return segment_meetings(d.positions[d.graph.edges[e].first],
                                d.positions[d.graph.edges[e].second],
                                d.positions[d.graph.edges[f].first],
                                d.positions[d.graph.edges[f].second], tol);
      },
      [&](const PlanarMeeting& meeting, int v) {
        return norm(meeting.point - d.positions[v]) < 1e-7;
      });
  scan.degenerate |= coincident;
  scan.violations.insert(scan.violations.begin(), position_violations.begin(),
                         position_violations.end());
  return report_of(std::move(scan), general_position);
}

}  // namespace

VerificationReport verify_thrackle(const DrawingDocument& doc, const Tolerances& tol) {
  return doc.kind == DrawingKind::Spherical ? verify_spherical(doc.spherical, tol)
                                            : verify_planar(doc.planar, tol);
}

Side reaches_side(const SphericalDrawing& d, int e, int v, const GreatCircle& c,
                  const Tolerances& tol) {
  const Vec3 dir = initial_tangent(d, e, v);
  const double at_vertex = dot(c.pole, d.positions[v]);
  if (std::fabs(at_vertex) > tol.side) return at_vertex > 0.0 ? Side::Plus : Side::Minus;
  const double along = dot(c.pole.vec(), dir);
  if (std::fabs(along) <= tol.side) return Side::On;
  return along > 0.0 ? Side::Plus : Side::Minus;
}

bool edge_separates_at(const SphericalDrawing& d, int e, int v, const Tolerances& tol) {
  initial_tangent(d, e, v);  // validates incidence
  const auto incident = incident_edges(d.graph);
  if (incident[v].size() < 3)
    throw DegreeTooLowError("separation needs degree 3 at vertex " + std::to_string(v));
  const GreatCircle c = arc_circle(d.arcs[e]);
  bool plus = false, minus = false;
  for (const int f : incident[v]) {
    if (f == e) continue;
    const Side s = reaches_side(d, f, v, c, tol);
    plus = plus || s == Side::Plus;
    minus = minus || s == Side::Minus;
  }
  return plus && minus;
}

bool path_separates_at(const SphericalDrawing& d, const std::vector<int>& path_edges, int v,
                       const Tolerances& tol) {
  if (path_edges.empty()) throw NotAPathAtVertexError("empty edge sequence");
  const auto& edges = d.graph.edges;
  for (const int e : path_edges)
    if (e < 0 || e >= static_cast<int>(edges.size()))
      throw NotAPathAtVertexError("edge index out of range");

  std::vector<int> chain;
  if (path_edges.size() == 1) {
    chain = {edges[path_edges[0]].first, edges[path_edges[0]].second};
  } else {
    const auto first_shared = shared_endpoint(d.graph, path_edges[0], path_edges[1]);
    if (!first_shared) throw NotAPathAtVertexError("edges do not chain");
    const auto [a, b] = edges[path_edges[0]];
    chain = {a == *first_shared ? b : a, *first_shared};
    for (size_t i = 1; i < path_edges.size(); ++i) {
      const auto [c1, c2] = edges[path_edges[i]];
      if (c1 == chain.back())
        chain.push_back(c2);
      else if (c2 == chain.back())
        chain.push_back(c1);
      else
        throw NotAPathAtVertexError("edges do not chain");
    }
  }
  if (std::set<int>(chain.begin(), chain.end()).size() != chain.size())
    throw NotAPathAtVertexError("sequence revisits a vertex");

  int end_edge = -1;
  if (chain.front() == v)
    end_edge = path_edges.front();
  else if (chain.back() == v)
    end_edge = path_edges.back();
  else
    throw NotAPathAtVertexError("path does not end at vertex " + std::to_string(v));
  return edge_separates_at(d, end_edge, v, tol);
}

bool is_pointed(const SphericalDrawing& d, int v, const Tolerances& tol) {
  (void)tol;
  const auto incident = incident_edges(d.graph);
  if (incident[v].size() <= 1) return true;
  Vec3 u1, u2;
  tangent_basis(d.positions[v], u1, u2);
  std::vector<double> bearings;
  for (const int e : incident[v]) {
    const Vec3 t = initial_tangent(d, e, v);
    bearings.push_back(std::atan2(dot(t, u2), dot(t, u1)));
  }
  std::sort(bearings.begin(), bearings.end());
  double widest = bearings.front() + kTwoPi - bearings.back();
  for (size_t i = 1; i < bearings.size(); ++i)
    widest = std::max(widest, bearings[i] - bearings[i - 1]);
  return widest > kPi;
}

LemmaAuditReport lemma_audit(const SphericalDrawing& d, bool force, const Tolerances& tol) {
  const VerificationReport verification = verify_spherical(d, tol);
  if (!(verification.is_thrackle && verification.is_general_position) && !force)
    throw NotAThrackleError("drawing is not a verified general-position thrackle");

  const Graph& g = d.graph;
  const auto incident = incident_edges(g);
  const auto deg = vertex_degrees(g);
  const auto adj = adjacency(g);

  std::vector<bool> is_long(g.edges.size());
  for (size_t e = 0; e < g.edges.size(); ++e)
    is_long[e] = edge_length_class(d.arcs[e], tol) == LengthClass::Long;

  LemmaAuditReport report;
  report.pointed.resize(g.n);
  report.separating_edge_count.assign(g.n, -1);
  for (int v = 0; v < g.n; ++v) report.pointed[v] = is_pointed(d, v, tol);

  // No two long edges may share a vertex.
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> longs;
    for (const int e : incident[v])
      if (is_long[e]) longs.push_back(e);
    if (longs.size() >= 2) {
      std::ostringstream w;
      w << "vertex " << v << " has adjacent long edges";
      for (const int e : longs) w << " " << e;
      report.adjacent_long_violations.push_back(w.str());
    }
  }

  // Separation counts: at degree k >= 3, at least k-2 edges separate, and
  // exactly k-2 at pointed vertices.
  std::vector<std::vector<bool>> separates(g.edges.size(), std::vector<bool>(g.n, false));
  for (int v = 0; v < g.n; ++v) {
    if (deg[v] < 3) continue;
    int count = 0;
    for (const int e : incident[v]) {
      const bool s = edge_separates_at(d, e, v, tol);
      separates[e][v] = s;
      count += s;
    }
    report.separating_edge_count[v] = count;
    if (count < deg[v] - 2) {
      std::ostringstream w;
      w << "vertex " << v << " of degree " << deg[v] << " has only " << count
        << " separating edges";
      report.separation_count_violations.push_back(w.str());
    } else if (report.pointed[v] && count != deg[v] - 2) {
      std::ostringstream w;
      w << "pointed vertex " << v << " of degree " << deg[v] << " has " << count
        << " separating edges instead of " << deg[v] - 2;
      report.separation_count_violations.push_back(w.str());
    }
  }

  // A long edge that separates must end at a leaf.
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (!is_long[e]) continue;
    for (const int v : {g.edges[e].first, g.edges[e].second}) {
      if (deg[v] < 3 || !separates[e][v]) continue;
      const int far = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      if (deg[far] != 1) {
        std::ostringstream w;
        w << "long edge " << e << " separates at vertex " << v << " but vertex " << far
          << " is not a leaf";
        report.long_terminal_violations.push_back(w.str());
      }
    }
  }

  // At vertices whose edges are all short, separating paths stay short: no
  // simple 3-edge path whose first edge separates.
  for (int v = 0; v < g.n; ++v) {
    if (deg[v] < 3) continue;
    bool all_short = true;
    for (const int e : incident[v]) all_short = all_short && !is_long[e];
    if (!all_short) continue;
    for (const int e : incident[v]) {
      if (!separates[e][v]) continue;
      // Is there a simple continuation making a 3-edge path from v?
      const int w1 = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
      bool found = false;
      for (const int w2 : adj[w1]) {
        if (found || w2 == v) continue;
        for (const int w3 : adj[w2]) {
          if (w3 == v || w3 == w1) continue;
          std::ostringstream w;
          w << "vertex " << v << " has a separating 3-edge path through vertices " << w1 << " "
            << w2 << " " << w3;
          report.short_path_violations.push_back(w.str());
          found = true;
          break;
        }
      }
    }
  }
  return report;
}

AlternationReport conjecture3_audit(const SphericalDrawing& d, const std::vector<int>& spine,
                                    const Tolerances& tol) {
  AlternationReport report;
  if (spine.size() < 3) return report;
  const Graph& g = d.graph;
  const auto incident = incident_edges(g);
  const auto adj = adjacency(g);
  const auto deg = vertex_degrees(g);

  for (size_t i = 1; i + 1 < spine.size(); ++i) {
    const int v = spine[i];
    report.internal_spine.push_back(v);
    bool separates_two_path = false;
    if (deg[v] >= 3) {
      for (const int e : incident[v]) {
        if (!edge_separates_at(d, e, v, tol)) continue;
        const int w1 = g.edges[e].first == v ? g.edges[e].second : g.edges[e].first;
        for (const int w2 : adj[w1])
          if (w2 != v) {
            separates_two_path = true;
            break;
          }
        if (separates_two_path) break;
      }
    }
    report.two_path_separates.push_back(separates_two_path);
  }
  for (size_t i = 0; i + 1 < report.internal_spine.size(); ++i)
    if (report.two_path_separates[i] && report.two_path_separates[i + 1])
      report.violations.emplace_back(report.internal_spine[i], report.internal_spine[i + 1]);
  return report;
}

}  // namespace thrackle
