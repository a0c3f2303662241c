// Acceptance checks for the whole artifact: one pass/fail line per criterion.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "thrackle/construct.hpp"
#include "thrackle/drawing.hpp"
#include "thrackle/graph.hpp"
#include "thrackle/search.hpp"
#include "thrackle/verify.hpp"

namespace {

using namespace thrackle;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Every drawing any criterion verifies lands here; criterion 8 sweeps it.
std::vector<std::pair<int, int>> g_verified_sizes;  // (edge count, vertex count)
std::vector<SphericalDrawing> g_spherical_corpus;   // verified general-position drawings

void note_verified(const Graph& g) {
  g_verified_sizes.emplace_back(static_cast<int>(g.edges.size()), g.n);
}

/// Verifies a spherical drawing and, when it is a general-position thrackle,
/// records it in the shared corpus.
bool admit_spherical(const SphericalDrawing& d) {
  const VerificationReport rep = verify_thrackle(document_of(d));
  if (!rep.is_thrackle || !rep.is_general_position) return false;
  note_verified(d.graph);
  g_spherical_corpus.push_back(d);
  return true;
}

const PairRecord* find_pair(const VerificationReport& rep, int a, int b) {
  for (const auto& p : rep.pairs)
    if (p.edge_a == a && p.edge_b == b) return &p;
  return nullptr;
}

bool criterion_zigzag_path(std::string& detail) {
  PlanarDrawing d;
  d.graph = path_graph(4);
  d.positions = {{5, 1}, {6, 0}, {5, 0}, {6, 1}};
  Tolerances tol;
  tol.side = 1e-9;
  const auto t0 = Clock::now();
  const VerificationReport rep = verify_thrackle(document_of(d), tol);
  const double ms = ms_since(t0);
  if (!rep.is_thrackle) {
    detail = "zigzag path does not verify";
    return false;
  }
  note_verified(d.graph);
  const PairRecord* far_pair = find_pair(rep, 0, 2);
  if (far_pair == nullptr || far_pair->kinds.size() != 1 ||
      far_pair->kinds[0] != MeetingKind::TransversalCrossing) {
    detail = "nonadjacent pair does not meet in exactly one crossing";
    return false;
  }
  if (ms >= 100.0) {
    detail = "verification took " + std::to_string(ms) + " ms";
    return false;
  }
  return true;
}

bool criterion_pentagram(std::string& detail) {
  PlanarDrawing literal;
  literal.graph = cycle_graph(5);
  for (int k = 0; k < 5; ++k)
    literal.positions.push_back({std::cos(0.8 * kPi * k), std::sin(0.8 * kPi * k)});

  const auto t0 = Clock::now();
  const VerificationReport rep = verify_thrackle(document_of(literal));
  const VerificationReport built = verify_thrackle(document_of(construct_star_polygon_cycle(5)));
  const double ms = ms_since(t0);

  if (!rep.is_thrackle || rep.pairs.size() != 10) {
    detail = "literal pentagram coordinates do not verify across 10 pairs";
    return false;
  }
  for (const auto& p : rep.pairs)
    if (p.kinds.size() != 1) {
      detail = "pentagram pair meets more or less than once";
      return false;
    }
  note_verified(literal.graph);
  if (!built.is_thrackle) {
    detail = "constructed 5-cycle star polygon does not verify";
    return false;
  }
  note_verified(literal.graph);
  if (ms >= 100.0) {
    detail = "verification took " + std::to_string(ms) + " ms";
    return false;
  }
  return true;
}

bool criterion_spider_construction(std::string& detail) {
  const auto t0 = Clock::now();
  const SphericalDrawing d = construct_spider_3_2_gc();
  const GeneralPositionReport gp = verify_general_position(d);
  const VerificationReport rep = verify_thrackle(document_of(d));
  if (!gp.ok || !rep.is_thrackle) {
    detail = "construction fails verification";
    return false;
  }
  if (rep.pairs.size() != 15) {
    detail = "expected 15 edge pairs";
    return false;
  }
  for (const auto& p : rep.pairs)
    if (p.kinds.size() != 1) {
      detail = "an edge pair meets more or less than once";
      return false;
    }
  const LemmaAuditReport audit = lemma_audit(d);
  if (!audit.all_pass()) {
    detail = "lemma audit reports violations";
    return false;
  }
  int long_edges = 0;
  for (bool f : d.long_flags) long_edges += f ? 1 : 0;
  if (long_edges != 1) {
    detail = "expected exactly one long edge, got " + std::to_string(long_edges);
    return false;
  }
  const double ms = ms_since(t0);
  note_verified(d.graph);
  g_spherical_corpus.push_back(d);
  if (ms >= 1000.0) {
    detail = "construction and checks took " + std::to_string(ms) + " ms";
    return false;
  }
  return true;
}

bool criterion_search_separates(std::string& detail) {
  const auto t0 = Clock::now();
  const Graph three_legs_of_two = spider_graph({2, 2, 2});
  SearchConfig cfg;
  cfg.restarts = 200;
  cfg.iterations = 2000;
  cfg.seed = 7;
  const SearchOutcome easy = search(three_legs_of_two, cfg);
  int easy_successes = 0;
  for (const auto& st : easy.restarts) easy_successes += st.success ? 1 : 0;
  if (easy_successes < 1) {
    detail = "no verified drawing of the three-legs-of-two spider in 200 restarts";
    return false;
  }
  admit_spherical(build_spherical_drawing(three_legs_of_two, easy.best.positions,
                                          easy.best.long_flags));

  cfg.restarts = 500;
  const SearchOutcome hard = search(spider_graph({3, 3, 3}), cfg);
  int hard_successes = 0;
  for (const auto& st : hard.restarts) hard_successes += st.success ? 1 : 0;
  const double ms = ms_since(t0);
  if (hard_successes != 0) {
    detail = "search claims a spider(3,3,3) drawing; expected none";
    return false;
  }
  if (hard.best_penalty <= 0.0) {
    detail = "spider(3,3,3) best penalty is not positive";
    return false;
  }
  if (ms >= 600000.0) {
    detail = "searches took " + std::to_string(ms / 1000.0) + " s";
    return false;
  }
  return true;
}

bool criterion_classifiers(std::string& detail) {
  for (int n = 1; n <= 11; ++n) {
    for (const Graph& t : all_free_trees(n)) {
      if (is_caterpillar(t) != oracle::caterpillar_by_interior_neighbors(t)) {
        detail = "caterpillar classifier disagrees with the interior-neighbor oracle at n = " +
                 std::to_string(n);
        return false;
      }
      if (contains_spider_3_3(t) && is_augmented_caterpillar(t)) {
        detail = "a tree containing spider(3,3,3) classifies as augmented caterpillar";
        return false;
      }
    }
  }
  const Graph spider333 = spider_graph({3, 3, 3});
  for (size_t e = 0; e < spider333.edges.size(); ++e) {
    const Graph cut = remove_edge(spider333, static_cast<int>(e));
    for (const auto& comp_vertices : connected_components(cut)) {
      const Graph comp = induced_subgraph(cut, comp_vertices);
      if (!is_augmented_caterpillar(comp)) {
        detail = "spider(3,3,3) minus edge " + std::to_string(e) +
                 " has a component that is not an augmented caterpillar";
        return false;
      }
    }
  }
  return true;
}

// Grows the corpus: parameter-perturbed constructions, lifted caterpillar
// drawings, and search successes across trees and seeds.
void grow_corpus() {
  std::vector<SpiderConstructionParams> variants(7);
  variants[1].tilt_e2 = 0.52 * kPi;
  variants[1].min_e2 = 0.49 * kPi;
  variants[1].max_e2 = 0.61 * kPi;
  variants[2].bearing_f = 0.32 * kPi;
  variants[3].bearing_g = -0.27 * kPi;
  variants[4].l_f1 = 0.86 * kPi;
  variants[5].p_f_dist = 0.17 * kPi;
  variants[6].f2_overshoot = 0.08 * kPi;
  for (const auto& params : variants) {
    try {
      admit_spherical(construct_spider_3_2_gc(params));
    } catch (const Error&) {
    }
  }

  for (int n = 4; n <= 8; ++n) {
    for (const Graph& t : all_free_trees(n)) {
      if (!is_caterpillar(t)) continue;
      const PlanarDrawing flat = construct_caterpillar_straight_line(t);
      if (!verify_thrackle(document_of(flat)).is_thrackle) continue;
      note_verified(flat.graph);
      try {
        admit_spherical(lift_planar_to_sphere(flat));
      } catch (const Error&) {
      }
    }
  }

  const std::vector<Graph> trees = {
      path_graph(5),          path_graph(6),          spider_graph({2, 2, 2}),
      spider_graph({2, 2, 1}), spider_graph({3, 2}),  caterpillar_graph(3, {1, 0, 1}),
  };
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (const Graph& t : trees) {
      SearchConfig cfg;
      cfg.restarts = 40;
      cfg.iterations = 1500;
      cfg.seed = seed;
      const SearchOutcome out = search(t, cfg);
      if (!out.success) continue;
      try {
        admit_spherical(build_spherical_drawing(t, out.best.positions, out.best.long_flags));
      } catch (const Error&) {
      }
    }
  }
}

bool criterion_lemma_audits(std::string& detail) {
  grow_corpus();
  if (g_spherical_corpus.size() < 50) {
    detail = "only " + std::to_string(g_spherical_corpus.size()) + " corpus drawings";
    return false;
  }
  for (size_t i = 0; i < g_spherical_corpus.size(); ++i) {
    const LemmaAuditReport audit = lemma_audit(g_spherical_corpus[i]);
    if (!audit.all_pass()) {
      detail = "corpus drawing " + std::to_string(i) + " violates a structural lemma";
      return false;
    }
  }
  return true;
}

bool criterion_lift_preserves(std::string& detail) {
  oracle::TestRng rng(2024);
  int produced = 0;
  while (produced < 100) {
    const int spine_len = 2 + static_cast<int>(rng.uniform() * 5);
    std::vector<int> leaves(spine_len);
    int n = spine_len;
    for (int i = 0; i < spine_len; ++i) {
      leaves[i] = static_cast<int>(rng.uniform() * 3);
      n += leaves[i];
    }
    if (n > 11 || n < 3) continue;
    const Graph t = caterpillar_graph(spine_len, leaves);
    PlanarDrawing flat = construct_caterpillar_straight_line(t);
    const double a = rng.uniform(0.0, 2.0 * kPi);
    for (auto& p : flat.positions)
      p = Vec2{p.x * std::cos(a) - p.y * std::sin(a), p.x * std::sin(a) + p.y * std::cos(a)};

    const VerificationReport before = verify_thrackle(document_of(flat));
    if (!before.is_thrackle) {
      detail = "a straight-line caterpillar drawing failed to verify";
      return false;
    }
    note_verified(flat.graph);
    const VerificationReport after = verify_thrackle(document_of(lift_planar_to_sphere(flat)));
    if (after.is_thrackle != before.is_thrackle) {
      detail = "lift changed the thrackle verdict";
      return false;
    }
    if (after.pairs.size() != before.pairs.size()) {
      detail = "lift changed the number of audited pairs";
      return false;
    }
    for (size_t i = 0; i < before.pairs.size(); ++i) {
      const PairRecord& b = before.pairs[i];
      const PairRecord& s = after.pairs[i];
      if (b.edge_a != s.edge_a || b.edge_b != s.edge_b || b.kinds.size() != s.kinds.size()) {
        detail = "lift changed a pairwise meeting count";
        return false;
      }
    }
    note_verified(t);
    ++produced;
  }
  return true;
}

bool criterion_edge_bound(std::string& detail) {
  if (g_verified_sizes.empty()) {
    detail = "no verified drawings were recorded";
    return false;
  }
  for (const auto& [edges, vertices] : g_verified_sizes) {
    if (edges > vertices) {
      detail = "a verified thrackle has " + std::to_string(edges) + " edges on " +
               std::to_string(vertices) + " vertices";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"three-edge zigzag path verifies; nonadjacent pair meets once", criterion_zigzag_path},
      {"pentagram verifies across all 10 pairs, literal and constructed", criterion_pentagram},
      {"spider(3,2) construction verifies with one long edge and a clean audit",
       criterion_spider_construction},
      {"search finds spider(3,2) but never spider(3,3,3)", criterion_search_separates},
      {"classifiers agree with oracles on all free trees up to 11 vertices",
       criterion_classifiers},
      {"50+ verified drawings all pass the structural lemma audit", criterion_lemma_audits},
      {"gnomonic lift preserves verdicts and meeting counts on 100 caterpillars",
       criterion_lift_preserves},
      {"every verified thrackle has at most as many edges as vertices", criterion_edge_bound},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    const auto t0 = Clock::now();
    const bool ok = criteria[i].run(detail);
    const double ms = ms_since(t0);
    if (ok) {
      std::printf("[PASS] criterion %zu: %s (%.1f ms)\n", i + 1, criteria[i].name, ms);
    } else {
      std::printf("[FAIL] criterion %zu: %s: %s\n", i + 1, criteria[i].name, detail.c_str());
      ++failures;
    }
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("acceptance: %d of %zu criteria failed\n", failures, criteria.size());
  return 1;
}
