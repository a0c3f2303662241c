#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thrackle/verify.hpp"

namespace thrackle {

/// Free variables of a spherical drawing: where the vertices sit and which
/// edges take the long way around their great circle.
struct Candidate {
  std::vector<UnitVec3> positions;
  std::vector<bool> long_flags;
};

struct SearchConfig {
  int restarts = 100;
  int iterations = 2000;                  // annealing steps per restart
  double initial_step = 0.35;             // tangent step, radians
  double cooling = 0.98;                  // applied at each of ~100 stages
  double margin = 1e-3;                   // penalty margin delta, radians
  double flag_mutation_probability = 0.1;
  std::uint64_t seed = 1;
  Tolerances tolerances{};
};

struct RestartStats {
  int restart = 0;
  double best_penalty = 0.0;
  int accepted_moves = 0;
  bool success = false;
};

struct SearchOutcome {
  Candidate best;
  double best_penalty = 0.0;
  bool success = false;      // implies the induced drawing verifies
  int successful_restart = -1;
  std::vector<RestartStats> restarts;
};

/// Soft thrackle objective. Zero iff the induced drawing is a
/// general-position thrackle with every required crossing contained, and
/// every forbidden second meeting excluded, by at least the margin along
/// arc parameters. Positive values sum hinge losses per violated pair plus
/// degeneracy guards (near-parallel circles, near-coincident or antipodal
/// vertices, near-coplanar triples). Never throws; impossible geometry
/// (parallel edge circles) earns a large constant plus the guard terms.
double penalty(const Candidate& c, const Graph& g, double margin, const Tolerances& tol = {});

/// Simulated annealing over candidates with independent restarts, each with
/// its own RNG stream derived from (seed, restart index). Deterministic for
/// a fixed config. Throws NotATreeError unless t is a tree.
SearchOutcome search(const Graph& t, const SearchConfig& cfg = {});

/// Runs search and renders its statistics as a JSON object (stable field
/// order): per-restart penalty quartiles, floor, success count, whether the
/// tree contains the three-leg length-three spider, and an explicit note
/// that failure to find a drawing corroborates but does not prove
/// nonexistence. Throws NotATreeError unless t is a tree.
std::string nonexistence_report(const Graph& t, const SearchConfig& cfg = {});

}  // namespace thrackle
