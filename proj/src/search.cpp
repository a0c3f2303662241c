#include "thrackle/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

namespace thrackle {

namespace {

// Distribution helpers are hand-rolled because only the mt19937_64 engine
// itself is bit-stable across standard library implementations.
struct Rng {
  explicit Rng(std::uint64_t s) : eng(s) {}
  double uniform() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
  double normal() {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    const double u1 = std::max(uniform(), 1e-300);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare = r * std::sin(kTwoPi * u2);
    have_spare = true;
    return r * std::cos(kTwoPi * u2);
  }
  int index(int n) { return static_cast<int>(uniform() * n) % n; }

  std::mt19937_64 eng;
  double spare = 0.0;
  bool have_spare = false;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t restart) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (restart + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

UnitVec3 random_unit(Rng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = kTwoPi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return normalized({r * std::cos(phi), r * std::sin(phi), z});
}

constexpr double kBigPenalty = 1000.0;
constexpr double kMinCircleSeparation = 0.02;  // |cross(poles)|
constexpr double kMinVertexSeparation = 0.02;  // sin of pairwise angle
constexpr double kMinTripleVolume = 0.005;     // |det| of a vertex triple
constexpr double kInitialTemperature = 0.08;
constexpr double kMinPairAngle = 0.1;          // initialization spacing

double hinge(double x) { return x > 0.0 ? x : 0.0; }

double wrap_to_pi(double a) {
  a = std::fmod(a + kPi, kTwoPi);
  if (a <= 0.0) a += kTwoPi;
  return a - kPi;
}

// Signed margin of circle angle theta inside the window [0, len]:
// positive inside, negative outside, continuous around the circle.
double window_margin(double theta, double len) {
  return 0.5 * len - std::fabs(wrap_to_pi(theta - 0.5 * len));
}

double containment_margin(const GeodesicArc& a, const UnitVec3& p) {
  return window_margin(arc_angle_of(a, p), a.length);
}

}  // namespace

double penalty(const Candidate& c, const Graph& g, double margin, const Tolerances& tol) {
  (void)tol;
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());
  double total = 0.0;

  // general-position guards
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double s = norm(cross(c.positions[i].vec(), c.positions[j].vec()));
      total += hinge(kMinVertexSeparation - s) / kMinVertexSeparation;
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const double vol = std::fabs(
            triple(c.positions[i].vec(), c.positions[j].vec(), c.positions[k].vec()));
        total += hinge(kMinTripleVolume - vol) / kMinTripleVolume;
      }

  // arcs; a near-degenerate endpoint pair forfeits the edge
  std::vector<GeodesicArc> arcs(m);
  std::vector<bool> arc_ok(m, false);
  for (int e = 0; e < m; ++e) {
    const auto& pa = c.positions[g.edges[e].first];
    const auto& pb = c.positions[g.edges[e].second];
    if (norm(cross(pa.vec(), pb.vec())) < 1e-8) {
      total += kBigPenalty;
      continue;
    }
    arcs[e] = c.long_flags[e] ? long_arc_between(pa, pb) : short_arc_between(pa, pb);
    arc_ok[e] = true;
  }

  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      if (!arc_ok[e] || !arc_ok[f]) continue;
      const Vec3 cr = cross(arcs[e].pole.vec(), arcs[f].pole.vec());
      const double s = norm(cr);
      total += hinge(kMinCircleSeparation - s) / kMinCircleSeparation;
      if (s < 1e-9) {
        total += 1.0;  // same circle: no transversal crossing possible
        continue;
      }
      const UnitVec3 w = normalized(cr);
      const UnitVec3 wa = antipode(w);
      const double mw = std::min(containment_margin(arcs[e], w), containment_margin(arcs[f], w));
      const double mwa =
          std::min(containment_margin(arcs[e], wa), containment_margin(arcs[f], wa));

      const auto shared = shared_endpoint(g, e, f);
      if (shared) {
        // the candidate at the shared vertex is the required meeting; the
        // antipodal one must stay excluded
        const bool w_is_vertex = dot(w.vec(), c.positions[*shared].vec()) > 0.0;
        total += hinge((w_is_vertex ? mwa : mw) + margin);
      } else {
        const double first_in = hinge(margin - mw) + hinge(mwa + margin);
        const double second_in = hinge(margin - mwa) + hinge(mw + margin);
        total += std::min(first_in, second_in);
      }
    }
  return total;
}

namespace {

Candidate random_candidate(Rng& rng, const Graph& g) {
  Candidate c;
  c.positions.reserve(g.n);
  for (int i = 0; i < g.n; ++i) {
    UnitVec3 p = random_unit(rng);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      bool spaced = true;
      for (const auto& q : c.positions) {
        const double a = angle_between(p, q);
        spaced = spaced && a > kMinPairAngle && a < kPi - kMinPairAngle;
      }
      if (spaced) break;
      p = random_unit(rng);
    }
    c.positions.push_back(p);
  }
  c.long_flags.assign(g.edges.size(), false);
  if (!g.edges.empty()) c.long_flags[rng.index(static_cast<int>(g.edges.size()))] = true;
  return c;
}

void validate_config(const SearchConfig& cfg) {
  if (cfg.restarts <= 0 || cfg.iterations <= 0 || cfg.initial_step <= 0.0 ||
      cfg.cooling <= 0.0 || cfg.cooling >= 1.0 || cfg.margin <= 0.0 ||
      cfg.flag_mutation_probability < 0.0 || cfg.flag_mutation_probability > 1.0)
    throw Error("search config values out of range");
}

}  // namespace

SearchOutcome search(const Graph& t, const SearchConfig& cfg) {
  if (!is_tree(t)) throw NotATreeError("search embeds trees only");
  validate_config(cfg);

  const int m = static_cast<int>(t.edges.size());
  SearchOutcome out;
  bool have_best = false;

  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
    Candidate cur = random_candidate(rng, t);
    double cur_pen = penalty(cur, t, cfg.margin, cfg.tolerances);
    Candidate best = cur;
    double best_pen = cur_pen;

    const double decay = std::pow(cfg.cooling, 100.0 / cfg.iterations);
    double sigma = cfg.initial_step;
    double temp = kInitialTemperature;
    int accepted = 0;

    for (int it = 0; it < cfg.iterations && best_pen > 0.0; ++it) {
      Candidate next = cur;
      if (m > 0 && rng.uniform() < cfg.flag_mutation_probability) {
        const int e = rng.index(m);
        next.long_flags[e] = !next.long_flags[e];
      } else {
        const int vtx = rng.index(t.n);
        Vec3 u1, u2;
        tangent_basis(next.positions[vtx], u1, u2);
        next.positions[vtx] =
            normalized(next.positions[vtx].vec() + u1 * (sigma * rng.normal()) +
                       u2 * (sigma * rng.normal()));
      }
      const double next_pen = penalty(next, t, cfg.margin, cfg.tolerances);
      const double delta = next_pen - cur_pen;
      if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temp)) {
        cur = std::move(next);
        cur_pen = next_pen;
        ++accepted;
        if (cur_pen < best_pen) {
          best = cur;
          best_pen = cur_pen;
        }
      }
      sigma *= decay;
      temp *= decay;
    }

    RestartStats st;
    st.restart = r;
    st.best_penalty = best_pen;
    st.accepted_moves = accepted;
    if (best_pen == 0.0) {
      try {
        const auto d = build_spherical_drawing(t, best.positions, best.long_flags,
                                               cfg.tolerances);
        const auto rep = verify_thrackle(document_of(d), cfg.tolerances);
        st.success = rep.is_thrackle && rep.is_general_position;
      } catch (const Error&) {
        st.success = false;
      }
    }
    if (st.success && !out.success) {
      out.success = true;
      out.successful_restart = r;
    }
    if (!have_best || best_pen < out.best_penalty) {
      have_best = true;
      out.best_penalty = best_pen;
      out.best = best;
    }
    out.restarts.push_back(st);
  }
  return out;
}

namespace {

std::string fmt_double(double v) {
  v += 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string nonexistence_report(const Graph& t, const SearchConfig& cfg) {
  const SearchOutcome out = search(t, cfg);

  std::vector<double> pens;
  pens.reserve(out.restarts.size());
  int successes = 0;
  for (const auto& st : out.restarts) {
    pens.push_back(st.best_penalty);
    successes += st.success;
  }
  std::sort(pens.begin(), pens.end());
  const auto quartile = [&](int k) {
    return pens[(pens.size() - 1) * static_cast<size_t>(k) / 4];
  };

  std::ostringstream os;
  os << "{\n";
  os << "  \"n\": " << t.n << ",\n";
  os << "  \"edge_count\": " << t.edges.size() << ",\n";
  os << "  \"contains_spider_3_3\": " << (contains_spider_3_3(t) ? "true" : "false")
     << ",\n";
  os << "  \"restarts\": " << cfg.restarts << ",\n";
  os << "  \"iterations\": " << cfg.iterations << ",\n";
  os << "  \"seed\": " << cfg.seed << ",\n";
  os << "  \"successes\": " << successes << ",\n";
  os << "  \"success\": " << (out.success ? "true" : "false") << ",\n";
  os << "  \"best_penalty\": " << fmt_double(out.best_penalty) << ",\n";
  os << "  \"penalty_floor\": " << fmt_double(pens.front()) << ",\n";
  os << "  \"penalty_quartiles\": [" << fmt_double(quartile(0)) << ", "
     << fmt_double(quartile(1)) << ", " << fmt_double(quartile(2)) << ", "
     << fmt_double(quartile(3)) << ", " << fmt_double(quartile(4)) << "],\n";
  os << "  \"conclusion\": "
     << (out.success
             ? "\"a verified great-circle thrackle drawing was found; the nonexistence "
               "hypothesis is rejected\""
             : "\"no drawing was found; the failed search corroborates nonexistence for "
               "this tree but does not prove it\"")
     << "\n";
  os << "}\n";
  return os.str();
}

}  // namespace thrackle
