#include "thrackle/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace thrackle {

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> problems;
  if (g.n < 0) problems.push_back("negative vertex count");
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto [u, v] = g.edges[i];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) {
      problems.push_back("edge " + std::to_string(i) + " has an index out of range");
      continue;
    }
    if (u == v) {
      problems.push_back("edge " + std::to_string(i) + " is a loop");
      continue;
    }
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      problems.push_back("edge " + std::to_string(i) + " duplicates an earlier edge");
  }
  return problems;
}

void require_simple(const Graph& g) {
  const auto problems = validate(g);
  if (!problems.empty()) throw Error("invalid graph: " + problems.front());
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> vertex_degrees(const Graph& g) {
  std::vector<int> deg(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::optional<int> shared_endpoint(const Graph& g, int e, int f) {
  const auto [a, b] = g.edges[e];
  const auto [c, d] = g.edges[f];
  if (a == c || a == d) return a;
  if (b == c || b == d) return b;
  return std::nullopt;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const auto adj = adjacency(g);
  std::vector<int> label(g.n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n; ++s) {
    if (label[s] != -1) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::deque<int> queue{s};
    label[s] = id;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      comps[id].push_back(v);
      for (int w : adj[v])
        if (label[w] == -1) {
          label[w] = id;
          queue.push_back(w);
        }
    }
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.n >= 1 && static_cast<int>(g.edges.size()) == g.n - 1 && is_connected(g);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* old_of_new) {
  std::vector<int> new_of_old(g.n, -1);
  for (size_t i = 0; i < verts.size(); ++i) new_of_old[verts[i]] = static_cast<int>(i);
  Graph sub;
  sub.n = static_cast<int>(verts.size());
  for (const auto& [u, v] : g.edges)
    if (new_of_old[u] != -1 && new_of_old[v] != -1)
      sub.edges.emplace_back(new_of_old[u], new_of_old[v]);
  if (old_of_new) *old_of_new = verts;
  return sub;
}

Graph remove_edge(const Graph& g, int edge_index) {
  Graph out = g;
  out.edges.erase(out.edges.begin() + edge_index);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  const auto adj = adjacency(g);
  std::vector<int> dist(g.n, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

namespace {

void require_tree(const Graph& g) {
  require_simple(g);
  if (!is_tree(g)) throw NotATreeError("graph is not a tree");
}

// BFS parents from src; the tree path src..dst read off in order.
std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int n, int src, int dst) {
  std::vector<int> parent(n, -1);
  std::deque<int> queue{src};
  parent[src] = src;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : adj[v])
      if (parent[w] == -1) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<int> path{dst};
  while (path.back() != src) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::vector<std::vector<int>> diameter_paths(const Graph& t) {
  require_tree(t);
  const auto adj = adjacency(t);
  std::vector<std::vector<int>> all_dist(t.n);
  int diameter = 0;
  for (int v = 0; v < t.n; ++v) {
    all_dist[v] = bfs_distances(t, v);
    diameter = std::max(diameter, *std::max_element(all_dist[v].begin(), all_dist[v].end()));
  }
  std::vector<std::vector<int>> paths;
  for (int u = 0; u < t.n; ++u)
    for (int v = u; v < t.n; ++v)
      if (all_dist[u][v] == diameter) paths.push_back(tree_path(adj, t.n, u, v));
  return paths;
}

bool is_caterpillar(const Graph& t) {
  require_tree(t);
  const auto deg = vertex_degrees(t);
  std::vector<int> interior;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] >= 2) interior.push_back(v);
  const Graph core = induced_subgraph(t, interior);
  for (int d : vertex_degrees(core))
    if (d > 2) return false;
  return true;
}

std::optional<SpiderShape> classify_spider(const Graph& t) {
  require_tree(t);
  const auto deg = vertex_degrees(t);
  int center = -1;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] >= 3) {
      if (center != -1) return std::nullopt;
      center = v;
    }
  if (center == -1) return std::nullopt;
  SpiderShape shape;
  shape.center = center;
  const auto dist = bfs_distances(t, center);
  for (int v = 0; v < t.n; ++v)
    if (v != center && deg[v] == 1) shape.leg_lengths.push_back(dist[v]);
  std::sort(shape.leg_lengths.rbegin(), shape.leg_lengths.rend());
  return shape;
}

std::optional<SpineDecomposition> augmented_caterpillar_decomposition(const Graph& t) {
  require_tree(t);
  if (t.n <= 2) {
    SpineDecomposition d;
    for (int v = 0; v < t.n; ++v) d.spine.push_back(v);
    return d;
  }
  const auto adj = adjacency(t);
  for (const auto& spine : diameter_paths(t)) {
    std::vector<char> on_spine(t.n, 0);
    std::vector<char> internal(t.n, 0);
    for (int v : spine) on_spine[v] = 1;
    for (size_t i = 1; i + 1 < spine.size(); ++i) internal[spine[i]] = 1;

    // Off-spine components; each attaches to exactly one spine vertex.
    std::vector<int> comp(t.n, -1);
    std::vector<std::vector<int>> members;
    for (int s = 0; s < t.n; ++s) {
      if (on_spine[s] || comp[s] != -1) continue;
      const int id = static_cast<int>(members.size());
      members.emplace_back();
      std::deque<int> queue{s};
      comp[s] = id;
      while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        members[id].push_back(v);
        for (int w : adj[v])
          if (!on_spine[w] && comp[w] == -1) {
            comp[w] = id;
            queue.push_back(w);
          }
      }
    }

    bool ok = true;
    std::vector<std::vector<int>> legs;
    for (const auto& m : members) {
      if (m.size() > 2) {
        ok = false;
        break;
      }
      int attach_spine = -1, attach_vertex = -1;
      for (int v : m)
        for (int w : adj[v])
          if (on_spine[w]) {
            attach_spine = w;
            attach_vertex = v;
          }
      if (!internal[attach_spine]) {
        ok = false;
        break;
      }
      std::vector<int> leg{attach_spine, attach_vertex};
      if (m.size() == 2) leg.push_back(m[0] == attach_vertex ? m[1] : m[0]);
      legs.push_back(std::move(leg));
    }
    if (!ok) continue;

    // Distance-2 coverage by internal spine vertices.
    std::vector<int> best(t.n, t.n);
    for (size_t i = 1; i + 1 < spine.size(); ++i) {
      const auto d = bfs_distances(t, spine[i]);
      for (int v = 0; v < t.n; ++v) best[v] = std::min(best[v], d[v]);
    }
    if (*std::max_element(best.begin(), best.end()) > 2) continue;

    SpineDecomposition d;
    d.spine = spine;
    d.legs = std::move(legs);
    return d;
  }
  return std::nullopt;
}

bool is_augmented_caterpillar(const Graph& t) {
  return augmented_caterpillar_decomposition(t).has_value();
}

bool contains_spider_3_3(const Graph& t) {
  require_tree(t);
  const auto adj = adjacency(t);
  for (int v = 0; v < t.n; ++v) {
    if (adj[v].size() < 3) continue;
    int deep_branches = 0;
    for (int w : adj[v]) {
      // Depth of the branch through w, measured from v, with v removed.
      std::vector<int> depth(t.n, -1);
      depth[v] = 0;
      depth[w] = 1;
      std::deque<int> queue{w};
      int max_depth = 1;
      while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (int y : adj[x])
          if (depth[y] == -1) {
            depth[y] = depth[x] + 1;
            max_depth = std::max(max_depth, depth[y]);
            queue.push_back(y);
          }
      }
      if (max_depth >= 3) ++deep_branches;
    }
    if (deep_branches >= 3) return true;
  }
  return false;
}

namespace {

// Enumerates simple cycles rooted at their minimum vertex, each once. Calls
// visit(cycle) until it returns true; returns whether any call did.
bool for_each_cycle(const std::vector<std::vector<int>>& adj, int n,
                    const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> path;
  std::vector<char> in_path(n, 0);
  long steps = 0;
  std::function<bool(int, int)> dfs = [&](int root, int v) -> bool {
    if (++steps > 20000000) throw Error("cycle enumeration exceeded its step budget");
    path.push_back(v);
    in_path[v] = 1;
    for (int w : adj[v]) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) {
        if (visit(path)) {
          in_path[v] = 0;
          path.pop_back();
          return true;
        }
      } else if (w > root && !in_path[w]) {
        if (dfs(root, w)) {
          in_path[v] = 0;
          path.pop_back();
          return true;
        }
      }
    }
    in_path[v] = 0;
    path.pop_back();
    return false;
  };
  for (int root = 0; root < n; ++root)
    if (dfs(root, root)) return true;
  return false;
}

}  // namespace

bool is_straight_line_thrackleable(const Graph& g) {
  require_simple(g);
  bool all_caterpillars = true;
  for (const auto& comp_vertices : connected_components(g)) {
    const Graph comp = induced_subgraph(g, comp_vertices);
    if (!is_tree(comp) || !is_caterpillar(comp)) {
      all_caterpillars = false;
      break;
    }
  }
  if (all_caterpillars) return true;

  const auto adj = adjacency(g);
  return for_each_cycle(adj, g.n, [&](const std::vector<int>& cycle) {
    if (cycle.size() % 2 == 0) return false;
    std::vector<char> on_cycle(g.n, 0);
    for (int v : cycle) on_cycle[v] = 1;
    for (int v = 0; v < g.n; ++v) {
      bool touches = false;
      for (int w : adj[v])
        if (on_cycle[w]) {
          touches = true;
          break;
        }
      if (!touches) return false;
    }
    return true;
  });
}

bool edge_bound_holds(const Graph& g) {
  return static_cast<int>(g.edges.size()) <= g.n;
}

Graph path_graph(int n) {
  Graph g;
  g.n = n;
  for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.edges.emplace_back(n - 1, 0);
  return g;
}

Graph spider_graph(const std::vector<int>& leg_lengths) {
  Graph g;
  g.n = 1;
  for (int len : leg_lengths) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      g.edges.emplace_back(prev, g.n);
      prev = g.n++;
    }
  }
  return g;
}

Graph caterpillar_graph(int spine_len, const std::vector<int>& leaves_per_spine) {
  Graph g = path_graph(spine_len);
  for (int i = 0; i < spine_len; ++i)
    for (int k = 0; k < leaves_per_spine[i]; ++k) g.edges.emplace_back(i, g.n++);
  return g;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  Graph g;
  bool have_n = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank line
    if (first[0] == '#') continue;
    if (!have_n) {
      try {
        size_t used = 0;
        g.n = std::stoi(first, &used);
        if (used != first.size()) throw std::invalid_argument(first);
      } catch (const std::exception&) {
        throw ParseError("expected a vertex count", line_no, "n");
      }
      std::string extra;
      if (fields >> extra) throw ParseError("unexpected token after vertex count", line_no, "n");
      have_n = true;
      continue;
    }
    int u = 0, v = 0;
    std::istringstream pair_in(line);
    std::string extra;
    if (!(pair_in >> u >> v) || (pair_in >> extra))
      throw ParseError("expected an edge line `u v`", line_no, "edges");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
      throw ParseError("edge endpoint out of range", line_no, "edges");
    g.edges.emplace_back(u, v);
  }
  if (!have_n) throw ParseError("missing vertex count line", 0, "n");
  const auto problems = validate(g);
  if (!problems.empty()) throw ParseError(problems.front(), 0, "edges");
  return g;
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (const auto& [u, v] : g.edges) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace thrackle
