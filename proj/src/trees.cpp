#include <algorithm>
#include <map>
#include <string>

#include "thrackle/graph.hpp"

namespace thrackle {

namespace {

// Rooted-tree level sequences (root level 1, preorder), visited in
// decreasing lexicographic order from the path to the star. The successor
// rule truncates at the last level above 2 and repeats the block that starts
// at that subtree's parent.
bool next_level_sequence(std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (levels[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (levels[i] == levels[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) levels[i] = levels[i - (p - q)];
  return true;
}

Graph graph_of_levels(const std::vector<int>& levels) {
  Graph g;
  g.n = static_cast<int>(levels.size());
  for (int i = 1; i < g.n; ++i)
    for (int j = i - 1; j >= 0; --j)
      if (levels[j] == levels[i] - 1) {
        g.edges.emplace_back(j, i);
        break;
      }
  return g;
}

std::string rooted_canon(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> parts;
  for (int w : adj[v])
    if (w != parent) parts.push_back(rooted_canon(adj, w, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& s : parts) out += s;
  out += ")";
  return out;
}

std::vector<int> tree_centers(const Graph& t) {
  if (t.n == 1) return {0};
  auto deg = vertex_degrees(t);
  const auto adj = adjacency(t);
  std::vector<int> layer;
  for (int v = 0; v < t.n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int remaining = t.n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      deg[v] = 0;
      for (int w : adj[v])
        if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  return layer;
}

std::string free_canon(const Graph& t) {
  const auto adj = adjacency(t);
  std::string best;
  for (int c : tree_centers(t)) {
    std::string s = rooted_canon(adj, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

}  // namespace

std::vector<Graph> all_free_trees(int n) {
  std::vector<Graph> out;
  if (n <= 0) return out;
  if (n == 1) {
    out.push_back(Graph{1, {}});
    return out;
  }
  std::vector<int> levels(n);
  for (int i = 0; i < n; ++i) levels[i] = i + 1;
  std::map<std::string, Graph> classes;
  do {
    Graph t = graph_of_levels(levels);
    classes.emplace(free_canon(t), std::move(t));
  } while (next_level_sequence(levels));
  for (auto& [key, t] : classes) out.push_back(std::move(t));
  return out;
}

}  // namespace thrackle
