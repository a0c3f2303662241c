#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thrackle/errors.hpp"

namespace thrackle {

/// Simple undirected graph on vertices 0..n-1.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Returns a list of structural problems; empty means the graph is simple
/// (indices in range, no loops, no duplicate edges).
std::vector<std::string> validate(const Graph& g);

/// Throws Error with the first validation problem, if any.
void require_simple(const Graph& g);

std::vector<std::vector<int>> adjacency(const Graph& g);
std::vector<int> vertex_degrees(const Graph& g);

/// The vertex two edges share, if they share exactly one.
std::optional<int> shared_endpoint(const Graph& g, int e, int f);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Subgraph induced by `verts`; vertices are renumbered 0..k-1 in the given
/// order. If `old_of_new` is non-null it receives the reverse index map.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* old_of_new = nullptr);

Graph remove_edge(const Graph& g, int edge_index);

/// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

/// All maximum-length simple paths of a tree, one orientation each.
std::vector<std::vector<int>> diameter_paths(const Graph& t);

/// True iff deleting all leaves of the tree leaves a path (or nothing).
bool is_caterpillar(const Graph& t);

struct SpiderShape {
  int center = 0;
  std::vector<int> leg_lengths;  // sorted descending
};

/// A spider has exactly one vertex of degree >= 3; everything else <= 2.
std::optional<SpiderShape> classify_spider(const Graph& t);

struct SpineDecomposition {
  std::vector<int> spine;              // a longest path of the tree
  std::vector<std::vector<int>> legs;  // each starts at its internal spine vertex
};

/// A witness decomposition when the tree is an augmented caterpillar: a
/// longest path such that each attached leg is a path of at most 2 edges
/// hanging at an internal spine vertex, and every vertex lies within
/// distance 2 of an internal spine vertex. Trees with fewer than 3 vertices
/// qualify trivially.
std::optional<SpineDecomposition> augmented_caterpillar_decomposition(const Graph& t);
bool is_augmented_caterpillar(const Graph& t);

/// True iff some vertex has at least three neighbor branches each containing
/// a simple path of length >= 3 starting at that vertex.
bool contains_spider_3_3(const Graph& t);

/// True iff the graph contains an odd cycle with every vertex of the graph
/// adjacent to some cycle vertex, or every connected component is a
/// caterpillar.
bool is_straight_line_thrackleable(const Graph& g);

bool edge_bound_holds(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph spider_graph(const std::vector<int>& leg_lengths);

/// Caterpillar with spine 0..spine_len-1 and leaves_per_spine[i] extra
/// leaves hanging at spine vertex i; leaves are numbered after the spine.
Graph caterpillar_graph(int spine_len, const std::vector<int>& leaves_per_spine);

/// Text format: first line `n`, then one `u v` edge per line.
Graph parse_graph_text(const std::string& text);
std::string graph_to_text(const Graph& g);

/// All free (unrooted, unlabeled) trees on n vertices, one representative
/// per isomorphism class.
std::vector<Graph> all_free_trees(int n);

}  // namespace thrackle
