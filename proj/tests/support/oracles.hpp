#pragma once

#include <optional>
#include <vector>

#include "stronggenus/embedding.hpp"
#include "stronggenus/graph.hpp"

// Independent oracles used to freeze expected values. These stay structurally
// separate from the library paths they check.
namespace oracles {

using stronggenus::Embedding;
using stronggenus::Graph;

/// Count faces of an all-positive rotation system by plain orbit counting.
int count_faces_oriented(const Graph& g, const std::vector<std::vector<int>>& rot);

/// Per-vertex degree audit straight off the edge list.
std::vector<int> degree_audit(const Graph& g);

/// All simple cycles (vertex sequences) avoiding banned vertices; includes
/// 2-cycles through parallel edge pairs. Small graphs only.
std::vector<std::vector<int>> all_simple_cycles(const Graph& g,
                                                const std::vector<char>& banned = {});

/// Shortest cycle length by exhaustive cycle enumeration; nullopt for forests.
std::optional<int> shortest_cycle(const Graph& g);

/// Facial distance by breadth-first search over face vertex sets.
int facial_distance_bfs(const std::vector<std::vector<int>>& face_vertex_sets, int x,
                        int y);

/// Does the cycle separate x from y on the sphere? Grouping of faces by
/// non-cycle edge adjacency, written independently of the library test.
bool separates_on_sphere(const Embedding& planar, const std::vector<int>& cycle, int x,
                         int y);

/// Maximum number of pairwise vertex-disjoint cycles of g - x - y, each
/// separating x from y in the given planar embedding. Exhaustive.
int max_nested_separating(const Embedding& planar, int x, int y);

/// Is target (edge-id parity vector) a XOR of some subset of face boundary
/// vectors? Brute force over all subsets; needs few faces.
bool separating_by_subset_enumeration(const Embedding& e, const std::vector<char>& target);

/// Every connected cubic simple graph on n vertices, one per isomorphism
/// class, by canonical (lex-max column coding) vertex augmentation.
std::vector<Graph> all_connected_cubic(int n);

} // namespace oracles
