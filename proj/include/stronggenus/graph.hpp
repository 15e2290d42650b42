#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stronggenus/error.hpp"

namespace stronggenus {

/// Undirected multigraph in dart (half-edge) form.
///
/// Vertices and edges are 0-based internally (the text format is 1-based).
/// Edge e owns darts 2e and 2e+1; mate(d) = d^1 is a fixed-point-free
/// involution. endpoint(d) is the vertex the dart is attached to. Loops are
/// rejected at construction, parallel edges are allowed. Immutable once built,
/// so unrestricted concurrent reads are safe.
class Graph {
public:
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edge_u_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    static int mate(int dart) { return dart ^ 1; }
    static int edge_of(int dart) { return dart >> 1; }
    static int dart_of(int edge, int side) { return 2 * edge + side; }

    /// Vertex the dart is attached to (tail when walking along the dart).
    int endpoint(int dart) const {
        return (dart & 1) ? edge_v_[dart >> 1] : edge_u_[dart >> 1];
    }
    int far_endpoint(int dart) const { return endpoint(mate(dart)); }

    std::pair<int, int> edge_endpoints(int e) const { return {edge_u_[e], edge_v_[e]}; }

    /// Darts attached to v, in edge-insertion order.
    const std::vector<int>& darts_at(int v) const { return darts_at_[v]; }
    int degree(int v) const { return static_cast<int>(darts_at_[v].size()); }

    bool adjacent(int u, int v) const;
    /// Smallest edge id joining u and v, if any.
    std::optional<int> find_edge(int u, int v) const;
    /// All edge ids joining u and v, ascending.
    std::vector<int> edges_between(int u, int v) const;

    std::vector<std::pair<int, int>> edge_list() const;

private:
    int n_ = 0;
    std::vector<int> edge_u_, edge_v_;
    std::vector<std::vector<int>> darts_at_;
};

/// Parse the line-based graph format: `p <n> <m>` header, then m lines
/// `e <u> <v>` with 1-based endpoints; `#` starts a comment line.
Graph parse_graph(const std::string& text);

/// Deterministic writer: header, then edges in id order, 1-based.
std::string write_graph(const Graph& g);

bool is_connected(const Graph& g);

/// True iff every vertex has degree exactly 3.
bool is_cubic(const Graph& g);

/// Exact vertex connectivity; 0 for disconnected graphs. Brute force via
/// unit-capacity max-flow over all non-adjacent pairs; intended for desk-scale
/// inputs only.
int connectivity(const Graph& g);

/// Length of a shortest cycle; nullopt for forests. Parallel edges give 2.
std::optional<int> girth(const Graph& g);

/// Replace every maximal path through degree-2 vertices by a single edge.
/// Kept vertices are renumbered ascending. Throws DegenerateCycle when the
/// graph is a bare cycle or a suppression would create a loop.
Graph suppress_degree_two(const Graph& g);

/// connectivity(suppress_degree_two(g)) >= 3, with cycle inputs counted false.
bool is_subdivision_of_3connected(const Graph& g);

/// Split edge e with a fresh vertex: e becomes (u,w) in place and (w,v) is
/// appended as the last edge.
Graph subdivide_edge(const Graph& g, int e);

/// Graph without edge e; edge ids above e shift down by one.
Graph remove_edge(const Graph& g, int e);

} // namespace stronggenus
