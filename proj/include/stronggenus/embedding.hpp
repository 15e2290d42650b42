#pragma once

#include <cstdint>
#include <vector>

#include "stronggenus/graph.hpp"

namespace stronggenus {

/// Closed surface, named by orientability and genus.
/// Orientable: euler characteristic chi = 2 - 2*genus.
/// Non-orientable: chi = 2 - genus, genus >= 1.
struct SurfaceKind {
    bool orientable;
    int genus;

    int euler_characteristic() const {
        return orientable ? 2 - 2 * genus : 2 - genus;
    }
    bool operator==(const SurfaceKind&) const = default;
};

/// One facial walk: a cyclic sequence of (dart, side) traversal steps.
/// Step k walks along darts[k] away from its endpoint; sides[k] is the local
/// side (+1/-1) the trace carries, always +1 throughout for all-positive
/// signatures.
struct FaceWalk {
    std::vector<int> darts;
    std::vector<int8_t> sides;
    std::vector<int> vertices; // endpoint(darts[k]), the visited vertex per step

    int length() const { return static_cast<int>(darts.size()); }
    /// True iff the walk is a cycle of the graph: vertices pairwise distinct
    /// and edges pairwise distinct.
    bool is_cycle() const;
    /// GF(2) incidence over edge ids: edges traversed an odd number of times.
    std::vector<int> odd_edges() const;
    bool contains_vertex(int v) const;
};

/// Even-degree edge set, e.g. a GF(2) sum of facial walks. `cycles` is an
/// edge-disjoint cycle decomposition (vertex sequences); for cubic graphs the
/// cycles are also vertex-disjoint.
struct EulerianSubgraph {
    std::vector<int> edges;                 // ascending edge ids
    std::vector<std::vector<int>> cycles;   // decomposition, deterministic
    std::vector<int> vertex_set(const Graph& g) const;
};

/// Rotation-system embedding: a cyclic order of darts at every vertex plus a
/// +-1 signature per edge (all +1 means the scheme is orientable as given).
/// Immutable; operations on it are pure.
class Embedding {
public:
    Embedding(Graph graph, std::vector<std::vector<int>> rotations,
              std::vector<int8_t> signature = {});

    const Graph& graph() const { return graph_; }
    const std::vector<int>& rotation(int v) const { return rotations_[v]; }
    const std::vector<std::vector<int>>& rotations() const { return rotations_; }
    int signature(int edge) const { return signature_[edge]; }
    const std::vector<int8_t>& signatures() const { return signature_; }
    bool all_positive() const { return all_positive_; }

    /// Rotation successor/predecessor of a dart around its endpoint.
    int succ(int dart) const;
    int pred(int dart) const;

private:
    Graph graph_;
    std::vector<std::vector<int>> rotations_;
    std::vector<int8_t> signature_;
    std::vector<int> rot_pos_; // dart -> index within its vertex rotation
    bool all_positive_ = true;
};

/// Complete face set of the embedding scheme. Deterministic: walks are listed
/// by their smallest (dart, side) state and each walk starts at that state.
/// Every edge is traversed exactly twice across all walks.
std::vector<FaceWalk> trace_faces(const Embedding& e);

/// n - m + f. Requires a connected graph.
int euler_characteristic(const Embedding& e);

/// Classify the carrier surface. The scheme is orientable iff the signature
/// normalizes to all-positive under vertex flips (spanning-tree test).
SurfaceKind surface_of(const Embedding& e);

/// True iff every facial walk is a cycle of the graph.
bool is_strong(const Embedding& e);

/// True iff every facial walk is a cycle that is induced and nonseparating
/// (deleting its vertices leaves the graph connected; empty counts connected).
bool is_polyhedral(const Embedding& e);

/// Least r >= 1 such that facial walks F_1..F_r chain x to y, consecutive
/// walks sharing a vertex. Throws SameVertex if x == y.
int facial_distance(const Embedding& e, int x, int y);

/// Face-BFS layer boundaries between x and y: Q_i is the GF(2) sum of all
/// facial walks within face-distance i of x, for i = 1..facial_distance-1.
/// The layers must be pairwise vertex-disjoint and avoid x and y; otherwise
/// LayeringDegenerate is thrown.
std::vector<EulerianSubgraph> face_bfs_layers(const Embedding& e, int x, int y);

/// Embedding text format: the graph block, then one `r <v> : <d1> <d2> ...`
/// line per vertex with darts written as `<edge-id>a` (first endpoint) or
/// `<edge-id>b` (second endpoint), then optional `s <edge-id> -1` lines for
/// negative signatures. All ids 1-based. The writer emits vertices ascending
/// and starts each rotation at its smallest dart, so output is canonical.
Embedding parse_embedding(const std::string& text);
std::string write_embedding(const Embedding& e);

/// Mirror image: every rotation reversed. Genus and strongness invariant.
Embedding reflected(const Embedding& e);

/// Total order key for rotation systems: per vertex ascending, the rotation
/// rotated to start at its smallest dart. Signatures are not included.
std::vector<int> rotation_key(const Embedding& e);

/// Lexicographically smaller of e and its mirror image, by rotation_key.
Embedding canonical_orientation(const Embedding& e);

} // namespace stronggenus
