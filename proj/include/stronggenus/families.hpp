#pragma once

#include <optional>

#include "stronggenus/embedding.hpp"
#include "stronggenus/graph.hpp"
#include "stronggenus/planarity.hpp"

namespace stronggenus {

/// One generated test instance: a graph with a distinguished edge xy whose
/// removal leaves a planar graph, together with reference artifacts — the
/// nested-ring planar embedding of graph-xy, the ring certificate, and a
/// genus-1 embedding of the full graph obtained by routing xy through a
/// handle.
struct NearPlanarInstance {
    Graph graph;
    int x;
    int y;
    int planarizing_edge; // edge id in graph (always the last edge)
    Embedding reference_planar;
    NestedCertificate reference_rings;
    std::optional<Embedding> reference_toroidal;

    int rings() const { return reference_rings.ring_count(); }
};

/// Concentric-hexagon cylinder with r rings.
///
/// Ring i has vertices h[i][0..5] joined cyclically; consecutive rings are
/// joined by three spokes at alternating parity positions; an inner apex x is
/// joined to the three spoke-free vertices of ring 1 and an outer apex y to
/// the three spoke-free vertices of ring r; the edge xy comes last. The
/// result has 6r+2 vertices and 9r+4 edges; every ring vertex has degree 3
/// and the apexes have degree 4 (degree 3 in graph-xy). The rings are r
/// pairwise disjoint cycles separating x from y, so the facial distance
/// between x and y in the planar embedding of graph-xy is exactly r+1.
NearPlanarInstance hex_cylinder(int r);

/// Complete bipartite graph on parts {1,2,3} and {4,5,6} (1-based labels).
Graph k33();

} // namespace stronggenus
