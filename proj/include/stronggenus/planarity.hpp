#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stronggenus/embedding.hpp"
#include "stronggenus/graph.hpp"

namespace stronggenus {

/// Ordered witness that the facial distance between x and y is cycles.size()+1
/// in a planar embedding: pairwise vertex-disjoint cycles avoiding x and y,
/// innermost first, each separating x from y.
struct NestedCertificate {
    int x = -1;
    int y = -1;
    std::vector<std::vector<int>> cycles;

    int ring_count() const { return static_cast<int>(cycles.size()); }
};

/// Planar embedding (all-positive, euler characteristic 2) or nullopt when the
/// graph is not planar. Deterministic: fragments and faces are processed in
/// canonical order and the result is normalized against its mirror image.
std::optional<Embedding> planar_embedding(const Graph& g);

/// True iff the cycle (vertex sequence, disjoint from {x,y}) separates x from
/// y on the sphere carrying e: faces fall into two groups once the cycle's
/// edges stop being crossable, and x's faces land in a different group from
/// y's.
bool cycle_separates(const Embedding& e, const std::vector<int>& cycle, int x, int y);

/// Extract a maximum family of nested vertex-disjoint cycles separating x
/// from y, via face-BFS layer boundaries with an exhaustive fallback on small
/// graphs. Requires a planar embedding. The result always passes
/// verify_certificate; throws ExtractionFailed otherwise.
NestedCertificate nested_cycle_certificate(const Embedding& planar, int x, int y);

/// Check a certificate: cycles of g, pairwise disjoint, avoiding the
/// terminals, each separating x from y, listed innermost first. When g is a
/// subdivision of a 3-connected graph the separation check is the purely
/// combinatorial one (deleting the cycle's vertices disconnects x from y);
/// otherwise the face-side test in e is used. Failure reasons are appended to
/// *reasons when given.
bool verify_certificate(const Graph& g, const NestedCertificate& cert,
                        const Embedding& planar,
                        std::vector<std::string>* reasons = nullptr);

/// Certificate text format: `x <v>`, `y <v>`, then `c ...` lines innermost
/// first, all 1-based.
NestedCertificate parse_certificate(const std::string& text);
std::string write_certificate(const NestedCertificate& cert);

} // namespace stronggenus
