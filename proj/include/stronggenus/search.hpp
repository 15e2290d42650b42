#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

#include "stronggenus/embedding.hpp"
#include "stronggenus/graph.hpp"

namespace stronggenus {

enum class SearchQuantity { MinGenus, StrongGenus };

struct SearchOptions {
    int cap = std::numeric_limits<int>::max(); // report AboveCap beyond this
    int threads = 1;
    double timeout_sec = 0.0; // 0 = unlimited
    bool prune = true;        // disable only for soundness cross-checks
};

/// Outcome of a rotation-system search. value is empty when every embedding
/// (or every strong embedding) exceeds the cap; with exhaustive=true that is a
/// completed proof, with exhaustive=false the search timed out and proves
/// nothing. The witness achieves value and is the lexicographically least
/// optimal rotation system (reflection classes included).
struct SearchResult {
    SearchQuantity quantity;
    std::optional<int> value;
    std::optional<Embedding> witness;
    std::uint64_t nodes = 0;
    bool exhaustive = true;
    int cap_used = 0;
};

/// Minimum orientable genus over all rotation systems, capped.
SearchResult min_genus(const Graph& g, const SearchOptions& opts = {});

/// Minimum orientable genus over rotation systems whose faces are all cycles.
SearchResult strong_genus(const Graph& g, const SearchOptions& opts = {});

/// Number of orientable rotation systems: product of (deg(v)-1)!, saturated
/// at uint64 max.
std::uint64_t rotation_count(const Graph& g);

/// Visit every orientable rotation system exactly once, in lexicographic
/// order of the per-vertex cyclic orders (first dart fixed per vertex).
/// Return false from the callback to stop early.
void enumerate_rotations(const Graph& g, const std::function<bool(const Embedding&)>& visit);

} // namespace stronggenus
