#pragma once

#include <optional>

#include "stronggenus/error.hpp"

namespace stronggenus {

/// Closed-form bound report for a graph with the given parameters.
struct BoundsReport {
    std::optional<int> q;              // facial distance input, when given
    std::optional<int> fdist_bound;    // strong-genus lower bound from q
    int orientable_lb = 0;             // genus lower bounds from the girth
    int nonorientable_lb = 0;
    std::optional<int> moore_order;    // minimum cubic order for even girth
    int max_genus_ub = 0;              // one-face embedding ceiling
};

/// Strong-genus lower bound forced by facial distance q between the ends of a
/// planarizing edge: floor(q/3). Applies to orientable and non-orientable
/// strong embeddings alike.
int strong_genus_lower_bound(int q);

/// Minimum order of a cubic graph with the given even girth: 2*(2^(g/2)-1).
/// Odd girth is outside the supported path.
int moore_bound_cubic(int girth);

/// Genus lower bounds from Euler's formula when every face has length at
/// least the girth: f <= floor(2m/girth), chi <= n - m + f.
/// Returns (orientable_lb, nonorientable_lb), both floored at 0.
std::pair<int, int> euler_girth_bound(int n, int m, int girth);

/// Largest genus any orientable 2-cell embedding can have: floor((m-n+1)/2).
int max_genus_ub(int n, int m);

} // namespace stronggenus
