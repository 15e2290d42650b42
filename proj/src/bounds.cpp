#include "stronggenus/bounds.hpp"

#include <algorithm>

namespace stronggenus {

int strong_genus_lower_bound(int q) {
    if (q < 1) fail(Errc::InvalidParameter, "facial distance is at least 1");
    return q / 3;
}

int moore_bound_cubic(int girth) {
    if (girth < 4 || girth % 2 != 0)
        fail(Errc::OddGirthUnsupported, "moore_bound_cubic expects an even girth >= 4");
    return 2 * ((1 << (girth / 2)) - 1);
}

std::pair<int, int> euler_girth_bound(int n, int m, int girth) {
    if (n < 1 || m < n - 1 || girth < 2)
        fail(Errc::InvalidParameter, "euler_girth_bound: parameters not a connected graph");
    int f_max = (2 * m) / girth;
    int chi_max = n - m + f_max;
    int orientable_lb = std::max(0, (2 - chi_max + 1) / 2);
    int nonorientable_lb = std::max(0, 2 - chi_max);
    return {orientable_lb, nonorientable_lb};
}

int max_genus_ub(int n, int m) {
    if (m < n - 1) fail(Errc::InvalidParameter, "max_genus_ub: fewer edges than a tree");
    return (m - n + 1) / 2;
}

} // namespace stronggenus
