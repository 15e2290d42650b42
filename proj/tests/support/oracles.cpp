#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>

namespace oracles {

int count_faces_oriented(const Graph& g, const std::vector<std::vector<int>>& rot) {
    int D = g.dart_count();
    std::vector<int> succ(D, -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& r = rot[v];
        for (size_t i = 0; i < r.size(); ++i) succ[r[i]] = r[(i + 1) % r.size()];
    }
    std::vector<char> seen(D, 0);
    int faces = 0;
    for (int d0 = 0; d0 < D; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        while (!seen[d]) {
            seen[d] = 1;
            d = succ[Graph::mate(d)];
        }
    }
    return faces;
}

std::vector<int> degree_audit(const Graph& g) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> all_simple_cycles(const Graph& g,
                                                const std::vector<char>& banned_in) {
    std::vector<char> banned = banned_in;
    banned.resize(g.vertex_count(), 0);
    std::vector<std::vector<int>> out;
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (banned[u]) continue;
        for (int v = u + 1; v < n; ++v) {
            if (banned[v]) continue;
            if (g.edges_between(u, v).size() >= 2) out.push_back({u, v});
        }
    }
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    std::function<void(int)> extend = [&](int v) {
        int root = path[0];
        for (int d : g.darts_at(v)) {
            int w = g.far_endpoint(d);
            if (banned[w]) continue;
            if (w == root && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
            if (w <= root || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = 1;
            extend(w);
            on_path[w] = 0;
            path.pop_back();
        }
    };
    for (int root = 0; root < n; ++root) {
        if (banned[root]) continue;
        path = {root};
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[root] = 1;
        extend(root);
    }
    return out;
}

std::optional<int> shortest_cycle(const Graph& g) {
    auto cycles = all_simple_cycles(g);
    std::optional<int> best;
    for (const auto& c : cycles) {
        int len = static_cast<int>(c.size());
        if (!best || len < *best) best = len;
    }
    return best;
}

int facial_distance_bfs(const std::vector<std::vector<int>>& face_vertex_sets, int x,
                        int y) {
    size_t f = face_vertex_sets.size();
    auto has = [&](size_t i, int v) {
        return std::find(face_vertex_sets[i].begin(), face_vertex_sets[i].end(), v) !=
               face_vertex_sets[i].end();
    };
    std::vector<int> dist(f, -1);
    std::queue<size_t> q;
    for (size_t i = 0; i < f; ++i)
        if (has(i, x)) {
            dist[i] = 1;
            q.push(i);
        }
    while (!q.empty()) {
        size_t i = q.front();
        q.pop();
        if (has(i, y)) return dist[i];
        for (size_t j = 0; j < f; ++j) {
            if (dist[j] >= 0) continue;
            bool share = false;
            for (int v : face_vertex_sets[i])
                if (has(j, v)) {
                    share = true;
                    break;
                }
            if (share) {
                dist[j] = dist[i] + 1;
                q.push(j);
            }
        }
    }
    return -1;
}

bool separates_on_sphere(const Embedding& planar, const std::vector<int>& cycle, int x,
                         int y) {
    const Graph& g = planar.graph();
    std::vector<char> on_cycle_edge(g.edge_count(), 0);
    size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i) {
        auto e = g.find_edge(cycle[i], cycle[(i + 1) % k]);
        if (e) on_cycle_edge[*e] = 1;
    }
    auto faces = stronggenus::trace_faces(planar);
    std::vector<int> group(faces.size());
    std::iota(group.begin(), group.end(), 0);
    bool changed = true;
    while (changed) { // naive closure; face counts are tiny here
        changed = false;
        std::vector<std::vector<int>> by_edge(g.edge_count());
        for (size_t fi = 0; fi < faces.size(); ++fi)
            for (int d : faces[fi].darts) by_edge[Graph::edge_of(d)].push_back(group[fi]);
        std::vector<int> remap(faces.size());
        std::iota(remap.begin(), remap.end(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (on_cycle_edge[e] || by_edge[e].empty()) continue;
            int lo = *std::min_element(by_edge[e].begin(), by_edge[e].end());
            for (int gr : by_edge[e])
                if (remap[gr] > lo) remap[gr] = lo;
        }
        for (auto& gr : group) {
            int before = gr;
            while (remap[gr] != gr) gr = remap[gr];
            if (gr != before) changed = true;
        }
    }
    auto group_of_vertex = [&](int v) {
        for (size_t fi = 0; fi < faces.size(); ++fi)
            if (faces[fi].contains_vertex(v)) return group[fi];
        return -1;
    };
    return group_of_vertex(x) != group_of_vertex(y);
}

int max_nested_separating(const Embedding& planar, int x, int y) {
    const Graph& g = planar.graph();
    std::vector<char> banned(g.vertex_count(), 0);
    banned[x] = banned[y] = 1;
    auto cycles = all_simple_cycles(g, banned);
    std::vector<std::vector<int>> sep;
    for (auto& c : cycles)
        if (separates_on_sphere(planar, c, x, y)) sep.push_back(std::move(c));

    size_t k = sep.size();
    std::vector<std::vector<char>> conflict(k, std::vector<char>(k, 0));
    for (size_t i = 0; i < k; ++i) {
        std::vector<char> in_i(g.vertex_count(), 0);
        for (int v : sep[i]) in_i[v] = 1;
        for (size_t j = i + 1; j < k; ++j)
            for (int v : sep[j])
                if (in_i[v]) {
                    conflict[i][j] = conflict[j][i] = 1;
                    break;
                }
    }
    int best = 0;
    std::vector<int> cur;
    std::function<void(size_t)> go = [&](size_t i) {
        if (static_cast<int>(cur.size()) > best) best = static_cast<int>(cur.size());
        if (i == k) return;
        if (static_cast<int>(cur.size() + (k - i)) <= best) return;
        bool ok = true;
        for (int c : cur)
            if (conflict[c][i]) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(static_cast<int>(i));
            go(i + 1);
            cur.pop_back();
        }
        go(i + 1);
    };
    go(0);
    return best;
}

bool separating_by_subset_enumeration(const Embedding& e, const std::vector<char>& target) {
    auto faces = stronggenus::trace_faces(e);
    int m = e.graph().edge_count();
    size_t f = faces.size();
    std::vector<std::vector<char>> fv(f, std::vector<char>(m, 0));
    for (size_t i = 0; i < f; ++i)
        for (int ed : faces[i].odd_edges()) fv[i][ed] ^= 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f); ++mask) {
        std::vector<char> acc(m, 0);
        for (size_t i = 0; i < f; ++i)
            if (mask & (std::uint64_t{1} << i))
                for (int b = 0; b < m; ++b) acc[b] ^= fv[i][b];
        if (acc == target) return true;
    }
    return false;
}

// ---- exhaustive cubic-graph generation --------------------------------------
// Graphs on up to 16 vertices as adjacency bitmasks. Canonical form: the
// column-major upper-triangle coding must be lexicographically maximal over
// all vertex orderings; removing the last vertex preserves canonicity, so
// extending canonical graphs by one vertex at a time visits each isomorphism
// class exactly once.
namespace {

struct SmallG {
    int n = 0;
    std::array<uint16_t, 16> adj{};
};

uint32_t column_value(const SmallG& g, const std::vector<int>& placed, int w) {
    uint32_t val = 0;
    for (int i = 0; i < static_cast<int>(placed.size()); ++i)
        val = (val << 1) | ((g.adj[w] >> placed[i]) & 1);
    return val;
}

// does some ordering beat the identity coding?
bool beats_identity(const SmallG& g, std::vector<int>& placed, std::vector<char>& used) {
    int p = static_cast<int>(placed.size());
    if (p == g.n) return false; // full automorphism, no improvement
    std::vector<int> identity(p);
    for (int i = 0; i < p; ++i) identity[i] = i;
    uint32_t target = column_value(g, identity, p);
    for (int w = 0; w < g.n; ++w) {
        if (used[w]) continue;
        uint32_t val = column_value(g, placed, w);
        if (val < target) continue;
        if (val > target) return true;
        placed.push_back(w);
        used[w] = 1;
        bool better = beats_identity(g, placed, used);
        used[w] = 0;
        placed.pop_back();
        if (better) return true;
    }
    return false;
}

bool is_canonical(const SmallG& g) {
    std::vector<int> placed;
    std::vector<char> used(g.n, 0);
    return !beats_identity(g, placed, used);
}

int degree(const SmallG& g, int v) { return __builtin_popcount(g.adj[v]); }

bool extendable_to_cubic(const SmallG& g, int target_n) {
    int deficit = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = degree(g, v);
        if (d > 3) return false;
        deficit += 3 - d;
    }
    int r = target_n - g.n;
    if (deficit > 3 * r) return false;
    if ((3 * r - deficit) % 2 != 0) return false;
    // a saturated component smaller than the whole graph can never reconnect
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack = {v};
        comp[v] = nc;
        std::vector<int> members;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            members.push_back(a);
            for (int b = 0; b < g.n; ++b)
                if ((g.adj[a] >> b) & 1 && comp[b] < 0) {
                    comp[b] = nc;
                    stack.push_back(b);
                }
        }
        bool saturated = true;
        for (int mbr : members)
            if (degree(g, mbr) < 3) saturated = false;
        if (saturated && !(g.n == target_n && static_cast<int>(members.size()) == g.n))
            return false;
        ++nc;
    }
    if (g.n == target_n && nc > 1) return false;
    return true;
}

void generate(SmallG& g, int target_n, std::vector<Graph>& out) {
    if (g.n == target_n) {
        for (int v = 0; v < g.n; ++v)
            if (degree(g, v) != 3) return;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v)
                if ((g.adj[u] >> v) & 1) edges.emplace_back(u, v);
        out.emplace_back(g.n, edges);
        return;
    }
    int k = g.n;
    // choose the new vertex's neighbours among the existing ones
    std::vector<int> open;
    for (int v = 0; v < k; ++v)
        if (degree(g, v) < 3) open.push_back(v);
    int cnt = static_cast<int>(open.size());
    for (int mask = 0; mask < (1 << cnt); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) > 3) continue;
        SmallG h = g;
        h.n = k + 1;
        for (int i = 0; i < cnt; ++i)
            if ((mask >> i) & 1) {
                h.adj[open[i]] |= uint16_t(1) << k;
                h.adj[k] |= uint16_t(1) << open[i];
            }
        if (!extendable_to_cubic(h, target_n)) continue;
        if (!is_canonical(h)) continue;
        generate(h, target_n, out);
    }
}

} // namespace

std::vector<Graph> all_connected_cubic(int n) {
    std::vector<Graph> out;
    if (n < 4 || n % 2 != 0 || n > 16) return out;
    SmallG g;
    g.n = 1;
    generate(g, n, out);
    return out;
}

} // namespace oracles
