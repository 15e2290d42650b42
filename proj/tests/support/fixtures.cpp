#include "fixtures.hpp"

#include <algorithm>
#include <set>

namespace fixtures {

Graph k4() {
    return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

Graph k5() {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
    return Graph(5, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph cube_q3() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.emplace_back(v, v ^ (1 << b));
    return Graph(8, e);
}

Graph prism6() {
    return Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);      // outer cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        e.emplace_back(i, 5 + i);            // spokes
    }
    return Graph(10, e);
}

Graph heawood() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
    return Graph(14, e);
}

Graph two_parallel() { return Graph(2, {{0, 1}, {0, 1}}); }

Graph k4_subdivided() {
    Graph g = k4();
    for (int e = 5; e >= 0; --e) g = stronggenus::subdivide_edge(g, e);
    return g;
}

std::vector<Graph> small_corpus() {
    return {k4(),          k5(),      cycle_graph(3), cycle_graph(6), path_graph(4),
            star3(),       cube_q3(), prism6(),       petersen(),     two_parallel(),
            stronggenus::Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 5}, {4, 5}})};
}

Embedding random_rotation(const Graph& g, std::mt19937_64& rng, bool random_signs) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        rot[v] = g.darts_at(v);
        std::shuffle(rot[v].begin(), rot[v].end(), rng);
    }
    std::vector<int8_t> sig(g.edge_count(), 1);
    if (random_signs)
        for (auto& s : sig) s = (rng() & 1) ? 1 : -1;
    return Embedding(g, std::move(rot), std::move(sig));
}

Graph random_planar_2connected(std::mt19937_64& rng, int max_n) {
    auto rnd = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };
    int start = rnd(3, 6);
    int n = start;
    std::vector<std::pair<int, int>> edges;
    // faces as vertex cycles; keeping them is what keeps chords planar
    std::vector<std::vector<int>> faces;
    {
        std::vector<int> cyc(start);
        for (int i = 0; i < start; ++i) {
            cyc[i] = i;
            edges.emplace_back(i, (i + 1) % start);
        }
        faces.push_back(cyc);
        std::reverse(cyc.begin(), cyc.end());
        faces.push_back(cyc);
    }
    auto adjacent = [&](int u, int v) {
        for (auto [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    };
    int ops = rnd(4, 18);
    for (int t = 0; t < ops; ++t) {
        bool can_grow = n < max_n;
        bool chord = rng() % 2 == 0 || !can_grow;
        if (chord) {
            int fi = rnd(0, static_cast<int>(faces.size()) - 1);
            auto& f = faces[fi];
            int len = static_cast<int>(f.size());
            if (len < 4) continue;
            int i = rnd(0, len - 1);
            int j = rnd(0, len - 1);
            if (i > j) std::swap(i, j);
            if (i == j || j == i + 1 || (i == 0 && j == len - 1)) continue;
            if (adjacent(f[i], f[j])) continue;
            edges.emplace_back(f[i], f[j]);
            std::vector<int> f1(f.begin() + i, f.begin() + j + 1);
            std::vector<int> f2(f.begin() + j, f.end());
            f2.insert(f2.end(), f.begin(), f.begin() + i + 1);
            faces[fi] = f1;
            faces.push_back(f2);
        } else {
            int ei = rnd(0, static_cast<int>(edges.size()) - 1);
            auto [u, v] = edges[ei];
            int w = n++;
            edges[ei] = {u, w};
            edges.emplace_back(w, v);
            for (auto& f : faces) {
                std::vector<int> nf;
                for (size_t i = 0; i < f.size(); ++i) {
                    nf.push_back(f[i]);
                    int a = f[i], b = f[(i + 1) % f.size()];
                    if ((a == u && b == v) || (a == v && b == u)) nf.push_back(w);
                }
                f = nf;
            }
        }
    }
    return Graph(n, edges);
}

} // namespace fixtures
