#include "stronggenus/families.hpp"

#include <algorithm>
#include <array>

namespace stronggenus {

namespace {

constexpr std::array<int, 3> kEven{0, 2, 4};
constexpr std::array<int, 3> kOdd{1, 3, 5};

} // namespace

NearPlanarInstance hex_cylinder(int r) {
    if (r < 1) fail(Errc::InvalidParameter, "hex_cylinder requires at least one ring");

    auto ring_vertex = [&](int i, int j) { return 6 * (i - 1) + ((j % 6 + 6) % 6); };
    int x = 6 * r;
    int y = 6 * r + 1;
    int n = 6 * r + 2;

    // spoke positions between ring i and i+1 alternate parity per ring
    auto spokes_of = [&](int i) { return (i % 2 == 1) ? kEven : kOdd; };
    // apex attachment = the spoke-free positions of the end rings
    std::array<int, 3> ax = kOdd; // ring 1 carries spokes at even positions
    std::array<int, 3> ay = (r >= 2 && spokes_of(r - 1) == kEven) ? kOdd : kEven;
    if (r == 1) ay = kEven;

    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= r; ++i)
        for (int j = 0; j < 6; ++j) edges.emplace_back(ring_vertex(i, j), ring_vertex(i, j + 1));
    for (int i = 1; i < r; ++i)
        for (int j : spokes_of(i)) edges.emplace_back(ring_vertex(i, j), ring_vertex(i + 1, j));
    for (int j : ax) edges.emplace_back(x, ring_vertex(1, j));
    for (int j : ay) edges.emplace_back(y, ring_vertex(r, j));
    edges.emplace_back(x, y);

    Graph graph(n, edges);
    int planarizing_edge = graph.edge_count() - 1;
    Graph planar_part = remove_edge(graph, planarizing_edge);

    // reference planar rotations for graph-xy: concentric drawing, x at the
    // center, rings outward, y as the opposite pole; counterclockwise order at
    // every vertex, which at y means descending ring positions
    auto dart_between = [&](const Graph& g, int u, int v) {
        auto e = g.find_edge(u, v);
        if (!e) fail(Errc::InternalError, "hex construction lost an edge");
        return g.edge_endpoints(*e).first == u ? Graph::dart_of(*e, 0) : Graph::dart_of(*e, 1);
    };
    std::vector<std::vector<int>> rot(planar_part.vertex_count());
    for (int i = 1; i <= r; ++i) {
        for (int j = 0; j < 6; ++j) {
            int v = ring_vertex(i, j);
            int to_next = dart_between(planar_part, v, ring_vertex(i, j + 1));
            int to_prev = dart_between(planar_part, v, ring_vertex(i, j - 1));
            bool outward_spoke = i < r && std::find(spokes_of(i).begin(), spokes_of(i).end(),
                                                    j) != spokes_of(i).end();
            bool outward_apex =
                i == r && std::find(ay.begin(), ay.end(), j) != ay.end();
            if (outward_spoke || outward_apex) {
                int out = dart_between(planar_part, v,
                                       outward_spoke ? ring_vertex(i + 1, j) : y);
                rot[v] = {out, to_next, to_prev};
            } else {
                bool inward_spoke =
                    i > 1 && std::find(spokes_of(i - 1).begin(), spokes_of(i - 1).end(),
                                       j) != spokes_of(i - 1).end();
                int in = dart_between(planar_part, v,
                                      inward_spoke ? ring_vertex(i - 1, j) : x);
                rot[v] = {to_next, in, to_prev};
            }
        }
    }
    for (int j : ax) rot[x].push_back(dart_between(planar_part, x, ring_vertex(1, j)));
    {
        std::array<int, 3> desc = ay;
        std::sort(desc.begin(), desc.end(), std::greater<int>());
        for (int j : desc) rot[y].push_back(dart_between(planar_part, y, ring_vertex(r, j)));
    }
    Embedding reference_planar(planar_part, rot);
    if (euler_characteristic(reference_planar) != 2)
        fail(Errc::InternalError, "hex reference embedding is not planar");

    // genus-1 embedding of the full graph: splice the xy darts into the planar
    // rotations, which routes xy through a handle between a face at x and a
    // face at y
    std::vector<std::vector<int>> torot(n);
    for (int v = 0; v < n; ++v) {
        torot[v].reserve(graph.degree(v));
        for (int d : rot[v]) {
            // planar_part shares edge ids with graph for all edges but xy
            torot[v].push_back(d);
        }
    }
    torot[x].push_back(Graph::dart_of(planarizing_edge, 0));
    torot[y].push_back(Graph::dart_of(planarizing_edge, 1));
    Embedding reference_toroidal(graph, torot);
    if (euler_characteristic(reference_toroidal) != 0)
        fail(Errc::InternalError, "hex handle embedding is not toroidal");

    NestedCertificate rings;
    rings.x = x;
    rings.y = y;
    for (int i = 1; i <= r; ++i) {
        std::vector<int> cyc;
        for (int j = 0; j < 6; ++j) cyc.push_back(ring_vertex(i, j));
        rings.cycles.push_back(std::move(cyc));
    }

    return NearPlanarInstance{std::move(graph), x,     y,
                              planarizing_edge, std::move(reference_planar),
                              std::move(rings), std::move(reference_toroidal)};
}

Graph k33() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
    return Graph(6, edges);
}

} // namespace stronggenus
