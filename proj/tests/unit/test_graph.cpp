#include <doctest.h>

#include <algorithm>
#include <functional>

#include "stronggenus/graph.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace stronggenus;

namespace {

const char* k33_text =
    "p 6 9\n"
    "e 1 4\ne 1 5\ne 1 6\n"
    "e 2 4\ne 2 5\ne 2 6\n"
    "e 3 4\ne 3 5\ne 3 6\n";

bool throws_code(Errc code, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == code;
    }
    return false;
}

} // namespace

TEST_CASE("graph parsing") {
    Graph g = parse_graph(k33_text);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    CHECK(g.dart_count() == 18);

    Graph tri = parse_graph("p 3 3\ne 1 2\ne 2 3\ne 3 1\n");
    CHECK(girth(tri) == 3);

    CHECK(throws_code(Errc::LoopRejected, [] { parse_graph("p 2 1\ne 1 1\n"); }));
    CHECK(throws_code(Errc::VertexOutOfRange, [] { parse_graph("p 2 1\ne 1 3\n"); }));
    CHECK(throws_code(Errc::MalformedInput, [] { parse_graph("p 2 1\ne 1\n"); }));
    CHECK(throws_code(Errc::MalformedInput, [] { parse_graph("p 2 2\ne 1 2\n"); }));
    CHECK(throws_code(Errc::MalformedInput, [] { parse_graph("e 1 2\n"); }));

    // comments and blank lines are fine
    Graph h = parse_graph("# header\np 2 1\n\n# edge\ne 1 2\n");
    CHECK(h.edge_count() == 1);
}

TEST_CASE("graph writer round-trips") {
    for (const Graph& g : fixtures::small_corpus()) {
        std::string text = write_graph(g);
        Graph h = parse_graph(text);
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edge_list() == g.edge_list());
        CHECK(write_graph(h) == text);
    }
}

TEST_CASE("dart structure invariants") {
    for (const Graph& g : fixtures::small_corpus()) {
        int degsum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degsum += g.degree(v);
        CHECK(degsum == 2 * g.edge_count()); // handshake
        for (int d = 0; d < g.dart_count(); ++d) {
            CHECK(Graph::mate(Graph::mate(d)) == d);
            CHECK(Graph::mate(d) != d);
            CHECK(g.endpoint(d) != g.far_endpoint(d)); // no loops
        }
    }
}

TEST_CASE("is_cubic") {
    CHECK(is_cubic(parse_graph(k33_text)));
    CHECK_FALSE(is_cubic(fixtures::cycle_graph(4)));
    CHECK(is_cubic(fixtures::cube_q3()));
    CHECK(is_cubic(fixtures::petersen()));
}

TEST_CASE("connectivity") {
    CHECK(connectivity(fixtures::k4()) == 3);
    CHECK(connectivity(fixtures::cycle_graph(6)) == 2);
    CHECK(connectivity(parse_graph(k33_text)) == 3);
    CHECK(connectivity(fixtures::path_graph(4)) == 1);
    CHECK(connectivity(Graph(3, {{0, 1}})) == 0); // disconnected
    CHECK(connectivity(fixtures::k5()) == 4);
    CHECK(connectivity(fixtures::petersen()) == 3);
}

TEST_CASE("connectivity bounded by minimum degree") {
    for (const Graph& g : fixtures::small_corpus()) {
        if (!is_connected(g)) continue;
        int mindeg = g.degree(0);
        for (int v = 0; v < g.vertex_count(); ++v) mindeg = std::min(mindeg, g.degree(v));
        CHECK(connectivity(g) <= mindeg);
    }
}

TEST_CASE("girth") {
    CHECK(girth(fixtures::k4()) == 3);
    CHECK(girth(parse_graph(k33_text)) == 4);
    CHECK(girth(fixtures::two_parallel()) == 2);
    CHECK_FALSE(girth(fixtures::path_graph(5)).has_value());
    CHECK_FALSE(girth(fixtures::star3()).has_value());
    CHECK(girth(fixtures::heawood()) == 6);
    CHECK(girth(fixtures::petersen()) == 5);

    for (const Graph& g : fixtures::small_corpus())
        CHECK(girth(g) == oracles::shortest_cycle(g));
}

TEST_CASE("girth never decreases under edge subdivision") {
    for (const Graph& g : fixtures::small_corpus()) {
        auto before = girth(g);
        for (int e = 0; e < g.edge_count(); ++e) {
            auto after = girth(subdivide_edge(g, e));
            if (before.has_value()) {
                REQUIRE(after.has_value());
                CHECK(*after >= *before);
            } else {
                CHECK_FALSE(after.has_value());
            }
        }
    }
}

TEST_CASE("suppress_degree_two") {
    Graph sub = fixtures::k4_subdivided();
    CHECK(sub.vertex_count() == 10);
    Graph back = suppress_degree_two(sub);
    CHECK(back.vertex_count() == 4);
    CHECK(back.edge_count() == 6);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(back.adjacent(u, v));

    // identity on graphs without degree-2 vertices
    Graph k33 = parse_graph(k33_text);
    Graph same = suppress_degree_two(k33);
    CHECK(same.edge_list() == k33.edge_list());

    CHECK(throws_code(Errc::DegenerateCycle,
                      [] { suppress_degree_two(fixtures::cycle_graph(6)); }));

    // pendant cycle: triangle hanging off a claw center by two degree-2 nodes
    Graph pendant(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(throws_code(Errc::DegenerateCycle, [&] { suppress_degree_two(pendant); }));

    // idempotent on its own output
    Graph once = suppress_degree_two(sub);
    Graph twice = suppress_degree_two(once);
    CHECK(once.edge_list() == twice.edge_list());
}

TEST_CASE("is_subdivision_of_3connected") {
    CHECK(is_subdivision_of_3connected(fixtures::k4_subdivided()));
    CHECK(is_subdivision_of_3connected(parse_graph(k33_text)));
    CHECK_FALSE(is_subdivision_of_3connected(fixtures::cycle_graph(6)));
    CHECK_FALSE(is_subdivision_of_3connected(fixtures::path_graph(4)));
    CHECK(is_subdivision_of_3connected(fixtures::prism6()));
}

TEST_CASE("remove_edge and subdivide_edge bookkeeping") {
    Graph g = fixtures::k4();
    Graph h = remove_edge(g, g.edge_count() - 1);
    CHECK(h.edge_count() == 5);
    Graph s = subdivide_edge(g, 0);
    CHECK(s.vertex_count() == 5);
    CHECK(s.edge_count() == 7);
    CHECK(s.degree(4) == 2);
}
