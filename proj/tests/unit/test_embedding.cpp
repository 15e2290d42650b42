#include <doctest.h>

#include <algorithm>
#include <random>

#include "stronggenus/embedding.hpp"
#include "stronggenus/planarity.hpp"
#include "stronggenus/search.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

using namespace stronggenus;

namespace {

Embedding unique_rotation(const Graph& g) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rot[v] = g.darts_at(v);
    return Embedding(g, rot);
}

// all 64 rotation systems of k33 by hand-rolled nested swaps, independent of
// enumerate_rotations
template <typename F>
void for_each_k33_rotation(const Graph& g, F&& fn) {
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::vector<int>> rot(6);
        for (int v = 0; v < 6; ++v) {
            auto ds = g.darts_at(v);
            std::sort(ds.begin(), ds.end());
            if ((mask >> v) & 1) std::swap(ds[1], ds[2]);
            rot[v] = ds;
        }
        fn(Embedding(g, rot));
    }
}

} // namespace

TEST_CASE("triangle on the sphere") {
    Graph c3 = fixtures::cycle_graph(3);
    Embedding e = unique_rotation(c3);
    auto faces = trace_faces(e);
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].length() == 3);
    CHECK(faces[1].length() == 3);
    CHECK(euler_characteristic(e) == 2);
    CHECK(surface_of(e) == SurfaceKind{true, 0});
    CHECK(is_strong(e));
    CHECK(is_polyhedral(e)); // empty remainder counts as connected
}

TEST_CASE("tetrahedron faces") {
    auto e = planar_embedding(fixtures::k4());
    REQUIRE(e.has_value());
    auto faces = trace_faces(*e);
    REQUIRE(faces.size() == 4);
    for (const auto& w : faces) CHECK(w.length() == 3);
    CHECK(euler_characteristic(*e) == 2);
    CHECK(is_strong(*e));
    CHECK(is_polyhedral(*e));
}

TEST_CASE("k33 torus embeddings, strong and not") {
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    int chi0_strong = 0, chi0_nonstrong = 0, total = 0;
    for_each_k33_rotation(k33, [&](const Embedding& e) {
        ++total;
        int chi = euler_characteristic(e);
        CHECK(chi <= 2);
        CHECK((2 - chi) % 2 == 0);
        if (chi == 0) {
            bool strong = is_strong(e);
            if (strong) {
                ++chi0_strong;
                auto faces = trace_faces(e);
                CHECK(faces.size() == 3);
                for (const auto& w : faces) CHECK(w.length() == 6);
                // hexagon faces span all six vertices, so they have chords
                CHECK_FALSE(is_polyhedral(e));
            } else {
                ++chi0_nonstrong;
            }
        }
    });
    CHECK(total == 64);
    CHECK(chi0_strong > 0);
    CHECK(chi0_nonstrong > 0);
}

TEST_CASE("signed schemes") {
    Graph c3 = fixtures::cycle_graph(3);
    SUBCASE("one negative edge gives the projective plane") {
        std::vector<std::vector<int>> rot(3);
        for (int v = 0; v < 3; ++v) rot[v] = c3.darts_at(v);
        Embedding e(c3, rot, {1, 1, -1});
        CHECK(euler_characteristic(e) == 1);
        CHECK(surface_of(e) == SurfaceKind{false, 1});
    }
    SUBCASE("two negative edges normalize to the sphere") {
        std::vector<std::vector<int>> rot(3);
        for (int v = 0; v < 3; ++v) rot[v] = c3.darts_at(v);
        Embedding e(c3, rot, {1, -1, -1});
        SurfaceKind sk = surface_of(e);
        CHECK(sk.orientable);
        CHECK(sk.genus == 0);
    }
    SUBCASE("parallel pair with one negative edge") {
        Graph c2 = fixtures::two_parallel();
        std::vector<std::vector<int>> rot(2);
        for (int v = 0; v < 2; ++v) rot[v] = c2.darts_at(v);
        Embedding e(c2, rot, {1, -1});
        auto faces = trace_faces(e);
        CHECK(faces.size() == 1);
        CHECK(faces[0].length() == 4);
        CHECK(surface_of(e) == SurfaceKind{false, 1});
    }
}

TEST_CASE("face traversal conservation over random rotations") {
    std::mt19937_64 rng(20240817);
    for (const Graph& g : fixtures::small_corpus()) {
        for (int t = 0; t < 40; ++t) {
            bool signs = t % 3 == 2;
            Embedding e = fixtures::random_rotation(g, rng, signs);
            auto faces = trace_faces(e);
            int total_len = 0;
            std::vector<int> edge_uses(g.edge_count(), 0);
            for (const auto& w : faces) {
                total_len += w.length();
                for (int d : w.darts) ++edge_uses[Graph::edge_of(d)];
            }
            CHECK(total_len == 2 * g.edge_count());
            for (int uses : edge_uses) CHECK(uses == 2);
            int chi = g.vertex_count() - g.edge_count() + static_cast<int>(faces.size());
            CHECK(chi <= 2);
            if (e.all_positive()) {
                CHECK((2 - chi) % 2 == 0);
                // the compact oriented tracer must agree with the signed one
                CHECK(static_cast<int>(faces.size()) ==
                      oracles::count_faces_oriented(g, e.rotations()));
            }
        }
    }
}

TEST_CASE("facial distance") {
    auto q3 = planar_embedding(fixtures::cube_q3());
    REQUIRE(q3.has_value());
    // antipodal pair in the cube labelling: 0 and 7
    CHECK(facial_distance(*q3, 0, 7) == 2);
    CHECK(facial_distance(*q3, 7, 0) == 2);
    // adjacent vertices share a face
    CHECK(facial_distance(*q3, 0, 1) == 1);
    CHECK_THROWS_AS((void)facial_distance(*q3, 3, 3), Error);

    // oracle agreement on every pair, here and on a couple of planar graphs
    for (const Graph& g : {fixtures::cube_q3(), fixtures::prism6(), fixtures::k4()}) {
        auto e = planar_embedding(g);
        REQUIRE(e.has_value());
        auto faces = trace_faces(*e);
        std::vector<std::vector<int>> fsets;
        for (const auto& w : faces) {
            auto vs = w.vertices;
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            fsets.push_back(vs);
        }
        for (int x = 0; x < g.vertex_count(); ++x)
            for (int y = 0; y < g.vertex_count(); ++y) {
                if (x == y) continue;
                int d = facial_distance(*e, x, y);
                CHECK(d == oracles::facial_distance_bfs(fsets, x, y));
                CHECK(d >= 1);
                CHECK((d == 1) == [&] {
                    for (const auto& vs : fsets)
                        if (std::binary_search(vs.begin(), vs.end(), x) &&
                            std::binary_search(vs.begin(), vs.end(), y))
                            return true;
                    return false;
                }());
            }
    }
}

TEST_CASE("embedding text format round-trips") {
    std::mt19937_64 rng(7);
    for (const Graph& g : fixtures::small_corpus()) {
        for (int t = 0; t < 5; ++t) {
            Embedding e = fixtures::random_rotation(g, rng, t == 4);
            std::string text = write_embedding(e);
            Embedding back = parse_embedding(text);
            CHECK(write_embedding(back) == text);
            CHECK(euler_characteristic(back) == euler_characteristic(e));
            CHECK(surface_of(back) == surface_of(e));
        }
    }
    CHECK_THROWS_AS((void)parse_embedding("p 2 1\ne 1 2\nr 1 : 1a\n"), Error);
    CHECK_THROWS_AS((void)parse_embedding("p 2 1\ne 1 2\nr 1 : 1a\nr 2 : 1a\n"), Error);
}

TEST_CASE("canonical orientation is stable") {
    std::mt19937_64 rng(99);
    for (const Graph& g : fixtures::small_corpus()) {
        Embedding e = fixtures::random_rotation(g, rng);
        Embedding c = canonical_orientation(e);
        CHECK(rotation_key(c) <= rotation_key(e));
        CHECK(rotation_key(canonical_orientation(reflected(e))) == rotation_key(c));
        CHECK(euler_characteristic(c) == euler_characteristic(e));
    }
}
