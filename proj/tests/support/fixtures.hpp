#pragma once

#include <random>
#include <vector>

#include "stronggenus/embedding.hpp"
#include "stronggenus/graph.hpp"

namespace fixtures {

using stronggenus::Embedding;
using stronggenus::Graph;

Graph k4();
Graph k5();
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star3();
Graph cube_q3();
Graph prism6();
Graph petersen();
Graph heawood();
Graph two_parallel(); // two vertices, two parallel edges
Graph k4_subdivided();

/// Named small graphs used across the property tests, all connected.
std::vector<Graph> small_corpus();

/// Uniform random rotation system; optionally random +-1 signatures.
Embedding random_rotation(const Graph& g, std::mt19937_64& rng, bool random_signs = false);

/// Random 2-connected simple planar graph built by face splits and edge
/// subdivisions from a starting cycle; planar by construction.
Graph random_planar_2connected(std::mt19937_64& rng, int max_n);

} // namespace fixtures
