#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "dynamo/graph.hpp"
#include "dynamo/random.hpp"

namespace dynamo::corpus {

/// G(n, p) drawn from `rng`.
Graph random_graph(Rng& rng, std::size_t n, double p);

/// Uniform random labelled tree shape (each vertex attaches to a uniformly
/// chosen earlier vertex of a random permutation).
Graph random_tree(Rng& rng, std::size_t n);

/// Random spanning tree plus each remaining pair independently with
/// probability `extra`. Always connected.
Graph random_connected_graph(Rng& rng, std::size_t n, double extra);

/// tau(v) uniform in [0, deg(v)].
ThresholdAssignment random_degree_respecting(Rng& rng, const Graph& g);

/// Every labelled graph on n vertices (2^(n(n-1)/2) of them).
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

/// Every labelled cubic graph on n vertices in which vertex 0 is adjacent to
/// 1, 2 and 3. Every cubic graph on n >= 4 vertices is isomorphic to at least
/// one of these.
void for_each_cubic_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

}  // namespace dynamo::corpus
