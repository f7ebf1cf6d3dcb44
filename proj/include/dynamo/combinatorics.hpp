#pragma once

#include <cstddef>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo {

/// A set of pairwise vertex-disjoint edges, each stored as (u, v) with u < v.
struct Matching {
    std::vector<Edge> edges;
    std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum-cardinality matching via Edmonds' augmenting paths with blossom
/// contraction, O(n^3).
Matching maximum_matching(const Graph& g);

/// True when `m` is a set of disjoint edges of `g`.
bool is_matching(const Graph& g, const Matching& m);

struct VertexCover {
    VertexSet vertices;
    std::size_t size() const noexcept { return vertices.size(); }
};

/// Exact minimum vertex cover by branch and bound. Exponential in the worst
/// case; meant for graphs of a few dozen vertices.
VertexCover minimum_vertex_cover(const Graph& g);

bool is_vertex_cover(const Graph& g, const VertexSet& cover);

/// n - beta(G).
std::size_t independence_number(const Graph& g);

/// Smallest k admitting a proper k-colouring (0 for the empty graph).
std::size_t chromatic_number(const Graph& g);

}  // namespace dynamo
