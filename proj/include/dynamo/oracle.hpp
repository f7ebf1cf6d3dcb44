#pragma once

// Brute-force reference computations for small graphs. Nothing here calls
// into the algorithms it is used to check.

#include <cstddef>
#include <cstdint>

#include "dynamo/graph.hpp"

namespace dynamo::oracle {

/// Recursive enumeration of all matchings.
std::size_t matching_number(const Graph& g);

/// Smallest covering subset over all 2^n subsets.
std::size_t vertex_cover_number(const Graph& g);

/// Largest edge-free subset over all 2^n subsets.
std::size_t independence_number(const Graph& g);

/// Tries k = 1, 2, ... against every colouring in k^n.
std::size_t chromatic_number(const Graph& g);

/// Fixpoint of repeated single-vertex activations from `seed_mask`.
bool spans(const Graph& g, const ThresholdAssignment& tau, std::uint64_t seed_mask);

/// Every subset, no pinning and no cutoff.
std::size_t min_dynamo_size(const Graph& g, const ThresholdAssignment& tau);

/// Depth-first search over individual activation orders (memoised on the
/// active set): true iff some order activates every vertex.
bool some_activation_order_completes(const Graph& g, const ThresholdAssignment& tau, std::uint64_t seed_mask);

/// Every bit of `mask` covers the edges: true iff each edge has an endpoint in it.
bool covers(const Graph& g, std::uint64_t mask);

}  // namespace dynamo::oracle
