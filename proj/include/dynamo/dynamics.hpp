#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo {

/// Raised when a claimed activation partition is not a partition at all
/// (overlapping sets, unknown ids).
class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rounds D_0, D_1, ..., D_k of the threshold activation process. D_0 is the
/// seed exactly as given (deduplicated and sorted); each later round is the
/// full set of inactive vertices that meet their threshold against all earlier
/// rounds, and the process stops before the first empty round.
struct ActivationTrace {
    std::vector<VertexSet> rounds;
    std::vector<char> active;
    bool complete = false;

    std::size_t activated_count() const;
    /// k, the number of activation rounds after the seed.
    std::size_t last_round() const { return rounds.empty() ? 0 : rounds.size() - 1; }
};

/// Throws std::out_of_range for seed ids outside the graph and GraphError on a
/// threshold length mismatch.
ActivationTrace propagate(const Graph& g, const ThresholdAssignment& tau, std::span<const Vertex> seed);

bool is_dynamo(const Graph& g, const ThresholdAssignment& tau, std::span<const Vertex> seed);

/// Checks an arbitrary (not necessarily greedy) schedule: every vertex of
/// partition[i], i >= 1, has at least tau(v) neighbours in the union of
/// partition[0..i-1]. Coverage of V is not required. Throws TraceError on
/// overlapping sets or unknown vertex ids.
bool verify_trace(const Graph& g, const ThresholdAssignment& tau, std::span<const VertexSet> partition);

}  // namespace dynamo
