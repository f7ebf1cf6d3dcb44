#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo {

/// Raised when an exhaustive search would exceed its work budget. The search
/// never returns a non-optimal answer in place of this.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Upper limit on candidate seed sets an exhaustive search may evaluate.
struct WorkBudget {
    std::uint64_t max_candidates = 50'000'000;
};

/// Partition of V into the current dynamo M, A = {v not in M : |N_M(v)| <= tau(v)}
/// and B = the rest, all ascending.
struct ShrinkState {
    VertexSet M, A, B;

    /// Recomputes A and B from scratch for the given M.
    static ShrinkState of(const Graph& g, const ThresholdAssignment& tau, VertexSet M);

    /// Removal test as written: |N_{A u B}(v)| < |N_B(v)| + deg(v) - tau(v) + 1.
    bool removable_literal(const Graph& g, const ThresholdAssignment& tau, Vertex v) const;
    /// Equivalent reduced form: |N_A(v)| <= deg(v) - tau(v).
    bool removable(const Graph& g, const ThresholdAssignment& tau, Vertex v) const;
};

struct ShrinkResult {
    VertexSet dynamo;
    /// Vertices in the order they were dropped from M = V.
    std::vector<Vertex> removal_order;
};

/// Starts from M = V and repeatedly drops the lowest-index vertex of M that
/// passes the removal test, until none does. Each drop keeps M a dynamo, and
/// the final M has at most max{k : sum_{i<=k}(d_i + 1) <= n * avg(tau)} vertices.
///
/// |N_A(v)| never decreases while M shrinks, so a vertex that fails the test
/// once fails it forever. Restarting the scan at index 0 after each drop is
/// therefore the same as one forward pass, which with incremental A/B
/// bookkeeping runs in O(n + m).
ShrinkResult greedy_shrink(const Graph& g, const ThresholdAssignment& tau);

/// True iff no M \ {v} is a dynamo (by monotonicity, iff no proper subset is).
/// Throws std::invalid_argument if M itself is not a dynamo.
bool is_minimal(const Graph& g, const ThresholdAssignment& tau, const VertexSet& M);

/// Minimum-cardinality dynamo by enumeration in increasing size. Forced seeds
/// (tau(v) > deg(v)) are pinned into every candidate and sizes stop at the
/// degree-sequence bound. Throws BudgetExceeded instead of guessing.
VertexSet exact_min_dynamo(const Graph& g, const ThresholdAssignment& tau, WorkBudget budget = {});

}  // namespace dynamo
