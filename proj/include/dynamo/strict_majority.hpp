#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dynamo/graph.hpp"
#include "dynamo/minimize.hpp"

namespace dynamo {

/// f(v) = |later neighbours of v| - |earlier neighbours of v| under `order`,
/// indexed by vertex. Throws std::invalid_argument if `order` is not a
/// permutation of V.
std::vector<std::int64_t> f_values(const Graph& g, std::span<const Vertex> order);

/// A vertex ordering with its f values. Orderings produced by build_ordering
/// have at most one zero (none if some degree is odd) and list every positive
/// vertex before the zero, and the zero before every negative vertex.
struct OrderingCertificate {
    std::vector<Vertex> order;
    std::vector<std::int64_t> f;
    bool has_odd_vertex = false;

    std::size_t zero_count() const;
    /// {v : f(v) >= 0} and {v : f(v) <= 0}; both are strict majority dynamos.
    VertexSet nonnegative() const;
    VertexSet nonpositive() const;
};

/// Recursive ordering construction on a connected graph. The root is the
/// smallest odd-degree vertex if one exists, else `designated`, else vertex 0;
/// each component of G - root is ordered recursively, and the pieces are laid
/// out as positives, former zeros, root, negatives. Components with only even
/// degrees are handed the smallest neighbour of the root as their designated
/// vertex, so any zero that survives is the designated one.
///
/// Runs on an explicit stack; O(n * (n + m)) in the worst case.
/// Throws std::invalid_argument on a disconnected graph or a bad designated id.
OrderingCertificate build_ordering(const Graph& g, std::optional<Vertex> designated = std::nullopt);

/// Strict majority dynamo built per component from the smaller half-set of its
/// certificate (the nonnegative one on ties). Connected graphs get at most
/// ceil(n/2) vertices, and at most n/2 when some degree is odd.
VertexSet half_dynamo(const Graph& g);

/// Strict majority dynamo of at most n/2 vertices that contains v, for a
/// connected graph of even order. Throws std::invalid_argument for odd order,
/// disconnected input or v out of range, and std::runtime_error if no such
/// set is found within `budget`.
VertexSet dynamo_containing(const Graph& g, Vertex v, WorkBudget budget = {});

struct MatchingBoundAudit {
    std::size_t dyn = 0;
    std::size_t alpha_prime = 0;
    std::size_t components = 0;
    bool holds = false;
};

/// Exact minimum strict majority dynamo size against alpha'(G) + c.
/// Throws BudgetExceeded from the exact search.
MatchingBoundAudit matching_bound_audit(const Graph& g, WorkBudget budget = {});

}  // namespace dynamo
