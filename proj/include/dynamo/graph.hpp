#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dynamo/rational.hpp"

namespace dynamo {

using Vertex = std::uint32_t;
using Threshold = std::uint32_t;
/// Vertex sets are kept as ascending, duplicate-free id lists.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graphs, threshold files and generator parameters.
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : adj_(n) {}

    /// Throws GraphError on self-loops, duplicate edges or ids outside [0, n).
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    std::size_t max_degree() const;
    std::size_t min_degree() const;
    bool has_odd_vertex() const;

    /// All edges as (u, v) with u < v, lexicographically ordered.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edges_ = 0;
};

/// Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
/// `original[i]` is the id in the parent graph of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Ascending degree sequence d_1 <= ... <= d_n.
std::vector<std::size_t> degree_sequence(const Graph& g);

/// |E| / n. Throws GraphError on the empty graph.
Rational edge_density(const Graph& g);

/// Connected components, each ascending, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

// ---------------------------------------------------------------------------
// Thresholds

/// Per-vertex thresholds bound to a graph's degrees. Thresholds above the
/// vertex degree are allowed; such vertices are flagged as forced seeds since
/// no activation process can ever reach them.
class ThresholdAssignment {
public:
    ThresholdAssignment() = default;
    /// Throws GraphError if values.size() != g.order().
    ThresholdAssignment(const Graph& g, std::vector<Threshold> values);

    std::size_t size() const noexcept { return values_.size(); }
    Threshold operator[](Vertex v) const { return values_[v]; }
    std::span<const Threshold> values() const noexcept { return values_; }

    bool forced(Vertex v) const { return forced_[v] != 0; }
    VertexSet forced_seeds() const;
    /// tau(v) <= deg(v) everywhere.
    bool respects_degrees() const noexcept { return forced_count_ == 0; }

    friend bool operator==(const ThresholdAssignment& a, const ThresholdAssignment& b)
    {
        return a.values_ == b.values_;
    }

private:
    std::vector<Threshold> values_;
    std::vector<char> forced_;
    std::size_t forced_count_ = 0;
};

namespace rule {
struct StrictMajority {};
struct SimpleMajority {};
struct Constant {
    Threshold k;
};
struct Explicit {
    std::vector<Threshold> values;
};
}  // namespace rule

using ThresholdRule = std::variant<rule::StrictMajority, rule::SimpleMajority, rule::Constant, rule::Explicit>;

/// strict majority: ceil((deg+1)/2); simple majority: ceil(deg/2).
ThresholdAssignment assign_thresholds(const Graph& g, const ThresholdRule& r);

struct ThresholdStats {
    Rational average;
    Threshold max = 0;
    Threshold min = 0;
};

/// Throws GraphError on the empty graph or a length mismatch.
ThresholdStats threshold_stats(const Graph& g, const ThresholdAssignment& tau);

// ---------------------------------------------------------------------------
// Text formats

/// Edge-list document: '#' comment lines, a header "n m", then m lines "u v"
/// with u < v. Throws GraphError with a line number on any violation.
Graph parse_graph(std::string_view text);
std::string render_graph(const Graph& g);

/// One line of n integers, or n lines "v t" (any order, each vertex once).
std::vector<Threshold> parse_thresholds(std::string_view text, std::size_t n);
std::string render_thresholds(std::span<const Threshold> values);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

// ---------------------------------------------------------------------------
// Generators

namespace family {
struct Complete {
    std::size_t n;
};
struct Path {
    std::size_t n;
};
/// Requires n >= 3.
struct Cycle {
    std::size_t n;
};
/// Centre 0 joined to leaves 1..k.
struct Star {
    std::size_t k;
};
/// i ~ i +- o (mod n) for each offset o in [1, n/2].
struct Circulant {
    std::size_t n;
    std::vector<std::size_t> offsets;
};
/// Erdos-Renyi G(n, p) drawn with Rng(seed), pairs visited in (u, v) order.
struct Gnp {
    std::size_t n;
    double p;
    std::uint64_t seed;
};
/// Extremal family: central clique K_{n(n-1)} on ids 0..n(n-1)-1, then
/// n(n-1)-1 disjoint K_n copies on consecutive ids, every copy vertex joined
/// to every central vertex. Requires n >= 2.
struct Gn {
    std::size_t n;
};
}  // namespace family

using Family = std::variant<family::Complete, family::Path, family::Cycle, family::Star, family::Circulant,
                            family::Gnp, family::Gn>;

Graph generate(const Family& f);

/// Canonical thresholds for gn(n): 0 on the central clique, full degree on
/// every copy vertex. Their average equals the edge density.
std::vector<Threshold> gn_thresholds(std::size_t n);

/// Vertex count n(n-1) + n[n(n-1)-1] of gn(n).
std::uint64_t gn_order(std::size_t n);
/// Edge count (n^3 - n)(n^2 - n - 1) of gn(n).
std::uint64_t gn_size(std::size_t n);

}  // namespace dynamo
