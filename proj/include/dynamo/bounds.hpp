#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynamo/graph.hpp"
#include "dynamo/rational.hpp"

namespace dynamo {

/// Sum of thresholds over n; 0 for the empty graph.
Rational threshold_average(const Graph& g, const ThresholdAssignment& tau);

/// Every dynamo has at least n(avg - density) / max_threshold vertices.
/// Clamped to 0 when non-positive, and 0 when all thresholds are 0.
Rational lower_bound_average(const Graph& g, const ThresholdAssignment& tau);

/// Largest k in [0, n] with sum_{i=1..k} (d_i + 1) <= n * average over the
/// ascending degree sequence. Some dynamo of at most this size always exists.
std::size_t upper_bound_degree_sequence(const Graph& g, const Rational& average);

/// Complete graph K_n whose thresholds average exactly t and force a minimum
/// dynamo of floor(t): n(t - floor t) vertices (the lowest ids) get
/// floor(t) + 1, the rest floor(t).
struct KnWitness {
    Graph graph;
    ThresholdAssignment tau;
    std::size_t expected;
};

/// Requires 0 <= t <= n - 1 and n*t integral; throws std::invalid_argument otherwise.
KnWitness kn_witness(std::size_t n, const Rational& t);

struct BoundEntry {
    std::string label;
    Rational value;
    bool applicable = false;
    /// Why the bound does or does not apply here.
    std::string reason;
    /// The formula the value comes from.
    std::string formula;
};

struct BoundContext {
    std::size_t n = 0;
    std::size_t m = 0;
    Rational density;
    Rational average;
    Threshold max_threshold = 0;
    Threshold min_threshold = 0;
    std::size_t max_degree = 0;
    std::size_t min_degree = 0;
    std::size_t components = 0;
    bool respects_degrees = true;
    bool strict_majority = false;
    std::optional<std::size_t> vertex_cover;
    std::optional<std::size_t> chromatic;
    std::optional<std::size_t> matching;
};

/// Applicable lower bounds never exceed any applicable upper bound.
struct BoundReport {
    BoundContext context;
    std::vector<BoundEntry> lower;
    std::vector<BoundEntry> upper;

    Rational best_lower() const;
    Rational best_upper() const;
};

/// Evaluates every closed-form bound. With heavy = true, also computes the
/// exact vertex cover number, chromatic number and matching number (desk
/// scale only). Throws GraphError on the empty graph.
BoundReport bound_report(const Graph& g, const ThresholdAssignment& tau, bool heavy);

}  // namespace dynamo
