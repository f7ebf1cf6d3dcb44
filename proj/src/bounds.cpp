#include "dynamo/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "dynamo/combinatorics.hpp"

namespace dynamo {

namespace {

Rational clamp_nonnegative(const Rational& r)
{
    return r < Rational(0) ? Rational(0) : r;
}

Rational count(std::size_t x)
{
    return Rational(static_cast<std::int64_t>(x));
}

bool is_strict_majority(const Graph& g, const ThresholdAssignment& tau)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (tau[v] != g.degree(v) / 2 + 1)
            return false;
    return true;
}

}  // namespace

Rational threshold_average(const Graph& g, const ThresholdAssignment& tau)
{
    if (g.order() == 0)
        return Rational(0);
    return threshold_stats(g, tau).average;
}

Rational lower_bound_average(const Graph& g, const ThresholdAssignment& tau)
{
    if (g.order() == 0)
        return Rational(0);
    const auto stats = threshold_stats(g, tau);
    if (stats.max == 0)
        return Rational(0);
    const Rational value = count(g.order()) * (stats.average - edge_density(g)) / count(stats.max);
    return clamp_nonnegative(value);
}

std::size_t upper_bound_degree_sequence(const Graph& g, const Rational& average)
{
    const Rational budget = count(g.order()) * average;
    std::int64_t prefix = 0;
    std::size_t k = 0;
    for (auto d : degree_sequence(g)) {
        prefix += static_cast<std::int64_t>(d) + 1;
        if (Rational(prefix) > budget)
            break;
        ++k;
    }
    return k;
}

KnWitness kn_witness(std::size_t n, const Rational& t)
{
    if (n == 0)
        throw std::invalid_argument("kn_witness: n must be positive");
    const auto nt = count(n) * t;
    if (t < Rational(0) || t > count(n - 1))
        throw std::invalid_argument("kn_witness: t = " + t.str() + " outside [0, n-1]");
    if (!nt.is_integer())
        throw std::invalid_argument("kn_witness: n*t = " + nt.str() + " is not an integer");

    const auto base = static_cast<Threshold>(t.floor());
    const auto raised = static_cast<std::size_t>(nt.numerator() - static_cast<std::int64_t>(n) * base);
    std::vector<Threshold> values(n, base);
    for (std::size_t v = 0; v < raised; ++v)
        values[v] = base + 1;
    Graph g = generate(family::Complete{n});
    ThresholdAssignment tau(g, std::move(values));
    return {std::move(g), std::move(tau), static_cast<std::size_t>(base)};
}

Rational BoundReport::best_lower() const
{
    Rational best(0);
    for (const auto& b : lower)
        if (b.applicable)
            best = std::max(best, b.value);
    return best;
}

Rational BoundReport::best_upper() const
{
    Rational best = count(context.n);
    for (const auto& b : upper)
        if (b.applicable)
            best = std::min(best, b.value);
    return best;
}

BoundReport bound_report(const Graph& g, const ThresholdAssignment& tau, bool heavy)
{
    if (g.order() == 0)
        throw GraphError("bound report of the empty graph");
    const auto stats = threshold_stats(g, tau);
    const auto comps = components(g);

    BoundReport report;
    auto& c = report.context;
    c.n = g.order();
    c.m = g.edge_count();
    c.density = edge_density(g);
    c.average = stats.average;
    c.max_threshold = stats.max;
    c.min_threshold = stats.min;
    c.max_degree = g.max_degree();
    c.min_degree = g.min_degree();
    c.components = comps.size();
    c.respects_degrees = tau.respects_degrees();
    c.strict_majority = is_strict_majority(g, tau);
    c.matching = maximum_matching(g).size();
    if (heavy) {
        c.vertex_cover = minimum_vertex_cover(g).size();
        c.chromatic = chromatic_number(g);
    }

    const Rational n = count(c.n);
    const std::string degrees_reason =
        c.respects_degrees ? "thresholds respect degrees" : "some threshold exceeds its vertex degree";

    // Lower bounds.
    {
        BoundEntry e{"average_threshold", lower_bound_average(g, tau), c.respects_degrees, degrees_reason,
                     "max(0, n*(avg - density)/max_threshold)"};
        if (c.max_threshold == 0)
            e.reason = "all thresholds are zero; the empty set is a dynamo";
        report.lower.push_back(std::move(e));
    }
    {
        BoundEntry e{"average_threshold_max_degree", Rational(0), c.respects_degrees, degrees_reason,
                     "max(0, n*(avg - density)/max_degree)"};
        if (c.max_degree > 0)
            e.value = clamp_nonnegative(n * (c.average - c.density) / count(c.max_degree));
        else
            e.reason = "edgeless graph";
        report.lower.push_back(std::move(e));
    }
    {
        BoundEntry e{"density_margin", Rational(0), false, "", "delta*density with delta = avg/density - 1"};
        if (c.density == Rational(0)) {
            e.reason = "edgeless graph";
        } else if (c.average <= c.density) {
            e.reason = "average threshold does not exceed the edge density";
        } else {
            const Rational delta = c.average / c.density - Rational(1);
            e.value = delta * c.density;
            e.applicable = c.respects_degrees;
            e.reason = c.respects_degrees ? "average exceeds density by factor 1 + " + delta.str() : degrees_reason;
        }
        report.lower.push_back(std::move(e));
    }
    {
        BoundEntry e{"odd_regular", Rational(0), false, "", "n/(4r+2) for (2r+1)-regular graphs with avg = r+1"};
        const bool regular = c.max_degree == c.min_degree;
        if (!regular || c.max_degree % 2 == 0) {
            e.reason = "graph is not regular of odd degree";
        } else {
            const auto r = static_cast<std::int64_t>((c.max_degree - 1) / 2);
            e.value = n / Rational(4 * r + 2);
            if (c.average != Rational(r + 1)) {
                e.reason = "average threshold is not r+1 = " + std::to_string(r + 1);
            } else {
                e.applicable = c.respects_degrees;
                e.reason = c.respects_degrees ? "(2r+1)-regular with r = " + std::to_string(r) : degrees_reason;
            }
        }
        report.lower.push_back(std::move(e));
    }

    // Upper bounds.
    report.upper.push_back({"degree_sequence", count(upper_bound_degree_sequence(g, c.average)), true,
                            "holds for every threshold assignment", "max{k : sum_{i<=k}(d_i + 1) <= n*avg}"});
    report.upper.push_back({"min_degree", n * c.average / count(c.min_degree + 1), true,
                            "holds for every threshold assignment", "n*avg/(min_degree + 1)"});
    {
        BoundEntry e{"vertex_cover", Rational(0), false, "", "beta(G)"};
        if (!c.vertex_cover) {
            e.reason = "not computed (heavy bounds disabled)";
        } else {
            e.value = count(*c.vertex_cover);
            e.applicable = c.respects_degrees;
            e.reason = c.respects_degrees ? "every vertex cover is a dynamo" : degrees_reason;
        }
        report.upper.push_back(std::move(e));
    }
    {
        BoundEntry e{"chromatic", Rational(0), false, "", "n*(1 - 1/chi(G))"};
        if (!c.chromatic) {
            e.reason = "not computed (heavy bounds disabled)";
        } else {
            e.value = n * (Rational(1) - Rational(1, static_cast<std::int64_t>(*c.chromatic)));
            e.applicable = c.respects_degrees;
            e.reason = c.respects_degrees ? "chi = " + std::to_string(*c.chromatic) : degrees_reason;
        }
        report.upper.push_back(std::move(e));
    }
    {
        // floor(n_i/2) on components with an odd-degree vertex, ceil(n_i/2) otherwise.
        std::size_t half = 0;
        for (const auto& comp : comps) {
            const bool odd = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return g.degree(v) % 2 == 1; });
            half += odd ? comp.size() / 2 : (comp.size() + 1) / 2;
        }
        report.upper.push_back({"strict_majority_half", count(half), c.strict_majority,
                                c.strict_majority ? "strict majority thresholds" : "not strict majority thresholds",
                                "sum over components of floor(n_i/2) (odd vertex present) or ceil(n_i/2)"});
    }
    report.upper.push_back({"matching", count(*c.matching + c.components), c.strict_majority,
                            c.strict_majority ? "strict majority thresholds" : "not strict majority thresholds",
                            "alpha'(G) + number of components"});
    return report;
}

}  // namespace dynamo
