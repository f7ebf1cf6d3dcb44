#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "dynamo/bounds.hpp"
#include "dynamo/corpus.hpp"
#include "dynamo/minimize.hpp"
#include "dynamo/oracle.hpp"
#include "support.hpp"

using namespace dynamo;
using namespace dynamo::test;

namespace {

// Straight transcription of the average-threshold bound, written without
// the library helpers: n * (tbar - eps) / tmax, clamped at zero.
Rational reference_lower(const Graph& g, const ThresholdAssignment& t)
{
    const auto n = static_cast<std::int64_t>(g.order());
    std::int64_t sum = 0;
    std::int64_t tmax = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        sum += t[v];
        tmax = std::max<std::int64_t>(tmax, t[v]);
    }
    if (tmax == 0)
        return 0;
    const Rational value = (Rational(sum, n) - Rational(static_cast<std::int64_t>(g.edge_count()), n)) * n / tmax;
    return std::max(value, Rational(0));
}

std::size_t reference_upper(const Graph& g, const Rational& tbar)
{
    std::vector<std::size_t> d;
    for (Vertex v = 0; v < g.order(); ++v)
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    const Rational budget = tbar * static_cast<std::int64_t>(g.order());
    std::size_t best = 0;
    std::int64_t prefix = 0;
    for (std::size_t k = 1; k <= d.size(); ++k) {
        prefix += static_cast<std::int64_t>(d[k - 1] + 1);
        if (Rational(prefix) <= budget)
            best = k;
    }
    return best;
}

const BoundEntry& entry(const std::vector<BoundEntry>& list, const std::string& label)
{
    const auto it = std::find_if(list.begin(), list.end(), [&](const BoundEntry& e) { return e.label == label; });
    REQUIRE(it != list.end());
    return *it;
}

}  // namespace

TEST_CASE("lower_bound_average examples")
{
    const auto g = k(4);
    CHECK(reference_lower(g, tau(g, {1, 2, 3, 3})) == Rational(1));
    CHECK(lower_bound_average(g, tau(g, {1, 2, 3, 3})) == Rational(1));
    CHECK(lower_bound_average(g, tau(g, {2, 2, 2, 2})) == Rational(1));
    CHECK(lower_bound_average(p4(), tau(p4(), {0, 1, 1, 0})) == Rational(0));
    CHECK(lower_bound_average(p4(), tau(p4(), {0, 0, 0, 0})) == Rational(0));
    CHECK(threshold_average(g, tau(g, {1, 2, 3, 3})) == Rational(9, 4));
}

TEST_CASE("upper_bound_degree_sequence examples")
{
    CHECK(reference_upper(p4(), Rational(3, 2)) == 2);
    CHECK(upper_bound_degree_sequence(p4(), Rational(3, 2)) == 2);
    CHECK(upper_bound_degree_sequence(k(5), Rational(12, 5)) == 2);
    CHECK(upper_bound_degree_sequence(petersen(), Rational(0)) == 0);
    CHECK(upper_bound_degree_sequence(Graph(3), Rational(1)) == 3);
    CHECK(upper_bound_degree_sequence(k(4), Rational(3)) == 3);
}

TEST_CASE("kn_witness examples")
{
    const auto w = kn_witness(5, Rational(12, 5));
    std::vector<Threshold> got(w.tau.values().begin(), w.tau.values().end());
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Threshold>{2, 2, 2, 3, 3});
    CHECK(w.expected == 2);
    CHECK(w.graph == k(5));

    const auto w2 = kn_witness(4, Rational(2));
    CHECK(w2.tau == tau(k(4), {2, 2, 2, 2}));
    CHECK(w2.expected == 2);

    const auto w3 = kn_witness(4, Rational(9, 4));
    got.assign(w3.tau.values().begin(), w3.tau.values().end());
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<Threshold>{2, 2, 2, 3});
    CHECK(w3.expected == 2);
    CHECK(oracle::min_dynamo_size(w3.graph, w3.tau) == 2);
    CHECK(exact_min_dynamo(w3.graph, w3.tau).size() == 2);

    CHECK_THROWS_AS(kn_witness(5, Rational(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(kn_witness(4, Rational(4)), std::invalid_argument);
    CHECK_THROWS_AS(kn_witness(4, Rational(-1)), std::invalid_argument);
}

TEST_CASE("kn witnesses hit floor(t) for small n")
{
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>(n * (n - 1)); ++j) {
            const Rational t(j, static_cast<std::int64_t>(n));
            const auto w = kn_witness(n, t);
            CHECK(threshold_average(w.graph, w.tau) == t);
            CHECK(w.expected == static_cast<std::size_t>(t.floor()));
            CHECK(oracle::min_dynamo_size(w.graph, w.tau) == w.expected);
        }
}

TEST_CASE("bound_report on K4 with strict majority")
{
    const auto g = k(4);
    const auto r = bound_report(g, strict(g), true);
    CHECK(r.context.n == 4);
    CHECK(r.context.m == 6);
    CHECK(r.context.density == Rational(3, 2));
    CHECK(r.context.average == Rational(2));
    CHECK(r.context.strict_majority);
    CHECK(r.context.vertex_cover == 3u);
    CHECK(r.context.chromatic == 4u);
    CHECK(r.context.matching == 2u);

    CHECK(entry(r.lower, "average_threshold").value == Rational(1));
    CHECK(entry(r.lower, "average_threshold").applicable);
    CHECK(entry(r.lower, "odd_regular").value == Rational(2, 3));
    CHECK(entry(r.lower, "odd_regular").applicable);
    CHECK(entry(r.upper, "degree_sequence").value == Rational(2));
    CHECK(entry(r.upper, "min_degree").value == Rational(2));
    CHECK(r.best_lower() == Rational(1));
    CHECK(r.best_upper() == Rational(2));
}

TEST_CASE("bound_report vertex-cover bound on P4 with tau = deg")
{
    const auto r = bound_report(p4(), degrees(p4()), true);
    CHECK(oracle::vertex_cover_number(p4()) == 2);
    const auto& vc = entry(r.upper, "vertex_cover");
    CHECK(vc.applicable);
    CHECK(vc.value == Rational(2));
    CHECK(!entry(r.lower, "odd_regular").applicable);
}

TEST_CASE("bound_report on an edgeless graph with zero thresholds")
{
    const auto g = Graph(4);
    const auto r = bound_report(g, tau(g, {0, 0, 0, 0}), true);
    for (const auto& e : r.lower)
        CHECK((!e.applicable || e.value == Rational(0)));
    for (const auto& e : r.upper)
        CHECK((!e.applicable || e.value == Rational(0)));
    CHECK(exact_min_dynamo(g, tau(g, {0, 0, 0, 0})).empty());
    CHECK_THROWS(bound_report(Graph(0), ThresholdAssignment(Graph(0), {}), false));
}

TEST_CASE("light reports skip the expensive invariants")
{
    const auto r = bound_report(petersen(), strict(petersen()), false);
    CHECK(!r.context.vertex_cover);
    CHECK(!r.context.chromatic);
    CHECK(!entry(r.upper, "vertex_cover").applicable);
    CHECK(!entry(r.upper, "chromatic").applicable);
    CHECK(!entry(r.upper, "vertex_cover").reason.empty());
}

TEST_CASE("sandwich and report consistency on random degree-respecting instances")
{
    Rng rng(8);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 1 + rng.below(8);
        const auto g = corpus::random_graph(rng, n, rng.unit());
        const auto t = corpus::random_degree_respecting(rng, g);
        const auto stats = threshold_stats(g, t);
        const auto exact = oracle::min_dynamo_size(g, t);
        const auto lower = lower_bound_average(g, t);
        const auto upper = upper_bound_degree_sequence(g, stats.average);
        CAPTURE(render_graph(g));
        CHECK(lower == reference_lower(g, t));
        CHECK(upper == reference_upper(g, stats.average));
        CHECK(lower <= Rational(static_cast<std::int64_t>(exact)));
        CHECK(exact <= upper);

        if (stats.average > Rational(0)) {
            // n(1 - eps/tbar)(tbar/tmax) collapses to n(tbar - eps)/tmax.
            const Rational nn(static_cast<std::int64_t>(n));
            const auto eps = edge_density(g);
            const auto lhs = nn * (Rational(1) - eps / stats.average) * (stats.average / stats.max);
            CHECK(std::max(lhs, Rational(0)) == lower);
            if (g.max_degree() > 0) {
                const auto with_delta = std::max(Rational(0), nn * (stats.average - eps) /
                                                                  static_cast<std::int64_t>(g.max_degree()));
                CHECK(with_delta <= lower);
            }
        }

        const auto report = bound_report(g, t, true);
        const Rational ex(static_cast<std::int64_t>(exact));
        for (const auto& e : report.lower)
            if (e.applicable)
                CHECK_MESSAGE(e.value <= ex, e.label);
        for (const auto& e : report.upper)
            if (e.applicable)
                CHECK_MESSAGE(ex <= e.value, e.label);
    }
}
