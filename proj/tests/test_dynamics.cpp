#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dynamo/corpus.hpp"
#include "dynamo/dynamics.hpp"
#include "dynamo/oracle.hpp"
#include "support.hpp"

using namespace dynamo;
using namespace dynamo::test;

namespace {

std::uint64_t to_mask(const VertexSet& s)
{
    std::uint64_t m = 0;
    for (Vertex v : s)
        m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

TEST_CASE("propagate on P4 with strict majority")
{
    const auto g = p4();
    const auto t = propagate(g, strict(g), VertexSet{0, 2});
    CHECK(t.rounds == std::vector<VertexSet>{{0, 2}, {1, 3}});
    CHECK(t.complete);
    CHECK(t.last_round() == 1);
    CHECK(t.activated_count() == 4);
}

TEST_CASE("propagate on K4 with a staircase of thresholds")
{
    const auto g = k(4);
    const auto t = propagate(g, tau(g, {1, 2, 3, 3}), VertexSet{3});
    CHECK(t.rounds == std::vector<VertexSet>{{3}, {0}, {1}, {2}});
    CHECK(t.complete);
}

TEST_CASE("zero thresholds activate everything from the empty seed")
{
    for (const auto& g : {p4(), petersen(), Graph(3)}) {
        const auto t = propagate(g, tau(g, std::vector<Threshold>(g.order(), 0)), VertexSet{});
        REQUIRE(t.rounds.size() == 2);
        CHECK(t.rounds[0].empty());
        CHECK(t.rounds[1] == from_mask((std::uint64_t{1} << g.order()) - 1, g.order()));
        CHECK(t.complete);
    }
}

TEST_CASE("empty seed with positive thresholds stalls")
{
    const auto t = propagate(p4(), strict(p4()), VertexSet{});
    CHECK(t.rounds == std::vector<VertexSet>{{}});
    CHECK(!t.complete);
}

TEST_CASE("is_dynamo examples")
{
    const auto g = p4();
    CHECK(is_dynamo(g, strict(g), VertexSet{0, 2}));
    CHECK(!is_dynamo(g, strict(g), VertexSet{0}));
    CHECK(is_dynamo(g, tau(g, {9, 9, 9, 9}), VertexSet{0, 1, 2, 3}));
    CHECK(is_dynamo(Graph(0), tau(Graph(0), {}), VertexSet{}));
}

TEST_CASE("seed normalisation and errors")
{
    const auto g = p4();
    const auto t = propagate(g, strict(g), VertexSet{2, 0, 2});
    CHECK(t.rounds[0] == VertexSet{0, 2});
    CHECK_THROWS_AS(propagate(g, strict(g), VertexSet{4}), std::out_of_range);
    CHECK_THROWS(propagate(g, tau(Graph(3), {1, 1, 1}), VertexSet{0}));
}

TEST_CASE("verify_trace")
{
    const auto g = p4();
    const auto s = strict(g);
    CHECK(verify_trace(g, s, std::vector<VertexSet>{{0, 2}, {1, 3}}));
    CHECK(verify_trace(g, s, std::vector<VertexSet>{{0, 2}, {1}, {3}}));  // non-greedy but valid
    CHECK(!verify_trace(g, s, std::vector<VertexSet>{{0}, {1}, {2}, {3}}));
    CHECK_THROWS_AS(verify_trace(g, s, std::vector<VertexSet>{{0}, {0}}), TraceError);
    CHECK_THROWS_AS(verify_trace(g, s, std::vector<VertexSet>{{0}, {7}}), TraceError);
    CHECK(verify_trace(g, s, std::vector<VertexSet>{}));
}

TEST_CASE("dynamics properties on random instances")
{
    Rng rng(42);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 1 + rng.below(8);
        const auto g = corpus::random_graph(rng, n, rng.unit());
        const auto t = rng.bernoulli(0.5) ? strict(g) : corpus::random_degree_respecting(rng, g);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        const std::uint64_t mask = rng.next() & full;
        const auto seed = from_mask(mask, n);
        const auto trace = propagate(g, t, seed);
        CAPTURE(render_graph(g));
        CAPTURE(mask);

        CHECK(verify_trace(g, t, trace.rounds));
        CHECK(trace.last_round() <= n);
        std::size_t total = 0;
        for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
            total += trace.rounds[r].size();
            if (r > 0)
                CHECK(!trace.rounds[r].empty());
        }
        CHECK(total <= n);
        CHECK(total == trace.activated_count());
        CHECK(trace.complete == oracle::spans(g, t, mask));
        CHECK(trace.complete == oracle::some_activation_order_completes(g, t, mask));

        // Greedy maximality: nothing left inactive could still fire.
        for (Vertex v = 0; v < n; ++v) {
            if (trace.active[v])
                continue;
            std::size_t live = 0;
            for (Vertex u : g.neighbors(v))
                live += trace.active[u] ? 1 : 0;
            CHECK(live < t[v]);
        }

        // Monotone in the seed.
        const std::uint64_t bigger = mask | (rng.next() & full);
        if (trace.complete)
            CHECK(is_dynamo(g, t, from_mask(bigger, n)));

        for (Vertex v : t.forced_seeds())
            if (!(mask >> v & 1))
                CHECK(!trace.complete);
    }
}

TEST_CASE("forced seeds are in every dynamo")
{
    const auto g = make(3, {{0, 1}});
    const auto t = strict(g);  // vertex 2 is isolated, tau = 1
    CHECK(t.forced_seeds() == VertexSet{2});
    CHECK(!is_dynamo(g, t, VertexSet{0, 1}));
    CHECK(is_dynamo(g, t, VertexSet{0, 1, 2}));
    CHECK(to_mask({0, 2}) == 5);
}
