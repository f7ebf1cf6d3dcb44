#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dynamo/graph.hpp"

namespace dynamo::test {

inline Graph make(std::size_t n, std::initializer_list<Edge> edges)
{
    return Graph::from_edges(n, std::vector<Edge>(edges));
}

inline Graph p4()
{
    return make(4, {{0, 1}, {1, 2}, {2, 3}});
}

inline Graph c4()
{
    return make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Graph k(std::size_t n)
{
    return generate(family::Complete{n});
}

inline Graph petersen()
{
    return make(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                     {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

inline ThresholdAssignment tau(const Graph& g, std::vector<Threshold> values)
{
    return {g, std::move(values)};
}

inline ThresholdAssignment strict(const Graph& g)
{
    return assign_thresholds(g, rule::StrictMajority{});
}

inline ThresholdAssignment degrees(const Graph& g)
{
    std::vector<Threshold> values(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        values[v] = static_cast<Threshold>(g.degree(v));
    return {g, std::move(values)};
}

inline VertexSet from_mask(std::uint64_t mask, std::size_t n)
{
    VertexSet out;
    for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1)
            out.push_back(v);
    return out;
}

}  // namespace dynamo::test
