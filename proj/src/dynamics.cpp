#include "dynamo/dynamics.hpp"

#include <algorithm>

namespace dynamo {

std::size_t ActivationTrace::activated_count() const
{
    std::size_t total = 0;
    for (const auto& r : rounds)
        total += r.size();
    return total;
}

ActivationTrace propagate(const Graph& g, const ThresholdAssignment& tau, std::span<const Vertex> seed)
{
    const std::size_t n = g.order();
    if (tau.size() != n)
        throw GraphError("threshold assignment length does not match the graph");

    ActivationTrace trace;
    trace.active.assign(n, 0);
    VertexSet initial;
    for (Vertex v : seed) {
        if (v >= n)
            throw std::out_of_range("seed vertex " + std::to_string(v) + " not in graph of order " +
                                    std::to_string(n));
        if (!trace.active[v]) {
            trace.active[v] = 1;
            initial.push_back(v);
        }
    }
    std::sort(initial.begin(), initial.end());
    trace.rounds.push_back(std::move(initial));

    // Active-neighbour counts of inactive vertices.
    std::vector<std::size_t> count(n, 0);
    for (Vertex v : trace.rounds.front())
        for (Vertex w : g.neighbors(v))
            ++count[w];

    VertexSet next;
    for (Vertex v = 0; v < n; ++v)
        if (!trace.active[v] && count[v] >= tau[v])
            next.push_back(v);

    std::vector<char> queued(n, 0);
    while (!next.empty()) {
        for (Vertex v : next)
            trace.active[v] = 1;
        VertexSet touched;
        for (Vertex v : next)
            for (Vertex w : g.neighbors(v))
                if (!trace.active[w]) {
                    ++count[w];
                    if (!queued[w] && count[w] >= tau[w]) {
                        queued[w] = 1;
                        touched.push_back(w);
                    }
                }
        trace.rounds.push_back(std::move(next));
        std::sort(touched.begin(), touched.end());
        for (Vertex w : touched)
            queued[w] = 0;
        next = std::move(touched);
    }

    trace.complete = trace.activated_count() == n;
    return trace;
}

bool is_dynamo(const Graph& g, const ThresholdAssignment& tau, std::span<const Vertex> seed)
{
    return propagate(g, tau, seed).complete;
}

bool verify_trace(const Graph& g, const ThresholdAssignment& tau, std::span<const VertexSet> partition)
{
    const std::size_t n = g.order();
    if (tau.size() != n)
        throw GraphError("threshold assignment length does not match the graph");

    // round_of[v] = index of the set containing v, or npos.
    constexpr std::size_t npos = ~std::size_t{0};
    std::vector<std::size_t> round_of(n, npos);
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (Vertex v : partition[i]) {
            if (v >= n)
                throw TraceError("unknown vertex id " + std::to_string(v));
            if (round_of[v] != npos)
                throw TraceError("vertex " + std::to_string(v) + " appears in sets " + std::to_string(round_of[v]) +
                                 " and " + std::to_string(i));
            round_of[v] = i;
        }

    for (std::size_t i = 1; i < partition.size(); ++i)
        for (Vertex v : partition[i]) {
            std::size_t earlier = 0;
            for (Vertex w : g.neighbors(v))
                if (round_of[w] < i)
                    ++earlier;
            if (earlier < tau[v])
                return false;
        }
    return true;
}

}  // namespace dynamo
