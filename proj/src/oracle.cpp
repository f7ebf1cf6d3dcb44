#include "dynamo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace dynamo::oracle {

namespace {

void require_small(const Graph& g, std::size_t limit)
{
    if (g.order() > limit)
        throw std::invalid_argument("oracle limited to " + std::to_string(limit) + " vertices");
}

std::size_t best_matching(const Graph& g, std::vector<char>& used, Vertex from)
{
    Vertex v = from;
    while (v < g.order() && used[v])
        ++v;
    if (v >= g.order())
        return 0;
    used[v] = 1;
    std::size_t best = best_matching(g, used, v + 1);  // v unmatched
    for (Vertex w : g.neighbors(v))
        if (!used[w]) {
            used[w] = 1;
            best = std::max(best, 1 + best_matching(g, used, v + 1));
            used[w] = 0;
        }
    used[v] = 0;
    return best;
}

bool colour(const Graph& g, std::vector<int>& assigned, Vertex v, int k)
{
    if (v == g.order())
        return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (Vertex w : g.neighbors(v))
            if (w < v && assigned[w] == c)
                ok = false;
        if (!ok)
            continue;
        assigned[v] = c;
        if (colour(g, assigned, v + 1, k))
            return true;
    }
    return false;
}

}  // namespace

std::size_t matching_number(const Graph& g)
{
    std::vector<char> used(g.order(), 0);
    return best_matching(g, used, 0);
}

bool covers(const Graph& g, std::uint64_t mask)
{
    for (const auto& [u, v] : g.edges())
        if (!(mask >> u & 1) && !(mask >> v & 1))
            return false;
    return true;
}

std::size_t vertex_cover_number(const Graph& g)
{
    require_small(g, 24);
    std::size_t best = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) < best && covers(g, mask))
            best = static_cast<std::size_t>(std::popcount(mask));
    return best;
}

std::size_t independence_number(const Graph& g)
{
    require_small(g, 24);
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) <= best)
            continue;
        bool independent = true;
        for (const auto& [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                independent = false;
                break;
            }
        if (independent)
            best = static_cast<std::size_t>(std::popcount(mask));
    }
    return best;
}

std::size_t chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    std::vector<int> assigned(g.order(), -1);
    for (int k = 1;; ++k)
        if (colour(g, assigned, 0, k))
            return static_cast<std::size_t>(k);
}

bool spans(const Graph& g, const ThresholdAssignment& tau, std::uint64_t seed_mask)
{
    require_small(g, 64);
    std::vector<char> active(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v)
        active[v] = (seed_mask >> v & 1) ? 1 : 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (active[v])
                continue;
            std::size_t on = 0;
            for (Vertex w : g.neighbors(v))
                on += active[w];
            if (on >= tau[v]) {
                active[v] = 1;
                changed = true;
            }
        }
    }
    return std::all_of(active.begin(), active.end(), [](char a) { return a != 0; });
}

std::size_t min_dynamo_size(const Graph& g, const ThresholdAssignment& tau)
{
    require_small(g, 24);
    std::size_t best = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) < best && spans(g, tau, mask))
            best = static_cast<std::size_t>(std::popcount(mask));
    return best;
}

bool some_activation_order_completes(const Graph& g, const ThresholdAssignment& tau, std::uint64_t seed_mask)
{
    require_small(g, 16);
    const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
    std::vector<char> visited(std::size_t{1} << g.order(), 0);
    std::vector<std::uint64_t> stack{seed_mask};
    visited[seed_mask] = 1;
    while (!stack.empty()) {
        const std::uint64_t state = stack.back();
        stack.pop_back();
        if (state == full)
            return true;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (state >> v & 1)
                continue;
            std::size_t on = 0;
            for (Vertex w : g.neighbors(v))
                on += (state >> w & 1);
            if (on < tau[v])
                continue;
            const std::uint64_t next = state | std::uint64_t{1} << v;
            if (!visited[next]) {
                visited[next] = 1;
                stack.push_back(next);
            }
        }
    }
    return false;
}

}  // namespace dynamo::oracle
