#include "dynamo/minimize.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "dynamo/bounds.hpp"
#include "dynamo/dynamics.hpp"

namespace dynamo {

namespace {

std::int64_t slack(const Graph& g, const ThresholdAssignment& tau, Vertex v)
{
    return static_cast<std::int64_t>(g.degree(v)) - static_cast<std::int64_t>(tau[v]);
}

/// Activation closure on graphs of at most 64 vertices using neighbour masks.
class MaskClosure {
public:
    MaskClosure(const Graph& g, const ThresholdAssignment& tau) : n_(g.order()), neighbours_(n_, 0), tau_(n_)
    {
        for (Vertex v = 0; v < n_; ++v) {
            for (Vertex w : g.neighbors(v))
                neighbours_[v] |= std::uint64_t{1} << w;
            tau_[v] = tau[v];
        }
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool spans(std::uint64_t active) const
    {
        for (bool grew = true; grew && active != full_;) {
            grew = false;
            std::uint64_t inactive = full_ & ~active;
            while (inactive) {
                const int v = std::countr_zero(inactive);
                inactive &= inactive - 1;
                if (static_cast<Threshold>(std::popcount(neighbours_[v] & active)) >= tau_[v]) {
                    active |= std::uint64_t{1} << v;
                    grew = true;
                }
            }
        }
        return active == full_;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> neighbours_;
    std::vector<Threshold> tau_;
    std::uint64_t full_ = 0;
};

}  // namespace

ShrinkState ShrinkState::of(const Graph& g, const ThresholdAssignment& tau, VertexSet M)
{
    std::sort(M.begin(), M.end());
    std::vector<char> in_m(g.order(), 0);
    for (Vertex v : M)
        in_m[v] = 1;
    ShrinkState s;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in_m[v])
            continue;
        std::size_t nm = 0;
        for (Vertex w : g.neighbors(v))
            nm += in_m[w] ? 1 : 0;
        (nm <= tau[v] ? s.A : s.B).push_back(v);
    }
    s.M = std::move(M);
    return s;
}

bool ShrinkState::removable_literal(const Graph& g, const ThresholdAssignment& tau, Vertex v) const
{
    std::int64_t in_ab = 0;
    std::int64_t in_b = 0;
    for (Vertex w : g.neighbors(v)) {
        const bool a = std::binary_search(A.begin(), A.end(), w);
        const bool b = std::binary_search(B.begin(), B.end(), w);
        in_ab += (a || b) ? 1 : 0;
        in_b += b ? 1 : 0;
    }
    return in_ab < in_b + slack(g, tau, v) + 1;
}

bool ShrinkState::removable(const Graph& g, const ThresholdAssignment& tau, Vertex v) const
{
    std::int64_t in_a = 0;
    for (Vertex w : g.neighbors(v))
        in_a += std::binary_search(A.begin(), A.end(), w) ? 1 : 0;
    return in_a <= slack(g, tau, v);
}

ShrinkResult greedy_shrink(const Graph& g, const ThresholdAssignment& tau)
{
    const std::size_t n = g.order();
    if (tau.size() != n)
        throw GraphError("threshold assignment length does not match the graph");

    std::vector<char> in_m(n, 1);
    std::vector<char> in_a(n, 0);
    std::vector<std::size_t> to_m(n);  // |N_M(v)|
    std::vector<std::size_t> to_a(n, 0);  // |N_A(v)|
    for (Vertex v = 0; v < n; ++v)
        to_m[v] = g.degree(v);

    auto join_a = [&](Vertex v) {
        in_a[v] = 1;
        for (Vertex x : g.neighbors(v))
            ++to_a[x];
    };

    ShrinkResult result;
    for (Vertex v = 0; v < n; ++v) {
        if (static_cast<std::int64_t>(to_a[v]) > slack(g, tau, v))
            continue;
        in_m[v] = 0;
        result.removal_order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            --to_m[w];
            if (!in_m[w] && !in_a[w] && to_m[w] <= tau[w])
                join_a(w);
        }
        if (to_m[v] <= tau[v])
            join_a(v);
    }
    for (Vertex v = 0; v < n; ++v)
        if (in_m[v])
            result.dynamo.push_back(v);
    return result;
}

bool is_minimal(const Graph& g, const ThresholdAssignment& tau, const VertexSet& M)
{
    if (!is_dynamo(g, tau, M))
        throw std::invalid_argument("is_minimal: the given set is not a dynamo");
    VertexSet without;
    for (std::size_t i = 0; i < M.size(); ++i) {
        without.assign(M.begin(), M.end());
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_dynamo(g, tau, without))
            return false;
    }
    return true;
}

VertexSet exact_min_dynamo(const Graph& g, const ThresholdAssignment& tau, WorkBudget budget)
{
    const std::size_t n = g.order();
    if (tau.size() != n)
        throw GraphError("threshold assignment length does not match the graph");

    const VertexSet pinned = tau.forced_seeds();
    VertexSet free;
    for (Vertex v = 0; v < n; ++v)
        if (!tau.forced(v))
            free.push_back(v);

    const std::size_t cutoff = std::max(pinned.size(), upper_bound_degree_sequence(g, threshold_average(g, tau)));

    std::optional<MaskClosure> masks;
    std::uint64_t pinned_mask = 0;
    if (n <= 64) {
        masks.emplace(g, tau);
        for (Vertex v : pinned)
            pinned_mask |= std::uint64_t{1} << v;
    }

    std::uint64_t spent = 0;
    std::vector<std::size_t> pick;
    VertexSet candidate;
    for (std::size_t size = pinned.size(); size <= cutoff; ++size) {
        const std::size_t r = size - pinned.size();
        if (r > free.size())
            break;
        pick.resize(r);
        for (std::size_t i = 0; i < r; ++i)
            pick[i] = i;
        for (;;) {
            if (++spent > budget.max_candidates)
                throw BudgetExceeded("exact_min_dynamo: exceeded " + std::to_string(budget.max_candidates) +
                                     " candidate sets at size " + std::to_string(size));
            bool hit = false;
            if (masks) {
                std::uint64_t active = pinned_mask;
                for (auto i : pick)
                    active |= std::uint64_t{1} << free[i];
                hit = masks->spans(active);
            } else {
                candidate = pinned;
                for (auto i : pick)
                    candidate.push_back(free[i]);
                hit = is_dynamo(g, tau, candidate);
            }
            if (hit) {
                VertexSet out = pinned;
                for (auto i : pick)
                    out.push_back(free[i]);
                std::sort(out.begin(), out.end());
                return out;
            }
            // Next r-combination of free indices in lexicographic order.
            std::size_t i = r;
            while (i > 0 && pick[i - 1] == free.size() - r + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < r; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("exact_min_dynamo: no dynamo within the degree-sequence bound");
}

}  // namespace dynamo
