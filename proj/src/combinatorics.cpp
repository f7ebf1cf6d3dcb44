#include "dynamo/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace dynamo {

namespace {

constexpr int none = -1;

/// Edmonds' blossom algorithm in the classic BFS-per-root formulation.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(static_cast<int>(g.order())), mate_(n_, none), parent_(n_), base_(n_), used_(n_), blossom_(n_)
    {
    }

    std::vector<int> run()
    {
        greedy_start();
        for (int root = 0; root < n_; ++root) {
            if (mate_[root] != none)
                continue;
            int v = find_augmenting_path(root);
            while (v != none) {
                const int pv = parent_[v];
                const int ppv = mate_[pv];
                mate_[v] = pv;
                mate_[pv] = v;
                v = ppv;
            }
        }
        return mate_;
    }

private:
    void greedy_start()
    {
        for (int u = 0; u < n_; ++u) {
            if (mate_[u] != none)
                continue;
            for (Vertex w : g_.neighbors(static_cast<Vertex>(u)))
                if (mate_[static_cast<int>(w)] == none) {
                    mate_[u] = static_cast<int>(w);
                    mate_[static_cast<int>(w)] = u;
                    break;
                }
        }
    }

    int lca(int a, int b)
    {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (mate_[a] == none)
                break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_augmenting_path(int root)
    {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), none);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int v = queue[head];
            for (Vertex wv : g_.neighbors(static_cast<Vertex>(v))) {
                const int to = static_cast<int>(wv);
                if (base_[v] == base_[to] || mate_[v] == to)
                    continue;
                if (to == root || (mate_[to] != none && parent_[mate_[to]] != none)) {
                    const int current = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, current, to);
                    mark_path(to, current, v);
                    for (int i = 0; i < n_; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = current;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent_[to] == none) {
                    parent_[to] = v;
                    if (mate_[to] == none)
                        return to;
                    used_[mate_[to]] = 1;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return none;
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> used_, blossom_;
};

/// Branch and bound over (include v) / (include N(v)) on a max-degree vertex,
/// after forced moves for degree-one vertices, pruned by a greedy matching.
class CoverSolver {
public:
    explicit CoverSolver(const Graph& g) : g_(g)
    {
        for (Vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) > 0)
                best_.push_back(v);
    }

    VertexSet solve()
    {
        std::vector<char> alive(g_.order(), 1);
        branch(alive, {});
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    std::size_t live_degree(const std::vector<char>& alive, Vertex v) const
    {
        std::size_t d = 0;
        for (Vertex w : g_.neighbors(v))
            d += alive[w] ? 1 : 0;
        return d;
    }

    static void take(std::vector<char>& alive, VertexSet& chosen, Vertex v)
    {
        alive[v] = 0;
        chosen.push_back(v);
    }

    std::size_t matching_lower_bound(const std::vector<char>& alive) const
    {
        std::vector<char> used(g_.order(), 0);
        std::size_t count = 0;
        for (Vertex u = 0; u < g_.order(); ++u) {
            if (!alive[u] || used[u])
                continue;
            for (Vertex w : g_.neighbors(u))
                if (alive[w] && !used[w]) {
                    used[u] = used[w] = 1;
                    ++count;
                    break;
                }
        }
        return count;
    }

    void branch(std::vector<char> alive, VertexSet chosen)
    {
        // A degree-one vertex's neighbour belongs to some optimal cover.
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex v = 0; v < g_.order(); ++v) {
                if (!alive[v])
                    continue;
                const auto d = live_degree(alive, v);
                if (d == 0) {
                    alive[v] = 0;
                } else if (d == 1) {
                    for (Vertex w : g_.neighbors(v))
                        if (alive[w]) {
                            take(alive, chosen, w);
                            break;
                        }
                    alive[v] = 0;
                    changed = true;
                }
            }
        }
        if (chosen.size() >= best_.size())
            return;

        Vertex pivot = 0;
        std::size_t pivot_degree = 0;
        for (Vertex v = 0; v < g_.order(); ++v)
            if (alive[v]) {
                const auto d = live_degree(alive, v);
                if (d > pivot_degree) {
                    pivot_degree = d;
                    pivot = v;
                }
            }
        if (pivot_degree == 0) {
            best_ = std::move(chosen);
            return;
        }
        if (chosen.size() + matching_lower_bound(alive) >= best_.size())
            return;

        {
            auto a = alive;
            auto c = chosen;
            take(a, c, pivot);
            branch(std::move(a), std::move(c));
        }
        alive[pivot] = 0;
        for (Vertex w : g_.neighbors(pivot))
            if (alive[w])
                take(alive, chosen, w);
        branch(std::move(alive), std::move(chosen));
    }

    const Graph& g_;
    VertexSet best_;
};

class Colourer {
public:
    explicit Colourer(const Graph& g) : g_(g), colour_(g.order(), none), order_(g.order())
    {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool colourable(int k)
    {
        std::fill(colour_.begin(), colour_.end(), none);
        return extend(0, k, 0);
    }

private:
    bool extend(std::size_t index, int k, int used)
    {
        if (index == order_.size())
            return true;
        const Vertex v = order_[index];
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (Vertex w : g_.neighbors(v))
                if (colour_[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colour_[v] = c;
            if (extend(index + 1, k, std::max(used, c + 1)))
                return true;
            colour_[v] = none;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> colour_;
    std::vector<Vertex> order_;
};

}  // namespace

Matching maximum_matching(const Graph& g)
{
    const auto mate = BlossomMatcher(g).run();
    Matching m;
    for (int u = 0; u < static_cast<int>(mate.size()); ++u)
        if (mate[u] > u)
            m.edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(mate[u]));
    return m;
}

bool is_matching(const Graph& g, const Matching& m)
{
    std::vector<char> used(g.order(), 0);
    for (const auto& [u, v] : m.edges) {
        if (u >= g.order() || v >= g.order() || !g.has_edge(u, v) || used[u] || used[v])
            return false;
        used[u] = used[v] = 1;
    }
    return true;
}

VertexCover minimum_vertex_cover(const Graph& g)
{
    return {CoverSolver(g).solve()};
}

bool is_vertex_cover(const Graph& g, const VertexSet& cover)
{
    std::vector<char> in(g.order(), 0);
    for (Vertex v : cover) {
        if (v >= g.order())
            return false;
        in[v] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v])
            return false;
    return true;
}

std::size_t independence_number(const Graph& g)
{
    return g.order() - minimum_vertex_cover(g).size();
}

std::size_t chromatic_number(const Graph& g)
{
    if (g.order() == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    Colourer colourer(g);
    for (std::size_t k = 2;; ++k)
        if (colourer.colourable(static_cast<int>(k)))
            return k;
}

}  // namespace dynamo
