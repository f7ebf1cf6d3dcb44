#include "dynamo/corpus.hpp"

#include <numeric>

namespace dynamo::corpus {

Graph random_graph(Rng& rng, std::size_t n, double p)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

namespace {

std::vector<Edge> tree_edges(Rng& rng, std::size_t n)
{
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    rng.shuffle(std::span<Vertex>(label));
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        const Vertex a = label[i];
        const Vertex b = label[rng.below(i)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return edges;
}

}  // namespace

Graph random_tree(Rng& rng, std::size_t n)
{
    return Graph::from_edges(n, tree_edges(rng, n));
}

Graph random_connected_graph(Rng& rng, std::size_t n, double extra)
{
    auto edges = tree_edges(rng, n);
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    for (const auto& [u, v] : edges)
        present[u][v] = 1;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!present[u][v] && rng.bernoulli(extra))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

ThresholdAssignment random_degree_respecting(Rng& rng, const Graph& g)
{
    std::vector<Threshold> values(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        values[v] = static_cast<Threshold>(rng.below(g.degree(v) + 1));
    return {g, std::move(values)};
}

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                edges.push_back(pairs[i]);
        visit(Graph::from_edges(n, edges));
    }
}

namespace {

class CubicEnumerator {
public:
    CubicEnumerator(std::size_t n, const std::function<void(const Graph&)>& visit)
        : n_(n), visit_(visit), deficit_(n, 3)
    {
    }

    void run()
    {
        if (n_ < 4 || n_ % 2 == 1)
            return;
        for (Vertex w = 1; w <= 3; ++w)
            add(0, w);
        step(1);
    }

private:
    void add(Vertex u, Vertex w)
    {
        edges_.emplace_back(u, w);
        --deficit_[u];
        --deficit_[w];
    }

    void remove_last()
    {
        const auto [u, w] = edges_.back();
        edges_.pop_back();
        ++deficit_[u];
        ++deficit_[w];
    }

    void step(Vertex v)
    {
        if (v == n_) {
            visit_(Graph::from_edges(n_, edges_));
            return;
        }
        if (deficit_[v] == 0) {
            step(v + 1);
            return;
        }
        choose(v, v + 1, deficit_[v]);
    }

    /// Picks `need` more upward neighbours of v from candidates >= from.
    void choose(Vertex v, Vertex from, int need)
    {
        if (need == 0) {
            step(v + 1);
            return;
        }
        for (Vertex w = from; w < n_; ++w) {
            if (deficit_[w] == 0)
                continue;
            add(v, w);
            choose(v, w + 1, need - 1);
            remove_last();
        }
    }

    std::size_t n_;
    const std::function<void(const Graph&)>& visit_;
    std::vector<int> deficit_;
    std::vector<Edge> edges_;
};

}  // namespace

void for_each_cubic_graph(std::size_t n, const std::function<void(const Graph&)>& visit)
{
    CubicEnumerator(n, visit).run();
}

}  // namespace dynamo::corpus
