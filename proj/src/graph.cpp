#include "dynamo/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dynamo/random.hpp"

namespace dynamo {

namespace {

std::string at_line(std::size_t line, const std::string& what)
{
    return "line " + std::to_string(line) + ": " + what;
}

/// Splits a line into unsigned integers; nullopt-like failure via exception.
std::vector<std::uint64_t> integers(std::string_view line, std::size_t line_no)
{
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        if (i == line.size())
            break;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        const auto consumed = static_cast<std::size_t>(ptr - (line.data() + i));
        if (ec != std::errc{} || consumed == 0)
            throw GraphError(at_line(line_no, "expected a non-negative integer"));
        i += consumed;
        if (i < line.size() && line[i] != ' ' && line[i] != '\t')
            throw GraphError(at_line(line_no, "expected a non-negative integer"));
        out.push_back(value);
    }
    return out;
}

/// Non-comment, non-blank lines paired with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::string_view>> data_lines(std::string_view text)
{
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#')
            out.emplace_back(line_no, line);
        if (end == text.size())
            break;
        pos = end + 1;
    }
    return out;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " +
                             std::to_string(n));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = g.adj_[v];
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end())
            throw GraphError("duplicate edge at vertex " + std::to_string(v));
    }
    g.edges_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::max_degree() const
{
    std::size_t best = 0;
    for (const auto& list : adj_)
        best = std::max(best, list.size());
    return best;
}

std::size_t Graph::min_degree() const
{
    if (adj_.empty())
        return 0;
    std::size_t best = adj_.front().size();
    for (const auto& list : adj_)
        best = std::min(best, list.size());
    return best;
}

bool Graph::has_odd_vertex() const
{
    return std::any_of(adj_.begin(), adj_.end(), [](const auto& list) { return list.size() % 2 == 1; });
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices)
{
    constexpr Vertex absent = ~Vertex{0};
    std::vector<Vertex> local(g.order(), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : g.neighbors(vertices[i]))
            if (local[w] != absent && local[w] > i)
                edges.emplace_back(static_cast<Vertex>(i), local[w]);
    return {Graph::from_edges(vertices.size(), edges), std::vector<Vertex>(vertices.begin(), vertices.end())};
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        out[v] = g.degree(v);
    std::sort(out.begin(), out.end());
    return out;
}

Rational edge_density(const Graph& g)
{
    if (g.order() == 0)
        throw GraphError("edge density of the empty graph");
    return {static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(g.order())};
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        VertexSet comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

// ---------------------------------------------------------------------------

ThresholdAssignment::ThresholdAssignment(const Graph& g, std::vector<Threshold> values)
    : values_(std::move(values)), forced_(values_.size(), 0)
{
    if (values_.size() != g.order())
        throw GraphError("threshold count " + std::to_string(values_.size()) + " does not match vertex count " +
                         std::to_string(g.order()));
    for (Vertex v = 0; v < values_.size(); ++v)
        if (values_[v] > g.degree(v)) {
            forced_[v] = 1;
            ++forced_count_;
        }
}

VertexSet ThresholdAssignment::forced_seeds() const
{
    VertexSet out;
    for (Vertex v = 0; v < forced_.size(); ++v)
        if (forced_[v])
            out.push_back(v);
    return out;
}

ThresholdAssignment assign_thresholds(const Graph& g, const ThresholdRule& r)
{
    const std::size_t n = g.order();
    std::vector<Threshold> values(n);
    std::visit(
        [&](const auto& chosen) {
            using T = std::decay_t<decltype(chosen)>;
            for (Vertex v = 0; v < n; ++v) {
                const auto d = static_cast<Threshold>(g.degree(v));
                if constexpr (std::is_same_v<T, rule::StrictMajority>)
                    values[v] = d / 2 + 1;  // ceil((d + 1) / 2)
                else if constexpr (std::is_same_v<T, rule::SimpleMajority>)
                    values[v] = (d + 1) / 2;
                else if constexpr (std::is_same_v<T, rule::Constant>)
                    values[v] = chosen.k;
            }
            if constexpr (std::is_same_v<T, rule::Explicit>) {
                if (chosen.values.size() != n)
                    throw GraphError("explicit threshold list has " + std::to_string(chosen.values.size()) +
                                     " entries, expected " + std::to_string(n));
                values = chosen.values;
            }
        },
        r);
    return {g, std::move(values)};
}

ThresholdStats threshold_stats(const Graph& g, const ThresholdAssignment& tau)
{
    if (g.order() == 0)
        throw GraphError("threshold statistics of the empty graph");
    if (tau.size() != g.order())
        throw GraphError("threshold assignment length does not match the graph");
    const auto values = tau.values();
    const std::int64_t sum = std::accumulate(values.begin(), values.end(), std::int64_t{0});
    ThresholdStats s;
    s.average = Rational(sum, static_cast<std::int64_t>(g.order()));
    s.max = *std::max_element(values.begin(), values.end());
    s.min = *std::min_element(values.begin(), values.end());
    return s;
}

// ---------------------------------------------------------------------------

Graph parse_graph(std::string_view text)
{
    const auto lines = data_lines(text);
    if (lines.empty())
        throw GraphError("missing header line \"n m\"");
    const auto header = integers(lines[0].second, lines[0].first);
    if (header.size() != 2)
        throw GraphError(at_line(lines[0].first, "malformed header, expected \"n m\""));
    const std::size_t n = header[0];
    const std::size_t m = header[1];
    if (lines.size() - 1 != m)
        throw GraphError("edge count mismatch: header declares " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::vector<Vertex>> seen(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto [line_no, line] = lines[i];
        const auto uv = integers(line, line_no);
        if (uv.size() != 2)
            throw GraphError(at_line(line_no, "expected an edge \"u v\""));
        if (uv[0] >= n || uv[1] >= n)
            throw GraphError(at_line(line_no, "vertex id out of range"));
        if (uv[0] == uv[1])
            throw GraphError(at_line(line_no, "self-loop"));
        if (uv[0] > uv[1])
            throw GraphError(at_line(line_no, "edge endpoints must satisfy u < v"));
        const auto u = static_cast<Vertex>(uv[0]);
        const auto v = static_cast<Vertex>(uv[1]);
        auto& list = seen[u];
        if (std::find(list.begin(), list.end(), v) != list.end())
            throw GraphError(at_line(line_no, "duplicate edge"));
        list.push_back(v);
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

std::string render_graph(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Threshold> parse_thresholds(std::string_view text, std::size_t n)
{
    const auto lines = data_lines(text);
    auto to_threshold = [](std::uint64_t x, std::size_t line_no) {
        if (x > UINT32_MAX)
            throw GraphError(at_line(line_no, "threshold too large"));
        return static_cast<Threshold>(x);
    };

    if (lines.size() == 1 && n != 1) {
        const auto row = integers(lines[0].second, lines[0].first);
        if (row.size() != n)
            throw GraphError(at_line(lines[0].first, "expected " + std::to_string(n) + " thresholds, found " +
                                                         std::to_string(row.size())));
        std::vector<Threshold> out;
        for (auto x : row)
            out.push_back(to_threshold(x, lines[0].first));
        return out;
    }
    // n == 1 is ambiguous only when the single line holds one value.
    if (lines.size() == 1 && n == 1) {
        const auto row = integers(lines[0].second, lines[0].first);
        if (row.size() == 1)
            return {to_threshold(row[0], lines[0].first)};
    }

    if (lines.size() != n)
        throw GraphError("expected " + std::to_string(n) + " threshold lines \"v t\", found " +
                         std::to_string(lines.size()));
    std::vector<Threshold> out(n);
    std::vector<char> set(n, 0);
    for (const auto& [line_no, line] : lines) {
        const auto vt = integers(line, line_no);
        if (vt.size() != 2)
            throw GraphError(at_line(line_no, "expected \"v t\""));
        if (vt[0] >= n)
            throw GraphError(at_line(line_no, "vertex id out of range"));
        if (set[vt[0]])
            throw GraphError(at_line(line_no, "threshold for vertex " + std::to_string(vt[0]) + " given twice"));
        set[vt[0]] = 1;
        out[vt[0]] = to_threshold(vt[1], line_no);
    }
    return out;
}

std::string render_thresholds(std::span<const Threshold> values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(values[i]);
    }
    out += '\n';
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw GraphError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw GraphError("cannot write '" + path + "'");
    out << contents;
    if (!out)
        throw GraphError("failed writing '" + path + "'");
}

// ---------------------------------------------------------------------------

std::uint64_t gn_order(std::size_t n)
{
    const std::uint64_t c = static_cast<std::uint64_t>(n) * (n - 1);
    return c + n * (c - 1);
}

std::uint64_t gn_size(std::size_t n)
{
    const std::uint64_t n3 = static_cast<std::uint64_t>(n) * n * n;
    return (n3 - n) * (static_cast<std::uint64_t>(n) * n - n - 1);
}

namespace {

std::vector<Edge> clique_edges(Vertex first, std::size_t size)
{
    std::vector<Edge> out;
    for (Vertex i = 0; i < size; ++i)
        for (Vertex j = i + 1; j < size; ++j)
            out.emplace_back(first + i, first + j);
    return out;
}

void append(std::vector<Edge>& to, const std::vector<Edge>& from)
{
    to.insert(to.end(), from.begin(), from.end());
}

}  // namespace

Graph generate(const Family& f)
{
    return std::visit(
        [](const auto& params) -> Graph {
            using T = std::decay_t<decltype(params)>;
            std::vector<Edge> edges;
            if constexpr (std::is_same_v<T, family::Complete>) {
                return Graph::from_edges(params.n, clique_edges(0, params.n));
            } else if constexpr (std::is_same_v<T, family::Path>) {
                for (Vertex v = 1; v < params.n; ++v)
                    edges.emplace_back(v - 1, v);
                return Graph::from_edges(params.n, edges);
            } else if constexpr (std::is_same_v<T, family::Cycle>) {
                if (params.n < 3)
                    throw GraphError("cycle requires n >= 3");
                for (Vertex v = 1; v < params.n; ++v)
                    edges.emplace_back(v - 1, v);
                edges.emplace_back(0, static_cast<Vertex>(params.n - 1));
                return Graph::from_edges(params.n, edges);
            } else if constexpr (std::is_same_v<T, family::Star>) {
                for (Vertex v = 1; v <= params.k; ++v)
                    edges.emplace_back(0, v);
                return Graph::from_edges(params.k + 1, edges);
            } else if constexpr (std::is_same_v<T, family::Circulant>) {
                const std::size_t n = params.n;
                std::vector<std::size_t> offsets = params.offsets;
                std::sort(offsets.begin(), offsets.end());
                offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
                for (auto o : offsets)
                    if (o < 1 || 2 * o > n)
                        throw GraphError("circulant offset " + std::to_string(o) + " outside [1, n/2]");
                for (Vertex i = 0; i < n; ++i)
                    for (auto o : offsets) {
                        const auto j = static_cast<Vertex>((i + o) % n);
                        // o == n/2 pairs each vertex with its antipode once.
                        if (2 * o == n && j < i)
                            continue;
                        edges.emplace_back(std::min(i, j), std::max(i, j));
                    }
                return Graph::from_edges(n, edges);
            } else if constexpr (std::is_same_v<T, family::Gnp>) {
                if (!(params.p >= 0.0 && params.p <= 1.0))
                    throw GraphError("gnp probability must lie in [0, 1]");
                Rng rng(params.seed);
                for (Vertex u = 0; u < params.n; ++u)
                    for (Vertex v = u + 1; v < params.n; ++v)
                        if (rng.bernoulli(params.p))
                            edges.emplace_back(u, v);
                return Graph::from_edges(params.n, edges);
            } else {
                static_assert(std::is_same_v<T, family::Gn>);
                const std::size_t n = params.n;
                if (n < 2)
                    throw GraphError("gn requires n >= 2");
                const std::size_t central = n * (n - 1);
                const std::size_t copies = central - 1;
                append(edges, clique_edges(0, central));
                for (std::size_t c = 0; c < copies; ++c) {
                    const auto first = static_cast<Vertex>(central + c * n);
                    append(edges, clique_edges(first, n));
                    for (Vertex u = first; u < first + n; ++u)
                        for (Vertex z = 0; z < central; ++z)
                            edges.emplace_back(z, u);
                }
                return Graph::from_edges(central + copies * n, edges);
            }
        },
        f);
}

std::vector<Threshold> gn_thresholds(std::size_t n)
{
    if (n < 2)
        throw GraphError("gn requires n >= 2");
    const std::size_t central = n * (n - 1);
    std::vector<Threshold> out(gn_order(n), 0);
    for (std::size_t v = central; v < out.size(); ++v)
        out[v] = static_cast<Threshold>(central + (n - 1));
    return out;
}

}  // namespace dynamo
