#include "dynamo/strict_majority.hpp"

#include <algorithm>
#include <iostream>

#include "dynamo/combinatorics.hpp"
#include "dynamo/dynamics.hpp"

namespace dynamo {

namespace {

enum class Sign : char { positive, zero, negative };

struct Frame {
    std::size_t depth = 0;
    Vertex root = 0;
    std::vector<VertexSet> children;
    std::vector<std::optional<Vertex>> child_designated;
    std::size_t next_child = 0;
    // Concatenated child layouts: A_1^+..A_k^+, A_1^0..A_k^0, A_1^-..A_k^-.
    std::vector<Vertex> positive, zero, negative;
};

struct Layout {
    std::vector<Vertex> positive, zero, negative;
};

class OrderingBuilder {
public:
    explicit OrderingBuilder(const Graph& g)
        : g_(g), stamp_(g.order(), 0), root_depth_(g.order(), 0), sign_(g.order(), Sign::zero)
    {
    }

    std::vector<Vertex> run(VertexSet all, std::optional<Vertex> designated)
    {
        std::vector<Frame> stack;
        stack.push_back(expand(std::move(all), designated, 1));
        Layout done;
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next_child < top.children.size()) {
                const std::size_t i = top.next_child++;
                Frame child = expand(std::move(top.children[i]), top.child_designated[i], top.depth + 1);
                top.children[i] = {};
                stack.push_back(std::move(child));  // invalidates `top`
                continue;
            }
            Layout layout = assemble(top);
            stack.pop_back();
            if (stack.empty()) {
                done = std::move(layout);
                break;
            }
            Frame& parent = stack.back();
            append(parent.positive, layout.positive);
            append(parent.zero, layout.zero);
            append(parent.negative, layout.negative);
        }
        std::vector<Vertex> order = std::move(done.positive);
        append(order, done.zero);
        append(order, done.negative);
        return order;
    }

private:
    static void append(std::vector<Vertex>& to, const std::vector<Vertex>& from)
    {
        to.insert(to.end(), from.begin(), from.end());
    }

    Frame expand(VertexSet vertices, std::optional<Vertex> designated, std::size_t depth)
    {
        const std::uint64_t id = ++next_stamp_;
        for (Vertex v : vertices)
            stamp_[v] = id;
        auto inside = [&](Vertex v) { return stamp_[v] == id; };
        auto local_degree = [&](Vertex v) {
            std::size_t d = 0;
            for (Vertex w : g_.neighbors(v))
                d += inside(w) ? 1 : 0;
            return d;
        };

        Frame f;
        f.depth = depth;
        std::optional<Vertex> odd;
        for (Vertex v : vertices)
            if (local_degree(v) % 2 == 1 && (!odd || v < *odd))
                odd = v;
        if (odd)
            f.root = *odd;
        else if (designated)
            f.root = *designated;
        else
            f.root = *std::min_element(vertices.begin(), vertices.end());

        const Vertex x = f.root;
        root_depth_[x] = depth;
        stamp_[x] = 0;

        // Components of H - x, in order of their smallest vertex.
        std::sort(vertices.begin(), vertices.end());
        std::vector<Vertex> queue;
        for (Vertex s : vertices) {
            if (!inside(s))
                continue;
            const std::uint64_t comp_id = ++next_stamp_;
            VertexSet comp{s};
            stamp_[s] = comp_id;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (Vertex w : g_.neighbors(comp[head]))
                    if (inside(w)) {
                        stamp_[w] = comp_id;
                        comp.push_back(w);
                    }
            bool all_even = true;
            std::optional<Vertex> near_root;
            for (Vertex u : comp) {
                std::size_t d = 0;
                for (Vertex w : g_.neighbors(u))
                    d += stamp_[w] == comp_id ? 1 : 0;
                if (d % 2 == 1)
                    all_even = false;
                if (g_.has_edge(u, x) && (!near_root || u < *near_root))
                    near_root = u;
            }
            f.children.push_back(std::move(comp));
            f.child_designated.push_back(all_even ? near_root : std::nullopt);
        }
        return f;
    }

    Layout assemble(Frame& f)
    {
        const Vertex x = f.root;
        std::int64_t fx = 0;
        for (Vertex w : g_.neighbors(x))
            if (root_depth_[w] > f.depth)
                fx += sign_[w] == Sign::negative ? 1 : -1;

        Layout out;
        out.positive = std::move(f.positive);
        for (Vertex z : f.zero) {
            sign_[z] = Sign::positive;
            out.positive.push_back(z);
        }
        if (fx > 0) {
            sign_[x] = Sign::positive;
            out.positive.push_back(x);
            out.negative = std::move(f.negative);
        } else if (fx == 0) {
            sign_[x] = Sign::zero;
            out.zero.push_back(x);
            out.negative = std::move(f.negative);
        } else {
            sign_[x] = Sign::negative;
            out.negative.reserve(f.negative.size() + 1);
            out.negative.push_back(x);
            append(out.negative, f.negative);
        }
        return out;
    }

    const Graph& g_;
    std::vector<std::uint64_t> stamp_;
    std::vector<std::size_t> root_depth_;
    std::vector<Sign> sign_;
    std::uint64_t next_stamp_ = 0;
};

ThresholdAssignment strict_majority(const Graph& g)
{
    return assign_thresholds(g, rule::StrictMajority{});
}

}  // namespace

std::vector<std::int64_t> f_values(const Graph& g, std::span<const Vertex> order)
{
    const std::size_t n = g.order();
    if (order.size() != n)
        throw std::invalid_argument("ordering has " + std::to_string(order.size()) + " entries, expected " +
                                    std::to_string(n));
    constexpr std::size_t unset = ~std::size_t{0};
    std::vector<std::size_t> position(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        if (order[i] >= n || position[order[i]] != unset)
            throw std::invalid_argument("ordering is not a permutation of the vertices");
        position[order[i]] = i;
    }
    std::vector<std::int64_t> f(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            f[v] += position[w] > position[v] ? 1 : -1;
    return f;
}

std::size_t OrderingCertificate::zero_count() const
{
    return static_cast<std::size_t>(std::count(f.begin(), f.end(), 0));
}

VertexSet OrderingCertificate::nonnegative() const
{
    VertexSet out;
    for (Vertex v = 0; v < f.size(); ++v)
        if (f[v] >= 0)
            out.push_back(v);
    return out;
}

VertexSet OrderingCertificate::nonpositive() const
{
    VertexSet out;
    for (Vertex v = 0; v < f.size(); ++v)
        if (f[v] <= 0)
            out.push_back(v);
    return out;
}

OrderingCertificate build_ordering(const Graph& g, std::optional<Vertex> designated)
{
    if (designated && *designated >= g.order())
        throw std::invalid_argument("designated vertex " + std::to_string(*designated) + " not in graph");
    if (!is_connected(g))
        throw std::invalid_argument("build_ordering requires a connected graph");

    OrderingCertificate cert;
    cert.has_odd_vertex = g.has_odd_vertex();
    if (g.order() > 0) {
        VertexSet all(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            all[v] = v;
        cert.order = OrderingBuilder(g).run(std::move(all), designated);
    }
    cert.f = f_values(g, cert.order);
    return cert;
}

VertexSet half_dynamo(const Graph& g)
{
    VertexSet out;
    for (const auto& comp : components(g)) {
        const auto sub = induced_subgraph(g, comp);
        const auto cert = build_ordering(sub.graph);
        auto plus = cert.nonnegative();
        auto minus = cert.nonpositive();
        const auto& pick = minus.size() < plus.size() ? minus : plus;
        for (Vertex v : pick)
            out.push_back(sub.original[v]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet dynamo_containing(const Graph& g, Vertex v, WorkBudget budget)
{
    const std::size_t n = g.order();
    if (v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
    if (n % 2 == 1)
        throw std::invalid_argument("dynamo_containing requires a graph of even order");
    if (!is_connected(g))
        throw std::invalid_argument("dynamo_containing requires a connected graph");

    const auto tau = strict_majority(g);
    const std::size_t limit = n / 2;

    // With v designated, the only possible zero is v itself. If v is zero it
    // lies in both half-sets, whose sizes sum to n + 1, so one has <= n/2.
    // Otherwise the half-sets partition V: take v's side if small enough,
    // else the other side (then < n/2) plus v.
    const auto cert = build_ordering(g, v);
    auto plus = cert.nonnegative();
    auto minus = cert.nonpositive();
    auto contains = [v](const VertexSet& s) { return std::binary_search(s.begin(), s.end(), v); };
    VertexSet candidate;
    if (contains(plus) && contains(minus)) {
        candidate = plus.size() <= minus.size() ? plus : minus;
    } else {
        auto& own = contains(plus) ? plus : minus;
        auto& other = contains(plus) ? minus : plus;
        if (own.size() <= limit) {
            candidate = own;
        } else {
            candidate = other;
            candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), v), v);
        }
    }
    if (candidate.size() <= limit && contains(candidate) && is_dynamo(g, tau, candidate))
        return candidate;

    std::clog << "warning: dynamo_containing falling back to exhaustive search (n = " << n << ", v = " << v
              << ")\n";
    VertexSet others;
    for (Vertex u = 0; u < n; ++u)
        if (u != v)
            others.push_back(u);
    std::uint64_t spent = 0;
    for (std::size_t r = 0; r + 1 <= limit; ++r) {
        std::vector<std::size_t> pick(r);
        for (std::size_t i = 0; i < r; ++i)
            pick[i] = i;
        for (;;) {
            if (++spent > budget.max_candidates)
                throw std::runtime_error("dynamo_containing: search budget exhausted");
            VertexSet s{v};
            for (auto i : pick)
                s.push_back(others[i]);
            std::sort(s.begin(), s.end());
            if (is_dynamo(g, tau, s))
                return s;
            std::size_t i = r;
            while (i > 0 && pick[i - 1] == others.size() - r + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < r; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::runtime_error("dynamo_containing: no strict majority dynamo of size <= n/2 contains vertex " +
                             std::to_string(v));
}

MatchingBoundAudit matching_bound_audit(const Graph& g, WorkBudget budget)
{
    MatchingBoundAudit audit;
    audit.dyn = exact_min_dynamo(g, strict_majority(g), budget).size();
    audit.alpha_prime = maximum_matching(g).size();
    audit.components = components(g).size();
    audit.holds = audit.dyn <= audit.alpha_prime + audit.components;
    return audit;
}

}  // namespace dynamo
