#include "dynamo/audit.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "dynamo/bounds.hpp"
#include "dynamo/combinatorics.hpp"
#include "dynamo/corpus.hpp"
#include "dynamo/dynamics.hpp"
#include "dynamo/oracle.hpp"
#include "dynamo/random.hpp"
#include "dynamo/strict_majority.hpp"

namespace dynamo {

namespace {

using nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ordered_json set_json(const VertexSet& s)
{
    return ordered_json(s);
}

struct Context {
    const AuditConfig& config;
    Rng rng;
    CheckResult& result;

    /// Records one instance; the first failure keeps its counterexample.
    void record(bool ok, const Graph& g, std::span<const Threshold> tau, ordered_json witness)
    {
        if (ok) {
            ++result.passed;
            return;
        }
        ++result.failed;
        if (!result.counterexample)
            result.counterexample =
                Counterexample{render_graph(g), std::vector<Threshold>(tau.begin(), tau.end()), std::move(witness)};
    }

    /// Runs one instance, counting budget exhaustion as a skip.
    template <typename Body>
    void instance(Body&& body)
    {
        try {
            body();
        } catch (const BudgetExceeded&) {
            ++result.skipped;
        }
    }

    std::size_t random_n(std::size_t lo, std::size_t hi)
    {
        hi = std::max(lo, hi);
        return static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)));
    }
};

ThresholdAssignment strict(const Graph& g)
{
    return assign_thresholds(g, rule::StrictMajority{});
}

void check_sandwich(Context& cx)
{
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = cx.random_n(1, cx.config.max_n);
        const auto g = corpus::random_connected_graph(cx.rng, n, cx.rng.unit());
        const auto tau = corpus::random_degree_respecting(cx.rng, g);
        cx.instance([&] {
            const auto exact = exact_min_dynamo(g, tau, cx.config.budget).size();
            const auto lower = lower_bound_average(g, tau);
            const auto upper = upper_bound_degree_sequence(g, threshold_average(g, tau));
            const auto greedy = greedy_shrink(g, tau).dynamo.size();
            const bool ok = lower <= Rational(static_cast<std::int64_t>(exact)) && exact <= upper &&
                            exact <= greedy && greedy <= upper;
            cx.record(ok, g, tau.values(),
                      {{"lower", lower.str()}, {"exact", exact}, {"greedy", greedy}, {"upper", upper}});
        });
    }
}

/// First violated certificate property, or empty.
std::string certificate_violation(const Graph& g, const OrderingCertificate& cert)
{
    if (cert.f != f_values(g, cert.order))
        return "f values do not match the ordering";
    std::int64_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        sum += cert.f[v];
        if ((cert.f[v] - static_cast<std::int64_t>(g.degree(v))) % 2 != 0)
            return "parity of f differs from degree at vertex " + std::to_string(v);
    }
    if (sum != 0)
        return "f values do not sum to zero";
    if (cert.zero_count() > 1)
        return "more than one zero";
    if (g.has_odd_vertex() && cert.zero_count() != 0)
        return "zero present although an odd-degree vertex exists";
    int phase = 0;  // 0: positives, 1: zero seen, 2: negatives
    for (Vertex v : cert.order) {
        const int p = cert.f[v] > 0 ? 0 : cert.f[v] == 0 ? 1 : 2;
        if (p < phase)
            return "layout is not positives, zero, negatives";
        phase = p;
    }
    const auto tau = strict(g);
    if (!is_dynamo(g, tau, cert.nonnegative()))
        return "nonnegative half-set is not a dynamo";
    if (!is_dynamo(g, tau, cert.nonpositive()))
        return "nonpositive half-set is not a dynamo";
    const auto half = half_dynamo(g).size();
    const auto limit = g.has_odd_vertex() ? g.order() / 2 : (g.order() + 1) / 2;
    if (half > limit)
        return "half_dynamo larger than its bound";
    return {};
}

void check_ordering(Context& cx)
{
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = cx.random_n(1, cx.config.max_n);
        const auto g = corpus::random_connected_graph(cx.rng, n, cx.rng.unit() * 0.5);
        const auto cert = build_ordering(g);
        const auto why = certificate_violation(g, cert);
        cx.record(why.empty(), g, strict(g).values(), {{"order", cert.order}, {"f", cert.f}, {"violation", why}});
    }
}

void check_greedy(Context& cx)
{
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = cx.random_n(1, cx.config.max_n);
        const auto g = corpus::random_connected_graph(cx.rng, n, cx.rng.unit() * 0.5);
        ThresholdAssignment tau;
        switch (i % 3) {
        case 0:
            tau = corpus::random_degree_respecting(cx.rng, g);
            break;
        case 1:
            tau = strict(g);
            break;
        default: {
            std::vector<Threshold> values(n);
            for (Vertex v = 0; v < n; ++v)
                values[v] = static_cast<Threshold>(cx.rng.below(g.degree(v) + 2));
            tau = ThresholdAssignment(g, std::move(values));
        }
        }
        const auto shrink = greedy_shrink(g, tau);
        std::string why;
        const auto bound = upper_bound_degree_sequence(g, threshold_average(g, tau));
        if (!is_dynamo(g, tau, shrink.dynamo))
            why = "result is not a dynamo";
        else if (shrink.dynamo.size() > bound)
            why = "result exceeds the degree-sequence bound";
        else {
            const auto state = ShrinkState::of(g, tau, shrink.dynamo);
            for (Vertex v : state.M)
                if (state.removable_literal(g, tau, v) || state.removable(g, tau, v)) {
                    why = "final set still has a removable vertex " + std::to_string(v);
                    break;
                }
        }
        if (why.empty() && n <= 100) {
            VertexSet current(n);
            for (Vertex v = 0; v < n; ++v)
                current[v] = v;
            for (Vertex v : shrink.removal_order) {
                current.erase(std::find(current.begin(), current.end(), v));
                if (!is_dynamo(g, tau, current)) {
                    why = "not a dynamo after removing " + std::to_string(v);
                    break;
                }
            }
        }
        cx.record(why.empty(), g, tau.values(),
                  {{"dynamo", set_json(shrink.dynamo)}, {"bound", bound}, {"violation", why}});
    }
}

void check_beta(Context& cx)
{
    const std::size_t hi = std::min<std::size_t>(cx.config.max_n, 6);
    for (std::size_t i = 0; i < cx.config.count && hi >= 2; ++i) {
        const auto n = cx.random_n(2, hi);
        Graph g;
        do {
            g = corpus::random_graph(cx.rng, n, 0.2 + 0.8 * cx.rng.unit());
        } while (g.min_degree() == 0);
        std::vector<Threshold> deg(n);
        for (Vertex v = 0; v < n; ++v)
            deg[v] = static_cast<Threshold>(g.degree(v));
        const ThresholdAssignment tau(g, deg);
        std::string why;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && why.empty(); ++mask) {
            VertexSet s;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1)
                    s.push_back(v);
            if (is_dynamo(g, tau, s) != is_vertex_cover(g, s))
                why = "dynamo and vertex cover disagree on mask " + std::to_string(mask);
        }
        cx.instance([&] {
            if (why.empty() && exact_min_dynamo(g, tau, cx.config.budget).size() != minimum_vertex_cover(g).size())
                why = "minimum dynamo differs from vertex cover number";
            cx.record(why.empty(), g, tau.values(), {{"violation", why}});
        });
    }
}

void check_kn(Context& cx)
{
    for (std::size_t n = std::max<std::size_t>(1, cx.config.range_lo); n <= cx.config.range_hi; ++n)
        for (std::int64_t j = 0; j <= static_cast<std::int64_t>(n * (n - 1)); ++j) {
            const Rational t(j, static_cast<std::int64_t>(n));
            const auto w = kn_witness(n, t);
            cx.instance([&] {
                const auto exact = exact_min_dynamo(w.graph, w.tau, cx.config.budget).size();
                const bool ok = exact == w.expected && threshold_average(w.graph, w.tau) == t;
                cx.record(ok, w.graph, w.tau.values(),
                          {{"n", n}, {"t", t.str()}, {"expected", w.expected}, {"exact", exact}});
            });
        }
}

Rational gn_ratio(std::size_t n)
{
    const auto cover = static_cast<std::int64_t>((n * (n - 1) - 1) * (n - 1));
    return Rational(cover, static_cast<std::int64_t>(gn_order(n)));
}

void check_gn(Context& cx)
{
    const std::size_t lo = std::max<std::size_t>(2, cx.config.range_lo);
    const std::size_t hi = std::min<std::size_t>(6, cx.config.range_hi);
    for (std::size_t n = lo; n <= hi; ++n) {
        const auto g = generate(family::Gn{n});
        const ThresholdAssignment tau(g, gn_thresholds(n));
        const std::size_t central = n * (n - 1);
        bool ok = g.order() == gn_order(n) && g.edge_count() == gn_size(n) &&
                  threshold_average(g, tau) == edge_density(g);
        for (Vertex v = static_cast<Vertex>(central); v < g.order(); ++v)
            ok = ok && g.degree(v) == central + n - 1;
        ordered_json witness{{"n", n}, {"order", g.order()}, {"edges", g.edge_count()}};
        if (n == 2) {
            const auto exact = exact_min_dynamo(g, tau, cx.config.budget).size();
            witness["exact"] = exact;
            ok = ok && exact == 1;
        }
        if (n + 1 <= 6) {
            witness["ratio"] = gn_ratio(n).str();
            witness["next_ratio"] = gn_ratio(n + 1).str();
            ok = ok && gn_ratio(n) < gn_ratio(n + 1);
        }
        cx.record(ok, g, tau.values(), std::move(witness));
    }
}

void check_matching(Context& cx)
{
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = cx.random_n(1, cx.config.max_n);
        const auto g = corpus::random_graph(cx.rng, n, cx.rng.unit() * 0.6);
        cx.instance([&] {
            const auto a = matching_bound_audit(g, cx.config.budget);
            cx.record(a.holds, g, strict(g).values(),
                      {{"dyn", a.dyn}, {"alpha_prime", a.alpha_prime}, {"components", a.components}});
        });
    }
}

void check_regular(Context& cx)
{
    const std::size_t hi = std::min<std::size_t>(cx.config.max_n, 10);
    for (std::size_t n = 4; n <= hi; n += 2)
        corpus::for_each_cubic_graph(n, [&](const Graph& g) {
            if (!is_connected(g))
                return;
            const auto tau = strict(g);
            cx.instance([&] {
                const auto exact = exact_min_dynamo(g, tau, cx.config.budget).size();
                const Rational bound(static_cast<std::int64_t>(n), 6);
                cx.record(Rational(static_cast<std::int64_t>(exact)) >= bound, g, tau.values(),
                          {{"exact", exact}, {"bound", bound.str()}});
            });
        });
}

void check_oracles(Context& cx)
{
    const std::size_t hi = std::min<std::size_t>(cx.config.max_n, 12);
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = cx.random_n(1, hi);
        const auto g = corpus::random_graph(cx.rng, n, cx.rng.unit());
        const auto matching = maximum_matching(g);
        const auto cover = minimum_vertex_cover(g);
        const auto alpha = oracle::independence_number(g);
        std::string why;
        if (!is_matching(g, matching) || matching.size() != oracle::matching_number(g))
            why = "matching differs from the enumeration oracle";
        else if (!is_vertex_cover(g, cover.vertices) || cover.size() != oracle::vertex_cover_number(g))
            why = "vertex cover differs from the subset oracle";
        else if (alpha + cover.size() != n)
            why = "alpha + beta != n";
        else if (matching.size() > cover.size())
            why = "alpha' > beta";
        else {
            const auto chi = chromatic_number(g);
            if (n <= 9 && chi != oracle::chromatic_number(g))
                why = "chromatic number differs from the colouring oracle";
            else if (n > alpha * chi)
                why = "n > alpha * chi";
        }
        cx.record(why.empty(), g, {}, {{"violation", why}});
    }
}

void check_dynamics(Context& cx)
{
    const std::size_t hi = std::min<std::size_t>(cx.config.max_n, 8);
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = cx.random_n(1, hi);
        const auto g = corpus::random_graph(cx.rng, n, cx.rng.unit());
        std::vector<Threshold> values(n);
        for (Vertex v = 0; v < n; ++v)
            values[v] = static_cast<Threshold>(cx.rng.below(g.degree(v) + 2));
        const ThresholdAssignment tau(g, values);
        const std::uint64_t mask = cx.rng.below(std::uint64_t{1} << n);
        VertexSet seed;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                seed.push_back(v);
        const auto trace = propagate(g, tau, seed);
        std::string why;
        if (!verify_trace(g, tau, trace.rounds))
            why = "verify_trace rejects the greedy trace";
        else if (trace.complete != oracle::some_activation_order_completes(g, tau, mask))
            why = "greedy rounds disagree with the activation-order search";
        else if (trace.rounds.size() > n + 1 || trace.activated_count() > n)
            why = "trace longer than the graph";
        else {
            for (Vertex v : tau.forced_seeds())
                if (!(mask >> v & 1) && trace.complete)
                    why = "forced seed outside a dynamo";
            if (trace.complete && why.empty())
                for (Vertex v = 0; v < n; ++v) {
                    auto bigger = seed;
                    if (!std::binary_search(bigger.begin(), bigger.end(), v)) {
                        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
                        if (!is_dynamo(g, tau, bigger))
                            why = "adding a vertex to a dynamo broke it";
                    }
                }
        }
        cx.record(why.empty(), g, tau.values(), {{"seed", set_json(seed)}, {"violation", why}});
    }
}

void check_containing(Context& cx)
{
    if (cx.config.max_n < 2)
        return;
    for (std::size_t i = 0; i < cx.config.count; ++i) {
        const auto n = 2 * cx.random_n(1, cx.config.max_n / 2);
        const auto g = corpus::random_connected_graph(cx.rng, n, cx.rng.unit() * 0.5);
        const auto tau = strict(g);
        std::string why;
        for (Vertex v = 0; v < n && why.empty(); ++v) {
            try {
                const auto s = dynamo_containing(g, v, cx.config.budget);
                if (s.size() > n / 2 || !std::binary_search(s.begin(), s.end(), v) || !is_dynamo(g, tau, s))
                    why = "bad dynamo for vertex " + std::to_string(v);
            } catch (const std::runtime_error& e) {
                why = e.what();
            }
        }
        cx.record(why.empty(), g, tau.values(), {{"violation", why}});
    }
}

using CheckFn = void (*)(Context&);

const std::vector<std::pair<std::string, CheckFn>>& registry()
{
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"beta", check_beta},         {"containing", check_containing}, {"dynamics", check_dynamics},
        {"gn", check_gn},             {"greedy", check_greedy},         {"kn", check_kn},
        {"matching", check_matching}, {"oracles", check_oracles},       {"ordering", check_ordering},
        {"regular", check_regular},   {"sandwich", check_sandwich},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& audit_check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

bool AuditReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed == 0; });
}

AuditReport run_audit(const AuditConfig& config)
{
    std::vector<std::string> selected = config.checks;
    if (selected.empty() || std::find(selected.begin(), selected.end(), "all") != selected.end())
        selected = audit_check_names();
    for (const auto& name : selected)
        if (std::find(audit_check_names().begin(), audit_check_names().end(), name) == audit_check_names().end())
            throw std::invalid_argument("unknown audit check '" + name + "'");

    AuditReport report;
    report.config = config;
    for (const auto& [name, fn] : registry()) {
        if (std::find(selected.begin(), selected.end(), name) == selected.end())
            continue;
        CheckResult result;
        result.name = name;
        Context cx{config, Rng(config.seed ^ fnv1a(name)), result};
        fn(cx);
        report.instances_checked += result.passed + result.failed;
        report.checks.push_back(std::move(result));
    }
    return report;
}

ordered_json to_json(const AuditReport& report)
{
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json entry{{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"skipped", c.skipped}};
        if (c.counterexample)
            entry["counterexample"] = {{"graph", c.counterexample->graph},
                                       {"thresholds", c.counterexample->thresholds},
                                       {"witness", c.counterexample->witness}};
        else
            entry["counterexample"] = nullptr;
        checks.push_back(std::move(entry));
    }
    const auto& cfg = report.config;
    return {{"seed", cfg.seed},
            {"config",
             {{"max_n", cfg.max_n},
              {"count", cfg.count},
              {"n_range", std::to_string(cfg.range_lo) + ".." + std::to_string(cfg.range_hi)},
              {"budget", cfg.budget.max_candidates}}},
            {"instances_checked", report.instances_checked},
            {"ok", report.ok()},
            {"checks", std::move(checks)}};
}

}  // namespace dynamo
