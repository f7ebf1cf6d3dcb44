#include "dynamo/cli.hpp"

#include <chrono>
#include <charconv>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dynamo/audit.hpp"
#include "dynamo/bounds.hpp"
#include "dynamo/dynamics.hpp"
#include "dynamo/graph.hpp"
#include "dynamo/minimize.hpp"
#include "dynamo/strict_majority.hpp"

namespace dynamo {

namespace {

using nlohmann::ordered_json;

/// Usage-level failure: bad flag values, unknown names.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    for (;;) {
        const auto next = text.find(sep, pos);
        out.push_back(text.substr(pos, next - pos));
        if (next == std::string::npos)
            break;
        pos = next + 1;
    }
    return out;
}

std::uint64_t to_uint(const std::string& s, const std::string& what)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw UsageError("malformed " + what + ": '" + s + "'");
    return value;
}

VertexSet parse_vertex_list(const std::string& text)
{
    VertexSet out;
    for (const auto& item : split(text, ','))
        out.push_back(static_cast<Vertex>(to_uint(item, "vertex id")));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ThresholdRule parse_rule(const std::string& text, std::size_t n)
{
    if (text == "strict-majority")
        return rule::StrictMajority{};
    if (text == "simple-majority")
        return rule::SimpleMajority{};
    if (text.rfind("constant:", 0) == 0)
        return rule::Constant{static_cast<Threshold>(to_uint(text.substr(9), "constant threshold"))};
    if (text.rfind("file:", 0) == 0)
        return rule::Explicit{parse_thresholds(read_file(text.substr(5)), n)};
    throw UsageError("unknown threshold rule '" + text +
                     "' (expected strict-majority, simple-majority, constant:<k> or file:<path>)");
}

Graph load_graph(const std::string& path)
{
    return parse_graph(read_file(path));
}

ordered_json rational_json(const Rational& r)
{
    return r.str();
}

ordered_json trace_json(const ActivationTrace& trace)
{
    return {{"rounds", trace.rounds},
            {"complete", trace.complete},
            {"seed_size", trace.rounds.empty() ? 0 : trace.rounds.front().size()},
            {"total_rounds", trace.last_round()}};
}

ordered_json entry_json(const BoundEntry& e)
{
    return {{"label", e.label},
            {"value", rational_json(e.value)},
            {"applicable", e.applicable},
            {"reason", e.reason},
            {"formula", e.formula}};
}

ordered_json report_json(const BoundReport& r)
{
    const auto& c = r.context;
    ordered_json context{{"n", c.n},
                         {"m", c.m},
                         {"density", rational_json(c.density)},
                         {"average_threshold", rational_json(c.average)},
                         {"max_threshold", c.max_threshold},
                         {"min_threshold", c.min_threshold},
                         {"max_degree", c.max_degree},
                         {"min_degree", c.min_degree},
                         {"components", c.components},
                         {"respects_degrees", c.respects_degrees},
                         {"strict_majority", c.strict_majority}};
    auto optional_field = [&](const char* key, const std::optional<std::size_t>& v) {
        context[key] = v ? ordered_json(*v) : ordered_json(nullptr);
    };
    optional_field("matching_number", c.matching);
    optional_field("vertex_cover_number", c.vertex_cover);
    optional_field("chromatic_number", c.chromatic);

    ordered_json lower = ordered_json::array();
    for (const auto& e : r.lower)
        lower.push_back(entry_json(e));
    ordered_json upper = ordered_json::array();
    for (const auto& e : r.upper)
        upper.push_back(entry_json(e));
    return {{"context", std::move(context)},
            {"lower_bounds", std::move(lower)},
            {"upper_bounds", std::move(upper)},
            {"best_lower", rational_json(r.best_lower())},
            {"best_upper", rational_json(r.best_upper())}};
}

ordered_json certificate_json(const OrderingCertificate& cert, const std::vector<Vertex>& original)
{
    std::vector<Vertex> order;
    std::vector<std::int64_t> f;
    for (Vertex local : cert.order) {
        order.push_back(original[local]);
        f.push_back(cert.f[local]);
    }
    return {{"order", order},
            {"f", f},
            {"zero_count", cert.zero_count()},
            {"odd_vertex", cert.has_odd_vertex}};
}

struct Options {
    // gen
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::string offsets;
    double p = 0.5;
    std::uint64_t rng_seed = 1;
    std::string out_path;
    std::string thresholds_out;
    // shared
    std::string graph_path;
    std::string rule = "strict-majority";
    std::string seed_set;
    std::string strategy;
    std::uint64_t budget = WorkBudget{}.max_candidates;
    bool heavy = false;
    // audit
    std::string checks;
    std::size_t max_n = 8;
    std::size_t count = 200;
    std::string n_range = "3..8";
};

int cmd_gen(const Options& o, std::ostream& out)
{
    Family f;
    if (o.family == "complete")
        f = family::Complete{o.n};
    else if (o.family == "path")
        f = family::Path{o.n};
    else if (o.family == "cycle")
        f = family::Cycle{o.n};
    else if (o.family == "star")
        f = family::Star{o.k};
    else if (o.family == "circulant") {
        std::vector<std::size_t> offsets;
        for (const auto& s : split(o.offsets, ','))
            offsets.push_back(to_uint(s, "offset"));
        f = family::Circulant{o.n, offsets};
    } else if (o.family == "gnp")
        f = family::Gnp{o.n, o.p, o.rng_seed};
    else if (o.family == "gn")
        f = family::Gn{o.n};
    else
        throw UsageError("unknown family '" + o.family + "'");

    const Graph g = generate(f);
    if (!o.thresholds_out.empty()) {
        if (o.family != "gn")
            throw UsageError("--thresholds-out is only defined for the gn family");
        write_file(o.thresholds_out, render_thresholds(gn_thresholds(o.n)));
    }
    if (o.out_path.empty()) {
        out << render_graph(g);
        return 0;
    }
    write_file(o.out_path, render_graph(g));
    ordered_json doc{{"family", o.family}, {"order", g.order()}, {"edges", g.edge_count()}, {"out", o.out_path}};
    if (!o.thresholds_out.empty())
        doc["thresholds_out"] = o.thresholds_out;
    out << doc.dump(2) << '\n';
    return 0;
}

int cmd_thresholds(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const auto tau = assign_thresholds(g, parse_rule(o.rule, g.order()));
    if (!o.out_path.empty())
        write_file(o.out_path, render_thresholds(tau.values()));
    ordered_json doc{{"rule", o.rule},
                     {"thresholds", std::vector<Threshold>(tau.values().begin(), tau.values().end())},
                     {"respects_degrees", tau.respects_degrees()},
                     {"forced_seeds", tau.forced_seeds()}};
    if (g.order() > 0) {
        const auto stats = threshold_stats(g, tau);
        doc["average"] = rational_json(stats.average);
        doc["max"] = stats.max;
        doc["min"] = stats.min;
    }
    out << doc.dump(2) << '\n';
    return 0;
}

int cmd_simulate(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const auto tau = assign_thresholds(g, parse_rule(o.rule, g.order()));
    const auto trace = propagate(g, tau, parse_vertex_list(o.seed_set));
    out << trace_json(trace).dump(2) << '\n';
    return 0;
}

int cmd_find(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const auto tau = assign_thresholds(g, parse_rule(o.rule, g.order()));
    ordered_json doc{{"strategy", o.strategy}};
    VertexSet found;
    if (o.strategy == "ordering") {
        if (tau != assign_thresholds(g, rule::StrictMajority{}))
            throw UsageError("the ordering strategy requires strict-majority thresholds");
        found = half_dynamo(g);
        ordered_json certs = ordered_json::array();
        for (const auto& comp : components(g)) {
            const auto sub = induced_subgraph(g, comp);
            certs.push_back(certificate_json(build_ordering(sub.graph), sub.original));
        }
        doc["certificates"] = std::move(certs);
    } else if (o.strategy == "greedy") {
        found = greedy_shrink(g, tau).dynamo;
    } else if (o.strategy == "exact") {
        found = exact_min_dynamo(g, tau, WorkBudget{o.budget});
    } else {
        throw UsageError("unknown strategy '" + o.strategy + "' (expected ordering, greedy or exact)");
    }
    const bool verified = is_dynamo(g, tau, found);
    doc["dynamo"] = found;
    doc["size"] = found.size();
    doc["is_dynamo"] = verified;
    if (verified)
        doc["is_minimal"] = is_minimal(g, tau, found);
    doc["degree_sequence_bound"] = upper_bound_degree_sequence(g, threshold_average(g, tau));
    out << doc.dump(2) << '\n';
    return verified ? 0 : 1;
}

int cmd_bounds(const Options& o, std::ostream& out)
{
    const Graph g = load_graph(o.graph_path);
    const auto tau = assign_thresholds(g, parse_rule(o.rule, g.order()));
    out << report_json(bound_report(g, tau, o.heavy)).dump(2) << '\n';
    return 0;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err)
{
    AuditConfig config;
    config.max_n = o.max_n;
    config.count = o.count;
    config.seed = o.rng_seed;
    config.checks = split(o.checks, ',');
    config.budget = WorkBudget{o.budget};
    const auto dots = o.n_range.find("..");
    if (dots == std::string::npos)
        throw UsageError("--n-range expects lo..hi");
    config.range_lo = to_uint(o.n_range.substr(0, dots), "range bound");
    config.range_hi = to_uint(o.n_range.substr(dots + 2), "range bound");
    try {
        const auto start = std::chrono::steady_clock::now();
        const auto report = run_audit(config);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        out << to_json(report).dump(2) << '\n';
        err << "audit: " << report.instances_checked << " instances in " << elapsed.count() << " s\n";
        return report.ok() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dynamic monopoly toolkit: threshold activation, dynamo search and bounds"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    gen->add_option("--family", o.family, "complete|path|cycle|star|circulant|gnp|gn")->required();
    gen->add_option("--n", o.n, "Order parameter");
    gen->add_option("--k", o.k, "Number of star leaves");
    gen->add_option("--offsets", o.offsets, "Comma-separated circulant offsets");
    gen->add_option("--p", o.p, "Edge probability for gnp");
    gen->add_option("--seed", o.rng_seed, "RNG seed for gnp");
    gen->add_option("--out", o.out_path, "Write the graph here instead of standard output");
    gen->add_option("--thresholds-out", o.thresholds_out, "gn only: write its canonical thresholds here");

    auto* thr = app.add_subcommand("thresholds", "Evaluate a threshold rule on a graph");
    thr->add_option("--graph", o.graph_path)->required();
    thr->add_option("--rule", o.rule, "strict-majority|simple-majority|constant:<k>|file:<path>")->required();
    thr->add_option("--out", o.out_path, "Write the thresholds as one line here");

    auto* sim = app.add_subcommand("simulate", "Run the activation process from a seed set");
    sim->add_option("--graph", o.graph_path)->required();
    sim->add_option("--thresholds", o.rule);
    sim->add_option("--seed", o.seed_set, "Comma-separated seed vertices");

    auto* find = app.add_subcommand("find", "Search for a dynamo");
    find->add_option("--strategy", o.strategy, "ordering|greedy|exact")->required();
    find->add_option("--graph", o.graph_path)->required();
    find->add_option("--thresholds", o.rule);
    find->add_option("--budget", o.budget, "Candidate-set limit for the exact search");

    auto* bnd = app.add_subcommand("bounds", "Report lower and upper bounds");
    bnd->add_option("--graph", o.graph_path)->required();
    bnd->add_option("--thresholds", o.rule);
    bnd->add_flag("--heavy", o.heavy, "Also compute vertex cover, chromatic bounds");

    auto* aud = app.add_subcommand("audit", "Cross-check every property on seeded corpora");
    aud->add_option("--checks", o.checks, "Comma-separated check names, or all");
    aud->add_option("--max-n", o.max_n);
    aud->add_option("--count", o.count);
    aud->add_option("--seed", o.rng_seed);
    aud->add_option("--n-range", o.n_range, "Inclusive lo..hi for the kn and gn checks");
    aud->add_option("--budget", o.budget, "Candidate-set limit per exact search");

    std::vector<const char*> argv{"dynamo"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(o, out);
        if (thr->parsed())
            return cmd_thresholds(o, out);
        if (sim->parsed())
            return cmd_simulate(o, out);
        if (find->parsed())
            return cmd_find(o, out);
        if (bnd->parsed())
            return cmd_bounds(o, out);
        if (aud->parsed())
            return cmd_audit(o, out, err);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace dynamo
