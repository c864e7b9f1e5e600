#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "corank/appendix.hpp"
#include "corank/classify.hpp"
#include "corank/critical_ideals.hpp"
#include "corank/graph_io.hpp"
#include "corank/minrank.hpp"
#include "corank/parallel.hpp"
#include "corank/report.hpp"
#include "corank/sweeps.hpp"
#include "corank/trees.hpp"

using namespace corank;
using nlohmann::json;

namespace {

enum Exit : int { Ok = 0, Failure = 1, ParseError = 2, Undecided = 3 };

struct Options {
    std::string input = "-";
    std::string graph;
    std::vector<std::string> domains;
    std::int64_t box = 2;
    std::string format = "json";
    std::string cache;
    std::size_t jobs = 1;
    std::size_t spairs = GroebnerBudget{}.max_spairs;
    std::size_t degree = GroebnerBudget{}.max_degree;
    bool strict = false;
    bool timings = false;

    std::size_t index = 0;
    std::string order = "degrevlex";
    std::string compare;
    std::string theorem;
};

struct ParseFailure {
    std::string message;
    std::size_t line = 0;
};

RunConfig make_config(const Options& o, std::vector<std::string> default_domains)
{
    RunConfig c;
    c.ideals.box = IntegerBox{-o.box, o.box};
    c.ideals.budget.max_spairs = o.spairs;
    c.ideals.budget.max_degree = o.degree;
    c.format = parse_output_format(o.format);
    c.jobs = o.jobs;
    c.strict = o.strict;
    c.timings = o.timings;
    if (!o.cache.empty()) c.cache = o.cache;
    c.domains.clear();
    for (const auto& d : o.domains.empty() ? default_domains : o.domains) c.domains.push_back(Domain::parse(d));
    validate(c);
    return c;
}

std::vector<AnyGraph> load_inputs(const Options& o)
{
    std::vector<InputRecord> records;
    try {
        if (!o.graph.empty()) {
            std::istringstream in(o.graph);
            records = read_graphs(in);
        } else if (o.input == "-") {
            records = read_graphs(std::cin);
        } else {
            std::ifstream in(o.input);
            if (!in) throw ParseFailure{"cannot open " + o.input, 0};
            records = read_graphs(in);
        }
    } catch (const FormatError& e) {
        throw ParseFailure{e.what(), e.line()};
    }
    std::vector<AnyGraph> out;
    for (auto& r : records) out.push_back(std::move(r.graph));
    return out;
}

std::unique_ptr<DecisionCache> open_cache(const RunConfig& c)
{
    if (c.cache) return std::make_unique<DecisionCache>(*c.cache);
    return std::make_unique<DecisionCache>();
}

Digraph as_digraph(const AnyGraph& g)
{
    if (std::holds_alternative<Digraph>(g)) return std::get<Digraph>(g);
    return to_digraph(std::get<Graph>(g));
}

void emit_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_params(const Options& o)
{
    const auto config = make_config(o, {"z", "q"});
    const auto graphs = load_inputs(o);
    auto cache = open_cache(config);
    const auto reports = parameter_reports(graphs, config, cache.get());
    std::cout << render_reports(reports, config);
    for (const auto& r : reports)
        if (r.undecided() && config.strict) return Undecided;
    return Ok;
}

int cmd_gamma(const Options& o)
{
    const auto config = make_config(o, {"z"});
    const auto graphs = load_inputs(o);
    auto cache = open_cache(config);
    std::vector<std::vector<GammaResult>> results(graphs.size());
    parallel_for(graphs.size(), config.jobs, [&](std::size_t k) {
        for (const auto& d : config.domains) results[k].push_back(gamma(as_digraph(graphs[k]), d, config.ideals, cache.get()));
    });
    bool undecided = false;
    if (config.format == OutputFormat::Json) {
        json arr = json::array();
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            json j{{"graph", graph_id(graphs[k])}};
            for (const auto& g : results[k]) j["gamma"][g.domain.name()] = to_json(g);
            arr.push_back(j);
        }
        emit_json(arr);
    } else {
        std::vector<std::string> header{"graph", "mz"};
        for (const auto& d : config.domains) header.push_back("gamma_" + d.name());
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k < graphs.size(); ++k) {
            std::vector<std::string> row{graph_id(graphs[k]), std::to_string(results[k].front().mz)};
            for (const auto& g : results[k]) row.push_back(interval(g.lower, g.upper));
            rows.push_back(row);
        }
        std::cout << render_table(header, rows, config.format);
    }
    for (const auto& rs : results)
        for (const auto& g : rs) undecided = undecided || !g.value;
    return undecided && config.strict ? Undecided : Ok;
}

int cmd_zf(const Options& o)
{
    const auto config = make_config(o, {"z"});
    const auto graphs = load_inputs(o);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : graphs) {
        const Digraph d = as_digraph(g);
        const auto z = zero_forcing_number(d);
        const auto cm = certificate_minor(d, z.witness);
        json j{{"graph", graph_id(g)}, {"n", d.order()}, {"mz", d.order() - z.z}, {"zero_forcing", to_json(z)}};
        j["certificate_minor"] = {{"rows", cm.rows}, {"cols", cm.cols}, {"determinant", cm.determinant()}};
        arr.push_back(j);
        rows.push_back({graph_id(g), std::to_string(d.order()), std::to_string(z.z) + (z.exact ? "" : "*"),
                        std::to_string(d.order() - z.z)});
    }
    if (config.format == OutputFormat::Json) emit_json(arr);
    else std::cout << render_table({"graph", "n", "Z", "mz"}, rows, config.format);
    return Ok;
}

int cmd_mrcr(const Options& o)
{
    const auto config = make_config(o, {"z"});
    const auto graphs = load_inputs(o);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    bool undecided = false;
    for (const auto& g : graphs) {
        json j{{"graph", graph_id(g)}};
        std::vector<std::string> row{graph_id(g)};
        for (const auto& d : config.domains) {
            MrcrOptions options;
            options.box = config.ideals.box;
            options.max_points = config.ideals.max_box_points;
            options.gamma_config = config.ideals;
            const auto m = mrcr_bounds(as_digraph(g), d, options);
            undecided = undecided || !m.value();
            j["mrcr"][d.name()] = to_json(m);
            row.push_back(interval(m.lower, m.upper));
        }
        arr.push_back(j);
        rows.push_back(row);
    }
    if (config.format == OutputFormat::Json) {
        emit_json(arr);
    } else {
        std::vector<std::string> header{"graph"};
        for (const auto& d : config.domains) header.push_back("mrcr_" + d.name());
        std::cout << render_table(header, rows, config.format);
    }
    return undecided && config.strict ? Undecided : Ok;
}

int cmd_trees(const Options& o)
{
    const auto config = make_config(o, {"z"});
    const auto graphs = load_inputs(o);
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    int status = Ok;
    for (const auto& any : graphs) {
        if (!std::holds_alternative<Graph>(any)) throw ParseFailure{"trees expects undirected input", 0};
        const auto& t = std::get<Graph>(any);
        try {
            const auto p = tree_suite(t);
            json j = to_json(p);
            j["graph"] = graph_id(any);
            arr.push_back(j);
            rows.push_back({graph_id(any), std::to_string(p.n), std::to_string(p.mz), std::to_string(p.P.count),
                            std::to_string(p.Delta.value), std::to_string(p.nu2.count)});
        } catch (const TheoremViolation& e) {
            arr.push_back({{"graph", graph_id(any)}, {"violation", e.what()}});
            status = Failure;
        } catch (const NotATree& e) {
            arr.push_back({{"graph", graph_id(any)}, {"error", e.what()}});
            status = Failure;
        }
    }
    if (config.format == OutputFormat::Json) emit_json(arr);
    else std::cout << render_table({"graph", "n", "mz", "P", "Delta", "nu2"}, rows, config.format);
    return status;
}

int cmd_classify(const Options& o)
{
    const auto config = make_config(o, {"z"});
    const auto graphs = load_inputs(o);
    json arr = json::array();
    int status = Ok;
    for (const auto& any : graphs) {
        EquivalenceReport r;
        if (std::holds_alternative<Graph>(any)) r = classify_rank1_graph(std::get<Graph>(any), config.ideals);
        else r = classify_digraph1(std::get<Digraph>(any), config.ideals);
        json j = to_json(r);
        j["graph"] = graph_id(any);
        arr.push_back(j);
        if (!r.agreement) status = Failure;
    }
    emit_json(arr);
    return status;
}

std::vector<std::string> read_basis_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseFailure{"cannot open " + path, 0};
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream parts(line);
        std::string item;
        while (std::getline(parts, item, ',')) {
            const auto b = item.find_first_not_of(" \t\r");
            if (b == std::string::npos || item[b] == '#') continue;
            out.push_back(item.substr(b, item.find_last_not_of(" \t\r") - b + 1));
        }
    }
    return out;
}

int cmd_gb(const Options& o)
{
    const auto config = make_config(o, {"q"});
    const auto graphs = load_inputs(o);
    const Domain domain = config.domains.front();
    const auto order = parse_monomial_order(o.order);
    json arr = json::array();
    int status = Ok;
    for (const auto& any : graphs) {
        const Digraph d = as_digraph(any);
        const std::size_t i = o.index ? o.index : mz(d);
        auto b = groebner_basis_of_critical_ideal(d, i, domain, order, config.ideals.budget);
        json j = to_json(b);
        j["graph"] = graph_id(any);
        if (b.decision == Decision::Undecided && config.strict && status == Ok) status = Undecided;
        if (!o.compare.empty()) {
            const auto others = read_basis_file(o.compare);
            const auto eq = critical_ideal_equals(d, i, domain, others, config.ideals.budget);
            j["compare"] = {{"basis", others}, {"equal", eq ? json(*eq) : json(nullptr)}};
            if (eq && !*eq) status = Failure;
            else if (!eq && config.strict && status == Ok) status = Undecided;
        }
        arr.push_back(j);
    }
    if (config.format == OutputFormat::Json) {
        emit_json(arr);
    } else {
        for (const auto& j : arr) {
            std::cout << "# " << j["graph"].get<std::string>() << " I_" << j["i"].get<std::size_t>() << " over "
                      << j["domain"].get<std::string>() << ": " << j["decision"].get<std::string>() << '\n';
            for (const auto& s : j["basis"]) std::cout << s.get<std::string>() << '\n';
        }
    }
    return status;
}

int cmd_sweep(const Options& o)
{
    const auto config = make_config(o, {"z"});
    auto cache = open_cache(config);
    SweepOptions s;
    s.config = config.ideals;
    s.cache = cache.get();
    s.jobs = config.jobs;
    std::vector<std::string> names;
    if (o.theorem == "all") names = sweep_names();
    else names.push_back(o.theorem);
    json arr = json::array();
    bool passed = true;
    for (const auto& n : names) {
        const auto r = run_sweep(n, s);
        passed = passed && r.passed;
        arr.push_back(r.to_json());
    }
    if (config.format == OutputFormat::Json) {
        emit_json(arr);
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : arr)
            rows.push_back({r["sweep"].get<std::string>(), r["passed"].get<bool>() ? "pass" : "FAIL",
                            std::to_string(r["checked"].get<std::size_t>()), std::to_string(r["failures"].size())});
        std::cout << render_table({"sweep", "status", "checked", "failures"}, rows, config.format);
    }
    return passed ? Ok : Failure;
}

int cmd_appendix(const Options& o)
{
    const auto config = make_config(o, {"z", "q"});
    auto cache = open_cache(config);
    const auto run = reproduce_appendix(config.ideals, cache.get(), config.jobs);
    if (config.format == OutputFormat::Json) {
        json rows = json::array();
        for (const auto& r : run.rows)
            rows.push_back({{"graph", r.graph6}, {"n", r.n}, {"mz", r.mz}, {"gamma_Z", r.gamma_z}, {"gamma_R", r.gamma_r}});
        emit_json({{"graphs", run.graphs},
                   {"rows", rows},
                   {"diff", run.diffs},
                   {"undecided", run.undecided},
                   {"groebner_runs", run.groebner_runs},
                   {"matches", run.matches()}});
    } else {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : run.rows)
            rows.push_back({r.graph6, std::to_string(r.n), std::to_string(r.mz), std::to_string(r.gamma_z),
                            std::to_string(r.gamma_r)});
        std::cout << render_table({"graph", "n", "mz", "gamma_Z", "gamma_R"}, rows, config.format);
        for (const auto& d : run.diffs) std::cerr << "diff: " << d << '\n';
    }
    if (!run.diffs.empty()) return Failure;
    if (!run.undecided.empty()) return config.strict ? Undecided : Failure;
    return Ok;
}

void add_common(CLI::App* app, Options& o, bool with_input)
{
    if (with_input) {
        app->add_option("--input", o.input, "Input file, or - for stdin (graph6, digraph6, edge or arc lists)");
        app->add_option("--graph", o.graph, "Inline graph6 or digraph6 string");
    }
    app->add_option("--domain", o.domains, "z, q or fp:P (repeatable)");
    app->add_option("--box", o.box, "Box radius K for point searches over {-K..K}^n")->check(CLI::NonNegativeNumber);
    app->add_option("--format", o.format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
    app->add_option("--cache", o.cache, "Directory for the persistent decision cache");
    app->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app->add_option("--budget-spairs", o.spairs, "S-pair cap per Groebner run")->check(CLI::PositiveNumber);
    app->add_option("--budget-degree", o.degree, "Degree cap per Groebner run")->check(CLI::PositiveNumber);
    app->add_flag("--strict", o.strict, "Exit with status 3 when a value stays undecided");
    app->add_flag("--timings", o.timings, "Include wall-clock timings in reports");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Algebraic co-rank, zero forcing and minimum rank of graphs and digraphs"};
    app.require_subcommand(1);
    Options o;

    auto* params = app.add_subcommand("params", "Parameter report per input graph");
    auto* gamma_cmd = app.add_subcommand("gamma", "Algebraic co-rank with per-index provenance");
    auto* zf = app.add_subcommand("zf", "Zero forcing number, chronological list and certificate minor");
    auto* mrcr = app.add_subcommand("mrcr", "Critical minimum rank bounds");
    auto* trees = app.add_subcommand("trees", "Tree parameter suite");
    auto* classify = app.add_subcommand("classify", "Rank-1 classification conditions");
    auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of a critical ideal");
    auto* sweep = app.add_subcommand("sweep", "Run a theorem sweep");
    auto* appendix = app.add_subcommand("reproduce-appendix", "Reproduce the small-graph table");

    for (auto* c : {params, gamma_cmd, zf, mrcr, trees, classify, gb}) add_common(c, o, true);
    for (auto* c : {sweep, appendix}) add_common(c, o, false);
    gb->add_option("-i,--index", o.index, "Minor order i (default mz)");
    gb->add_option("--order", o.order, "degrevlex, lex or grlex");
    gb->add_option("--compare", o.compare, "File of generators to test for ideal equality");
    std::vector<std::string> choices = sweep_names();
    choices.push_back("all");
    sweep->add_option("theorem", o.theorem, "Sweep name")->required()->check(CLI::IsMember(choices));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : ParseError;
    }

    try {
        if (*params) return cmd_params(o);
        if (*gamma_cmd) return cmd_gamma(o);
        if (*zf) return cmd_zf(o);
        if (*mrcr) return cmd_mrcr(o);
        if (*trees) return cmd_trees(o);
        if (*classify) return cmd_classify(o);
        if (*gb) return cmd_gb(o);
        if (*sweep) return cmd_sweep(o);
        if (*appendix) return cmd_appendix(o);
    } catch (const ParseFailure& e) {
        std::cerr << json{{"error", e.message}, {"line", e.line}}.dump() << '\n';
        return ParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return ParseError;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return Failure;
    }
    return Ok;
}
