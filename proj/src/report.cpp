#include "corank/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "corank/canonical.hpp"
#include "corank/parallel.hpp"

namespace corank {

OutputFormat parse_output_format(const std::string& text)
{
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "md") return OutputFormat::Markdown;
    throw std::invalid_argument("unknown format: " + text);
}

void validate(const RunConfig& config)
{
    const auto& c = config.ideals;
    if (c.box.lo > c.box.hi || config.tree_box.lo > config.tree_box.hi) throw std::invalid_argument("empty box");
    if (c.budget.max_spairs == 0 || c.budget.max_degree == 0) throw std::invalid_argument("budgets must be positive");
    if (c.max_box_points == 0 || c.max_mod_p_points == 0 || c.max_minor_count == 0)
        throw std::invalid_argument("point and minor budgets must be positive");
    if (config.jobs == 0) throw std::invalid_argument("jobs must be positive");
    if (config.domains.empty()) throw std::invalid_argument("no domain selected");
}

std::string graph_id(const AnyGraph& g)
{
    return std::visit([](const auto& x) { return canonical_form(x).encoding; }, g);
}

bool ParameterReport::undecided() const
{
    for (const auto& d : domains)
        if (!d.gamma.value || !d.mrcr.value()) return true;
    return mr && !mr->exact;
}

ParameterReport parameter_report(const AnyGraph& any, const RunConfig& config, DecisionCache* cache)
{
    const auto start = std::chrono::steady_clock::now();
    ParameterReport r;
    r.graph_id = graph_id(any);
    r.directed = std::holds_alternative<Digraph>(any);
    const Digraph d = r.directed ? std::get<Digraph>(any) : to_digraph(std::get<Graph>(any));
    r.n = d.order();
    r.edges = r.directed ? d.size() : std::get<Graph>(any).size();
    r.zero_forcing = zero_forcing_number(d);
    r.mz = r.n - r.zero_forcing.z;
    if (r.directed) {
        r.connected = is_weakly_connected(d);
        r.complete = d.size() == r.n * (r.n - (r.n > 0 ? 1 : 0));
        r.lambda = is_lambda(d);
    } else {
        const auto& g = std::get<Graph>(any);
        r.connected = is_connected(g);
        r.tree = is_tree(g);
        r.complete = g.size() == r.n * (r.n - (r.n > 0 ? 1 : 0)) / 2;
        r.mr = mr_small(g, config.ideals.box);
    }
    for (const auto& domain : config.domains) {
        DomainReport dr;
        dr.gamma = gamma(d, domain, config.ideals, cache);
        MrcrOptions options;
        options.box = r.tree ? config.tree_box : config.ideals.box;
        options.max_points = config.ideals.max_box_points;
        options.use_gamma = false;
        dr.mrcr = mrcr_bounds(d, domain, options);
        if (dr.gamma.lower > dr.mrcr.lower) {
            dr.mrcr.lower = dr.gamma.lower;
            dr.mrcr.lower_provenance = "gamma";
        }
        r.domains.push_back(std::move(dr));
    }
    if (config.timings)
        r.milliseconds = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<ParameterReport> parameter_reports(const std::vector<AnyGraph>& graphs, const RunConfig& config,
                                               DecisionCache* cache)
{
    std::vector<ParameterReport> out(graphs.size());
    parallel_for(graphs.size(), config.jobs, [&](std::size_t i) { out[i] = parameter_report(graphs[i], config, cache); });
    return out;
}

std::string interval(std::size_t lower, std::size_t upper)
{
    if (lower == upper) return std::to_string(lower);
    return "[" + std::to_string(lower) + "," + std::to_string(upper) + "]";
}

nlohmann::json to_json(const RunConfig& config)
{
    nlohmann::json j;
    j["box"] = {config.ideals.box.lo, config.ideals.box.hi};
    j["tree_box"] = {config.tree_box.lo, config.tree_box.hi};
    j["primes"] = config.ideals.primes;
    j["budget_spairs"] = config.ideals.budget.max_spairs;
    j["budget_degree"] = config.ideals.budget.max_degree;
    j["max_box_points"] = config.ideals.max_box_points;
    j["max_mod_p_points"] = config.ideals.max_mod_p_points;
    j["max_minor_count"] = config.ideals.max_minor_count;
    j["exact_zero_forcing_order"] = kExactZeroForcingOrder;
    j["exact_min_rank_order"] = kExactMinRankOrder;
    std::vector<std::string> domains;
    for (const auto& d : config.domains) domains.push_back(d.name());
    j["domains"] = domains;
    return j;
}

nlohmann::json to_json(const PointWitness& w)
{
    return {{"point", w.point}, {"field", w.prime ? "F_" + std::to_string(w.prime) : "Q"}, {"rank", w.rank}};
}

nlohmann::json to_json(const ZeroForcingResult& z)
{
    nlohmann::json forces = nlohmann::json::array();
    for (const auto& f : z.witness.forces) forces.push_back({f.forcer, f.forced});
    return {{"Z", z.z}, {"exact", z.exact}, {"set", z.witness.initial_set}, {"forces", forces}};
}

nlohmann::json to_json(const GammaResult& g)
{
    nlohmann::json j;
    j["domain"] = g.domain.name();
    j["value"] = g.value ? nlohmann::json(*g.value) : nlohmann::json(nullptr);
    j["lower"] = g.lower;
    j["upper"] = g.upper;
    j["mz"] = g.mz;
    nlohmann::json prov = nlohmann::json::array();
    for (const auto& p : g.provenance)
        prov.push_back({{"i", p.i}, {"decision", to_string(p.decision)}, {"method", to_string(p.method)}});
    j["provenance"] = prov;
    if (g.constant_minor) j["constant_minor"] = {{"rows", g.constant_minor->row_list()}, {"cols", g.constant_minor->col_list()}};
    if (g.upper_point) j["upper_point"] = to_json(*g.upper_point);
    j["groebner_runs"] = g.groebner_runs;
    if (!g.note.empty()) j["note"] = g.note;
    return j;
}

nlohmann::json to_json(const MrcrBounds& m)
{
    nlohmann::json j;
    j["domain"] = m.domain.name();
    j["value"] = m.value() ? nlohmann::json(*m.value()) : nlohmann::json(nullptr);
    j["lower"] = m.lower;
    j["upper"] = m.upper;
    j["lower_provenance"] = m.lower_provenance;
    if (m.witness) j["witness"] = to_json(*m.witness);
    j["scanned"] = m.scanned;
    j["exhaustive"] = m.exhaustive;
    return j;
}

nlohmann::json to_json(const MinRankBounds& m)
{
    nlohmann::json j{{"lower", m.lower}, {"upper", m.upper}, {"exact", m.exact}, {"provenance", m.provenance}};
    if (m.witness) j["witness"] = to_json(*m.witness);
    return j;
}

nlohmann::json to_json(const TreeParams& t)
{
    nlohmann::json j;
    j["n"] = t.n;
    j["mz"] = t.mz;
    j["gamma_Z"] = t.gamma_z;
    j["gamma_Q"] = t.gamma_q;
    j["mr"] = t.mr;
    j["M"] = t.M;
    j["P"] = {{"value", t.P.count}, {"paths", t.P.paths}};
    j["Delta"] = {{"value", t.Delta.value}, {"deleted", t.Delta.deleted}, {"paths", t.Delta.paths}};
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : t.nu2.edges) edges.push_back({u, v});
    j["nu2"] = {{"value", t.nu2.count}, {"edges", edges}};
    j["diagonal"] = t.diagonal;
    j["diagonal_rank"] = t.diagonal_rank;
    return j;
}

nlohmann::json to_json(const EquivalenceReport& r)
{
    nlohmann::json j;
    j["n"] = r.n;
    j["structural"] = r.structural;
    j["pattern_free"] = r.pattern_free;
    j["mr_le_1"] = r.mr_le_1;
    j["mz_le_1"] = r.mz_le_1;
    j["gamma_Z_le_1"] = r.gamma_z_le_1;
    j["gamma_Q_le_1"] = r.gamma_q_le_1;
    j["mz"] = r.mz;
    j["gamma_Z"] = r.gamma_z ? nlohmann::json(*r.gamma_z) : nlohmann::json(nullptr);
    j["gamma_Q"] = r.gamma_q ? nlohmann::json(*r.gamma_q) : nlohmann::json(nullptr);
    if (r.forbidden) j["forbidden"] = {{"pattern", r.forbidden->name}, {"embedding", r.forbidden->embedding}};
    if (r.lambda) j["lambda"] = {r.lambda->n1, r.lambda->n2, r.lambda->n3};
    if (r.rank_one) {
        std::vector<std::vector<std::int64_t>> rows;
        for (std::size_t i = 0; i < r.rank_one->rows; ++i)
            rows.emplace_back(r.rank_one->data.begin() + static_cast<std::ptrdiff_t>(i * r.rank_one->cols),
                              r.rank_one->data.begin() + static_cast<std::ptrdiff_t>((i + 1) * r.rank_one->cols));
        j["rank_one_matrix"] = rows;
    }
    j["weakly_connected"] = r.weakly_connected;
    j["lambda_up_to_isolated"] = r.lambda_up_to_isolated;
    j["agreement"] = r.agreement;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

nlohmann::json to_json(const CriticalIdealBasis& b)
{
    nlohmann::json j{{"domain", b.domain.name()}, {"i", b.i}, {"decision", to_string(b.decision)}, {"basis", b.basis}};
    if (b.prime) j["prime"] = *b.prime;
    if (b.constant != 0) j["constant"] = b.constant.get_str();
    if (!b.note.empty()) j["note"] = b.note;
    return j;
}

nlohmann::json to_json(const ParameterReport& r, const RunConfig& config)
{
    nlohmann::json j;
    j["graph"] = r.graph_id;
    j["directed"] = r.directed;
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["zero_forcing"] = to_json(r.zero_forcing);
    j["mz"] = r.mz;
    nlohmann::json gamma_j, mrcr_j;
    for (const auto& d : r.domains) {
        gamma_j[d.gamma.domain.name()] = to_json(d.gamma);
        mrcr_j[d.mrcr.domain.name()] = to_json(d.mrcr);
    }
    j["gamma"] = gamma_j;
    j["mrcr"] = mrcr_j;
    if (r.mr) j["mr"] = to_json(*r.mr);
    nlohmann::json flags{{"connected", r.connected}, {"complete", r.complete}};
    if (!r.directed) flags["tree"] = r.tree;
    if (r.directed) flags["lambda"] = r.lambda ? nlohmann::json{r.lambda->n1, r.lambda->n2, r.lambda->n3} : nlohmann::json(nullptr);
    j["flags"] = flags;
    if (r.milliseconds) j["milliseconds"] = *r.milliseconds;
    j["config"] = to_json(config);
    return j;
}

namespace {

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                         OutputFormat format)
{
    std::ostringstream out;
    if (format == OutputFormat::Csv) {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_cell(cells[i]);
            out << '\n';
        };
        line(header);
        for (const auto& r : rows) line(r);
        return out.str();
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        out << '|';
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string c = i < cells.size() ? cells[i] : "";
            out << ' ' << c << std::string(width[i] - c.size(), ' ') << " |";
        }
        out << '\n';
    };
    line(header);
    out << '|';
    for (auto w : width) out << std::string(w + 2, '-') << '|';
    out << '\n';
    for (const auto& r : rows) line(r);
    return out.str();
}

std::string render_reports(const std::vector<ParameterReport>& reports, const RunConfig& config)
{
    if (config.format == OutputFormat::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r, config));
        return arr.dump(2) + "\n";
    }
    std::vector<std::string> header{"graph", "n", "edges", "Z", "mz", "mr"};
    for (const auto& d : config.domains) header.push_back("gamma_" + d.name());
    for (const auto& d : config.domains) header.push_back("mrcr_" + d.name());
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : reports) {
        std::vector<std::string> row{r.graph_id, std::to_string(r.n), std::to_string(r.edges),
                                     std::to_string(r.zero_forcing.z) + (r.zero_forcing.exact ? "" : "*"),
                                     std::to_string(r.mz), r.mr ? interval(r.mr->lower, r.mr->upper) : "-"};
        for (const auto& d : r.domains) row.push_back(interval(d.gamma.lower, d.gamma.upper));
        for (const auto& d : r.domains) row.push_back(interval(d.mrcr.lower, d.mrcr.upper));
        rows.push_back(std::move(row));
    }
    return render_table(header, rows, config.format);
}

}  // namespace corank
