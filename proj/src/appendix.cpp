#include "corank/appendix.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "corank/canonical.hpp"
#include "corank/parallel.hpp"
#include "corank/zero_forcing.hpp"

namespace corank {

const std::string& golden_appendix_csv()
{
    static const std::string csv = R"(version,1
edges,mz,gamma_Z,gamma_R
0-1 0-2 0-3 0-4 1-2 1-3 2-3 3-4,2,3,3
0-1 0-2 0-3 0-4 1-2 1-4 2-3 2-4 2-5,3,4,4
0-1 0-2 0-4 1-2 1-3 1-4 2-3 2-4 4-5,3,4,4
0-1 0-2 0-3 0-5 1-4 2-3 3-4 4-5,3,4,4
0-1 0-2 0-3 0-4 0-5 1-4 2-3 3-4 4-5,3,4,4
0-1 0-2 0-3 1-2 1-3 1-4 2-3 3-5 4-5,3,4,4
0-1 0-2 0-3 0-4 1-2 1-3 1-4 2-3 2-4 3-4 3-5 4-5,2,3,3
0-1 0-2 0-3 0-4 1-2 1-3 1-4 2-3 3-4 3-5 4-5,3,4,4
0-1 0-2 0-3 0-4 1-2 1-4 2-3 3-4 3-5 4-5,3,4,4
0-1 0-2 0-3 1-2 1-3 1-4 1-5 2-3 3-4 3-5 4-5,2,3,3
0-1 0-2 0-3 0-4 1-3 1-4 2-3 3-5 4-5,3,4,4
0-1 0-2 0-3 0-4 1-3 1-4 2-3 3-4 3-5 4-5,3,4,4
0-1 0-2 0-4 1-2 1-3 1-4 2-3 2-5 3-5 4-5,3,4,4
0-1 0-2 0-4 1-2 1-3 1-4 2-3 2-4 2-5 3-5 4-5,3,4,4
0-1 0-2 0-4 1-2 1-3 1-4 2-3 2-4 2-5 3-4 3-5 4-5,3,4,4
0-1 0-2 0-3 0-4 0-5 1-2 1-3 1-4 2-3 2-5 3-4 3-5 4-5,2,3,3
0-1 0-2 0-3 0-5 1-2 1-3 1-4 2-3 2-4 3-5 4-5,2,3,3
0-1 0-2 0-3 0-4 0-5 1-2 1-3 1-4 2-3 2-4 3-5 4-5,2,3,3
0-1 0-2 0-3 0-4 0-5 1-2 1-3 1-4 2-3 2-4 3-4 3-5 4-5,2,3,3
0-1 0-2 0-3 1-2 1-4 1-5 2-3 3-4 3-5 4-5,2,2,3
0-1 0-2 0-4 0-5 1-2 1-3 1-4 2-3 2-5 3-4 3-5 4-5,2,2,3
)";
    return csv;
}

namespace {

Graph parse_edges(const std::string& text)
{
    std::vector<Edge> edges;
    std::istringstream in(text);
    std::string token;
    Vertex max_vertex = 0;
    while (in >> token) {
        const auto dash = token.find('-');
        if (dash == std::string::npos) throw std::runtime_error("bad golden edge: " + token);
        const auto u = static_cast<Vertex>(std::stoul(token.substr(0, dash)));
        const auto v = static_cast<Vertex>(std::stoul(token.substr(dash + 1)));
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    return Graph(max_vertex + 1, edges);
}

std::string row_text(const AppendixRow& r)
{
    return r.graph6 + " (mz " + std::to_string(r.mz) + ", gamma_Z " + std::to_string(r.gamma_z) + ", gamma_R " +
           std::to_string(r.gamma_r) + ")";
}

}  // namespace

std::vector<AppendixRow> golden_appendix()
{
    std::istringstream in(golden_appendix_csv());
    std::string line;
    std::getline(in, line);
    if (line != "version,1") throw std::runtime_error("unknown golden table version");
    std::getline(in, line);
    std::vector<AppendixRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string edges, mz_s, gz_s, gr_s;
        std::getline(fields, edges, ',');
        std::getline(fields, mz_s, ',');
        std::getline(fields, gz_s, ',');
        std::getline(fields, gr_s, ',');
        const Graph g = parse_edges(edges);
        rows.push_back({canonical_form(g).encoding, g.order(), std::stoul(mz_s), std::stoul(gz_s), std::stoul(gr_s)});
    }
    std::sort(rows.begin(), rows.end(), [](const AppendixRow& a, const AppendixRow& b) {
        return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
    });
    return rows;
}

AppendixRun reproduce_appendix(const CriticalIdealConfig& config, DecisionCache* cache, std::size_t jobs)
{
    const auto graphs = enumerate_connected_graphs(6);
    AppendixRun run;
    run.graphs = graphs.size();
    if (run.graphs != 143) run.diffs.push_back("expected 143 connected graphs, enumerated " + std::to_string(run.graphs));

    struct Computed {
        AppendixRow row;
        bool decided = true;
        std::size_t groebner_runs = 0;
    };
    std::vector<Computed> computed(graphs.size());
    parallel_for(graphs.size(), jobs, [&](std::size_t k) {
        const Graph& g = graphs[k];
        const auto gz = gamma(g, Domain::integers(), config, cache);
        const auto gq = gamma(g, Domain::rationals(), config, cache);
        auto& c = computed[k];
        c.row = {canonical_form(g).encoding, g.order(), gq.mz, gz.upper, gq.upper};
        c.decided = gz.value && gq.value;
        c.groebner_runs = gz.groebner_runs + gq.groebner_runs;
    });

    for (const auto& c : computed) {
        run.groebner_runs += c.groebner_runs;
        if (!c.decided) run.undecided.push_back(c.row.graph6);
        if (c.row.mz < c.row.gamma_r) run.rows.push_back(c.row);
    }

    std::map<std::string, AppendixRow> golden, mine;
    for (const auto& r : golden_appendix()) golden[r.graph6] = r;
    for (const auto& r : run.rows) mine[r.graph6] = r;
    for (const auto& [id, r] : golden) {
        auto it = mine.find(id);
        if (it == mine.end()) run.diffs.push_back("missing: " + row_text(r));
        else if (!(it->second == r)) run.diffs.push_back("expected " + row_text(r) + ", got " + row_text(it->second));
    }
    for (const auto& [id, r] : mine)
        if (!golden.count(id)) run.diffs.push_back("unexpected: " + row_text(r));
    return run;
}

}  // namespace corank
