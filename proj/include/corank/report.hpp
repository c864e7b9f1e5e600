#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "corank/classify.hpp"
#include "corank/critical_ideals.hpp"
#include "corank/graph_io.hpp"
#include "corank/minrank.hpp"
#include "corank/trees.hpp"
#include "corank/zero_forcing.hpp"

namespace corank {

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_output_format(const std::string& text);

struct RunConfig {
    CriticalIdealConfig ideals;
    IntegerBox tree_box{-1, 0};
    std::vector<Domain> domains{Domain::integers(), Domain::rationals()};
    OutputFormat format = OutputFormat::Json;
    std::optional<std::filesystem::path> cache;
    std::size_t jobs = 1;
    bool strict = false;
    /// Wall-clock timings make reports non-reproducible, so they are opt-in.
    bool timings = false;
};

/// Throws std::invalid_argument on a non-positive budget or an empty box.
void validate(const RunConfig& config);

struct DomainReport {
    GammaResult gamma;
    MrcrBounds mrcr;
};

struct ParameterReport {
    std::string graph_id;
    bool directed = false;
    std::size_t n = 0;
    std::size_t edges = 0;
    ZeroForcingResult zero_forcing;
    std::size_t mz = 0;
    std::vector<DomainReport> domains;
    /// Graphs only.
    std::optional<MinRankBounds> mr;

    bool connected = false;
    bool tree = false;
    bool complete = false;
    std::optional<LambdaPartition> lambda;

    std::optional<double> milliseconds;

    /// Some gamma or mrcr interval stayed open.
    bool undecided() const;
};

ParameterReport parameter_report(const AnyGraph& g, const RunConfig& config, DecisionCache* cache = nullptr);

/// Reports in input order; graphs are processed on config.jobs threads.
std::vector<ParameterReport> parameter_reports(const std::vector<AnyGraph>& graphs, const RunConfig& config,
                                               DecisionCache* cache = nullptr);

nlohmann::json to_json(const RunConfig& config);
nlohmann::json to_json(const GammaResult& g);
nlohmann::json to_json(const MrcrBounds& m);
nlohmann::json to_json(const MinRankBounds& m);
nlohmann::json to_json(const ZeroForcingResult& z);
nlohmann::json to_json(const PointWitness& w);
nlohmann::json to_json(const TreeParams& t);
nlohmann::json to_json(const EquivalenceReport& r);
nlohmann::json to_json(const CriticalIdealBasis& b);
nlohmann::json to_json(const ParameterReport& r, const RunConfig& config);

/// "3" when closed, "[2,4]" otherwise.
std::string interval(std::size_t lower, std::size_t upper);

/// Renders rows of string cells as CSV or an aligned markdown table.
std::string render_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                         OutputFormat format);

std::string render_reports(const std::vector<ParameterReport>& reports, const RunConfig& config);

std::string graph_id(const AnyGraph& g);

}  // namespace corank
