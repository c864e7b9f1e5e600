#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "corank/critical_ideals.hpp"

namespace corank {

struct SweepOptions {
    CriticalIdealConfig config;
    DecisionCache* cache = nullptr;
    std::size_t jobs = 1;
    std::uint64_t seed = 20240601;
};

struct SweepResult {
    std::string name;
    bool passed = true;
    std::size_t checked = 0;
    /// One object per counterexample.
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json summary = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// thm2.1, lemma-monotone, thm-trees, prop-cycles, prop-petersen,
/// prop-linegraphs, thm-rank1, thm-digraph1, three-exceptional.
const std::vector<std::string>& sweep_names();

/// Throws std::invalid_argument for an unknown name.
SweepResult run_sweep(const std::string& name, const SweepOptions& options = {});

/// Position order of the box scan: max-norm first, then lexicographic.
bool scan_order_less(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// Numerical rank by partial pivoting with absolute tolerance.
std::size_t numeric_rank(std::vector<double> m, std::size_t n, double tolerance = 1e-9);

}  // namespace corank
