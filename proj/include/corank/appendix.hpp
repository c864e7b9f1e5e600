#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "corank/critical_ideals.hpp"
#include "corank/graph.hpp"

namespace corank {

struct AppendixRow {
    /// Canonical graph6.
    std::string graph6;
    std::size_t n = 0;
    std::size_t mz = 0;
    std::size_t gamma_z = 0;
    std::size_t gamma_r = 0;

    bool operator==(const AppendixRow&) const = default;
};

/// Versioned golden table: "version,1" then "edges,mz,gamma_Z,gamma_R" rows
/// with edges written "0-1 0-2 ...".
const std::string& golden_appendix_csv();

/// Golden rows in canonical order.
std::vector<AppendixRow> golden_appendix();

struct AppendixRun {
    std::size_t graphs = 0;
    /// Graphs with mz < gamma_Q, in canonical order.
    std::vector<AppendixRow> rows;
    /// Graphs whose gamma stayed undecided.
    std::vector<std::string> undecided;
    std::vector<std::string> diffs;
    std::size_t groebner_runs = 0;

    bool matches() const { return diffs.empty() && undecided.empty(); }
};

/// Computes (mz, gamma_Z, gamma_Q) over the connected graphs with n <= 6 and
/// diffs the mz < gamma_Q rows against the golden table.
AppendixRun reproduce_appendix(const CriticalIdealConfig& config = {}, DecisionCache* cache = nullptr,
                               std::size_t jobs = 1);

}  // namespace corank
