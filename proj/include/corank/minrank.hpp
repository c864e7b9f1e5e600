#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "corank/critical_ideals.hpp"
#include "corank/graph.hpp"

namespace corank {

/// Largest order with mr_R(G) = mz(G) for every graph.
inline constexpr std::size_t kExactMinRankOrder = 7;

struct MinRankBounds {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool exact = false;
    std::string provenance;
    /// Diagonal attaining `upper` when it came from a box scan.
    std::optional<PointWitness> witness;

    std::optional<std::size_t> value() const { return lower == upper ? std::optional(lower) : std::nullopt; }
};

/// mr_R(G): exact (= mz) for n <= 7, otherwise [mz, min rank over the box].
MinRankBounds mr_small(const Graph& g, const IntegerBox& box = {});

struct MrcrBounds {
    Domain domain;
    std::size_t lower = 0;
    std::size_t upper = 0;
    /// First point of minimum rank in scan order.
    std::optional<PointWitness> witness;
    std::size_t scanned = 0;
    bool exhaustive = true;
    std::string lower_provenance;

    std::optional<std::size_t> value() const { return lower == upper ? std::optional(lower) : std::nullopt; }
};

struct MrcrOptions {
    IntegerBox box;
    std::size_t max_points = 5'000'000;
    /// Raise the lower bound from mz to the lower end of the gamma sandwich.
    bool use_gamma = true;
    CriticalIdealConfig gamma_config;
};

/// Bounds on min rank L(G, d) over d in R^n. Upper bounds come from the box
/// (rational rank for Z and Q, rank mod p for F_p).
MrcrBounds mrcr_bounds(const Digraph& d, const Domain& domain, const MrcrOptions& options = {});
MrcrBounds mrcr_bounds(const Graph& g, const Domain& domain, const MrcrOptions& options = {});

}  // namespace corank
