#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corank/critical_ideals.hpp"
#include "corank/graph.hpp"
#include "corank/rank.hpp"
#include "corank/zero_forcing.hpp"

namespace corank {

/// Parts of a Lambda digraph: T (no arcs inside), K (complete), T'.
enum class LambdaPart : int { T = 0, K = 1, TPrime = 2 };

struct LambdaPartition {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t n3 = 0;
    /// Part of each vertex; lexicographically least among valid assignments.
    std::vector<LambdaPart> part;
};

/// Partition witnessing d ~ Lambda_{n1,n2,n3}, empty parts allowed.
std::optional<LambdaPartition> is_lambda(const Digraph& d);

/// Lambda after removing isolated vertices.
std::optional<LambdaPartition> is_lambda_up_to_isolated(const Digraph& d);

/// The rank-1 matrix with M[u][v] = 1 iff u in T or K and v in K or T'.
IntMatrix lambda_block_matrix(const LambdaPartition& p);

/// Off-diagonal support of m equals the arc set of d.
bool matches_pattern(const Digraph& d, const IntMatrix& m);
bool matches_pattern(const Graph& g, const IntMatrix& m);

/// A matrix of rank <= 1 with off-diagonal pattern d, if one exists.
std::optional<IntMatrix> rank_one_witness(const Digraph& d);
std::optional<IntMatrix> rank_one_witness(const Graph& g);

struct ForbiddenHit {
    std::string name;
    /// Pattern vertex -> host vertex.
    std::vector<Vertex> embedding;
};

struct EquivalenceReport {
    std::size_t n = 0;
    bool structural = false;  // complete graph / Lambda
    bool pattern_free = false;  // P3-free / F-free
    bool mr_le_1 = false;
    bool mz_le_1 = false;
    bool gamma_z_le_1 = false;
    bool gamma_q_le_1 = false;

    std::optional<ForbiddenHit> forbidden;
    std::optional<LambdaPartition> lambda;
    std::optional<IntMatrix> rank_one;
    ForceRecord zero_forcing;
    std::size_t mz = 0;
    std::optional<std::size_t> gamma_z;
    std::optional<std::size_t> gamma_q;

    /// Digraphs only.
    bool weakly_connected = true;
    bool lambda_up_to_isolated = false;

    bool agreement = false;
    std::string note;
};

/// Conditions of the rank-1 graph theorem for a connected graph; throws
/// std::invalid_argument when g is disconnected.
EquivalenceReport classify_rank1_graph(const Graph& g, const CriticalIdealConfig& config = {});

inline constexpr std::size_t kMaxClassifyDigraphOrder = 6;

/// Conditions of the digraph theorem (n <= 6). For weakly connected digraphs
/// agreement means all five coincide. Otherwise F-freeness is not compared and
/// Lambda is replaced by Lambda up to isolated vertices.
EquivalenceReport classify_digraph1(const Digraph& d, const CriticalIdealConfig& config = {});

struct Mr2Check {
    bool applicable = false;
    bool holds = true;
    std::size_t mr = 0;
    std::optional<std::size_t> gamma_q;
    std::string note;
};

/// If mr_R(G) <= 2 then mr_R(G) <= gamma_R(G); n <= 7.
Mr2Check check_mr2_corollary(const Graph& g, const CriticalIdealConfig& config = {});

}  // namespace corank
