#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

class NotATree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by tree_suite when one of the tree equalities fails.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct PathCover {
    std::size_t count = 0;
    /// Each path listed from one end to the other.
    std::vector<std::vector<Vertex>> paths;
};

struct DeltaWitness {
    std::size_t value = 0;
    std::vector<Vertex> deleted;
    /// Number of path components left after deleting `deleted`.
    std::size_t paths = 0;
};

struct TwoMatching {
    std::size_t count = 0;
    std::vector<Edge> edges;
};

/// Minimum cover by vertex-disjoint induced paths, built from the components
/// of a maximum 2-matching.
PathCover path_cover_number(const Graph& tree);

/// max p - q over deletions of q vertices leaving p disjoint paths.
DeltaWitness delta_parameter(const Graph& tree);

/// Maximum edge set with every vertex on at most two chosen edges. Linear
/// dynamic programming on forests; exhaustive search otherwise (at most 20
/// edges).
TwoMatching two_matching_number(const Graph& g);

inline constexpr std::size_t kMaxExhaustiveTwoMatchingEdges = 20;

bool is_path_cover(const Graph& g, const std::vector<std::vector<Vertex>>& paths);
bool is_two_matching(const Graph& g, const std::vector<Edge>& edges);
/// Components of g minus `deleted` when all of them are paths.
std::optional<std::size_t> path_components_after_deletion(const Graph& g, const std::vector<Vertex>& deleted);

struct TreeParams {
    std::size_t n = 0;
    std::size_t mz = 0;
    std::size_t gamma_z = 0;
    std::size_t gamma_q = 0;
    /// Maximum nullity n - mr.
    std::size_t M = 0;
    std::size_t mr = 0;
    PathCover P;
    DeltaWitness Delta;
    TwoMatching nu2;
    /// d in {-1, 0}^n with rank L(T, d) = mz.
    std::vector<std::int64_t> diagonal;
    std::size_t diagonal_rank = 0;
};

inline constexpr std::size_t kMaxTreeSuiteOrder = 12;

/// Every tree parameter, with the equalities
/// mz = gamma_Z = gamma_Q = mr = n - P = n - Delta = nu2 checked; throws
/// TheoremViolation on failure. Requires n <= 12.
TreeParams tree_suite(const Graph& tree);

}  // namespace corank
