#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "corank/graph.hpp"
#include "corank/laplacian.hpp"

namespace corank {

struct Force {
    Vertex forcer = 0;
    Vertex forced = 0;

    bool operator==(const Force&) const = default;
};

struct ColorState {
    std::vector<Vertex> blue;  // sorted
    std::vector<Force> forces;
};

/// A chronological list: replaying `forces` from `initial_set` turns every
/// vertex blue, and at each step `forced` is the unique white (out-)neighbor
/// of the blue `forcer`.
struct ForceRecord {
    std::vector<Vertex> initial_set;
    std::vector<Force> forces;
};

/// Exhaustive color change. When several forces are legal the smallest
/// (forcer, forced) pair fires first. Graphs use the neighbor rule, digraphs
/// the out-neighbor rule.
ColorState closure(const Digraph& d, std::span<const Vertex> initial);
ColorState closure(const Graph& g, std::span<const Vertex> initial);

bool is_zero_forcing_set(const Digraph& d, std::span<const Vertex> initial);
bool is_zero_forcing_set(const Graph& g, std::span<const Vertex> initial);

inline constexpr std::size_t kExactZeroForcingOrder = 12;

struct ZeroForcingResult {
    std::size_t z = 0;
    ForceRecord witness;
    /// False for the greedy upper bound used above kExactZeroForcingOrder.
    bool exact = true;
};

/// Exact tier (n <= 12): the lexicographically least minimum zero forcing
/// set, found by subset search in ascending cardinality.
ZeroForcingResult zero_forcing_number(const Digraph& d);
ZeroForcingResult zero_forcing_number(const Graph& g);

std::size_t mz(const Digraph& d);
std::size_t mz(const Graph& g);

/// Replays the record; true iff every force is legal and all vertices end blue.
bool is_valid_record(const Digraph& d, const ForceRecord& record);

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Submatrix of L(D, X_D) on rows a_1..a_k and columns b_1..b_k of a
/// chronological list.
struct CertificateMinor {
    std::vector<Vertex> rows;
    std::vector<Vertex> cols;
    std::vector<LaplacianEntry> entries;  // row-major k x k

    std::size_t size() const { return rows.size(); }
    const LaplacianEntry& operator()(std::size_t r, std::size_t c) const { return entries[r * rows.size() + c]; }
    /// Product of the diagonal; the matrix is lower triangular.
    int determinant() const;
};

/// Throws CertificateError if the record does not replay, or if the minor is
/// not lower triangular with constant -1 diagonal (diagonal variables may only
/// occur strictly below the diagonal).
CertificateMinor certificate_minor(const Digraph& d, const ForceRecord& record);
CertificateMinor certificate_minor(const Graph& g, const ForceRecord& record);

}  // namespace corank
