#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

/// One entry of a generalized Laplacian: either the diagonal variable x_u or
/// an integer constant (-m_uv off the diagonal).
struct LaplacianEntry {
    bool is_variable = false;
    Vertex variable = 0;
    std::int64_t constant = 0;

    bool operator==(const LaplacianEntry&) const = default;
};

/// L(G, X_G): x_u on the diagonal, -(number of arcs u->v) at (u, v).
class SymbolicMatrix {
public:
    SymbolicMatrix() = default;
    explicit SymbolicMatrix(const Digraph& d);
    explicit SymbolicMatrix(const Graph& g);

    std::size_t order() const { return n_; }
    const LaplacianEntry& operator()(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

    /// L(G, a) for an integer point a.
    std::vector<std::int64_t> evaluate(std::span<const std::int64_t> point) const;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<LaplacianEntry> entries_;
};

}  // namespace corank
