#pragma once

#include <optional>
#include <vector>

#include "corank/graph.hpp"

namespace corank {

/// Injective map pattern-vertex -> host-vertex realizing `pattern` as an
/// induced sub(di)graph of `host`, or nullopt. Backtracking; host order <= 64.
std::optional<std::vector<Vertex>> contains_induced(const Graph& host, const Graph& pattern);
std::optional<std::vector<Vertex>> contains_induced(const Digraph& host, const Digraph& pattern);

}  // namespace corank
