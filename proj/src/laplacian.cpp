#include "corank/laplacian.hpp"

#include <sstream>
#include <stdexcept>

namespace corank {

SymbolicMatrix::SymbolicMatrix(const Digraph& d) : n_(d.order()), entries_(d.order() * d.order())
{
    for (Vertex u = 0; u < n_; ++u) {
        auto& diag = entries_[u * n_ + u];
        diag.is_variable = true;
        diag.variable = u;
    }
    for (auto [u, v] : d.arcs()) {
        entries_[u * n_ + v].constant = -1;
    }
}

SymbolicMatrix::SymbolicMatrix(const Graph& g) : SymbolicMatrix(to_digraph(g)) {}

std::vector<std::int64_t> SymbolicMatrix::evaluate(std::span<const std::int64_t> point) const
{
    if (point.size() != n_) {
        throw std::invalid_argument("evaluation point has wrong dimension");
    }
    std::vector<std::int64_t> m(n_ * n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m[i] = entries_[i].is_variable ? point[entries_[i].variable] : entries_[i].constant;
    }
    return m;
}

std::string SymbolicMatrix::to_string() const
{
    std::ostringstream out;
    for (std::size_t r = 0; r < n_; ++r) {
        out << '[';
        for (std::size_t c = 0; c < n_; ++c) {
            const auto& e = (*this)(r, c);
            if (c) out << ", ";
            if (e.is_variable) {
                out << 'x' << e.variable;
            } else {
                out << e.constant;
            }
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace corank
