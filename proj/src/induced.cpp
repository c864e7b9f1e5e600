#include "corank/induced.hpp"

namespace corank {

namespace {

struct Matcher {
    const std::vector<std::uint64_t>& host;
    const std::vector<std::uint64_t>& pattern;
    std::vector<Vertex> image;
    std::uint64_t used = 0;

    bool arc(const std::vector<std::uint64_t>& rows, Vertex u, Vertex v) const { return (rows[u] >> v) & 1; }

    bool extend(Vertex next)
    {
        if (next == pattern.size()) return true;
        for (Vertex h = 0; h < host.size(); ++h) {
            if ((used >> h) & 1) continue;
            bool ok = true;
            for (Vertex p = 0; p < next && ok; ++p) {
                ok = arc(pattern, p, next) == arc(host, image[p], h) && arc(pattern, next, p) == arc(host, h, image[p]);
            }
            if (!ok) continue;
            image[next] = h;
            used |= std::uint64_t{1} << h;
            if (extend(next + 1)) return true;
            used &= ~(std::uint64_t{1} << h);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> contains_induced(const Digraph& host, const Digraph& pattern)
{
    if (pattern.order() > host.order()) return std::nullopt;
    const auto h = out_masks(host);
    const auto p = out_masks(pattern);
    Matcher m{h, p, std::vector<Vertex>(pattern.order()), 0};
    if (m.extend(0)) return m.image;
    return std::nullopt;
}

std::optional<std::vector<Vertex>> contains_induced(const Graph& host, const Graph& pattern)
{
    return contains_induced(to_digraph(host), to_digraph(pattern));
}

}  // namespace corank
