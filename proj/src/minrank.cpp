#include "corank/minrank.hpp"

#include "corank/zero_forcing.hpp"

namespace corank {

MinRankBounds mr_small(const Graph& g, const IntegerBox& box)
{
    MinRankBounds out;
    const auto zf = zero_forcing_number(g);
    out.lower = g.order() - zf.z;
    if (g.order() <= kExactMinRankOrder) {
        out.upper = out.lower;
        out.exact = true;
        out.provenance = "mr = mz for graphs on at most 7 vertices";
        return out;
    }
    const auto scan = min_rank_scan(to_digraph(g), box, 0, out.lower, 5'000'000);
    out.upper = scan.best ? scan.best->rank : g.order();
    out.witness = scan.best;
    out.exact = out.lower == out.upper;
    out.provenance = zf.exact ? "lower: mz; upper: box scan" : "lower: greedy zero forcing bound; upper: box scan";
    return out;
}

MrcrBounds mrcr_bounds(const Digraph& d, const Domain& domain, const MrcrOptions& options)
{
    MrcrBounds out;
    out.domain = domain;
    const auto zf = zero_forcing_number(d);
    out.lower = d.order() - zf.z;
    out.lower_provenance = zf.exact ? "mz" : "greedy zero forcing bound";
    if (options.use_gamma) {
        const auto g = gamma(d, domain, options.gamma_config);
        if (g.lower > out.lower) {
            out.lower = g.lower;
            out.lower_provenance = "gamma";
        }
    }
    const std::uint64_t prime = domain.kind == DomainKind::PrimeField ? domain.p : 0;
    auto scan = min_rank_scan(d, options.box, prime, out.lower, options.max_points);
    out.scanned = scan.scanned;
    out.exhaustive = scan.exhaustive;
    out.witness = scan.best;
    out.upper = scan.best ? scan.best->rank : d.order();
    return out;
}

MrcrBounds mrcr_bounds(const Graph& g, const Domain& domain, const MrcrOptions& options)
{
    return mrcr_bounds(to_digraph(g), domain, options);
}

}  // namespace corank
