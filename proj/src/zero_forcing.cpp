#include "corank/zero_forcing.hpp"

#include <algorithm>
#include <bit>

namespace corank {

namespace {

using Mask = std::uint64_t;

Mask to_mask(std::size_t n, std::span<const Vertex> set)
{
    Mask m = 0;
    for (Vertex v : set) {
        if (v >= n) throw std::invalid_argument("vertex outside the graph");
        m |= Mask{1} << v;
    }
    return m;
}

std::vector<Vertex> to_list(Mask m)
{
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Returns the final blue mask; appends forces when `forces` is non-null.
Mask run_closure(const std::vector<Mask>& out, Mask blue, std::vector<Force>* forces)
{
    const std::size_t n = out.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex x = 0; x < n; ++x) {
            if (!((blue >> x) & 1)) continue;
            const Mask white = out[x] & ~blue;
            if (white && !(white & (white - 1))) {
                const auto y = static_cast<Vertex>(std::countr_zero(white));
                blue |= white;
                if (forces) forces->push_back({x, y});
                changed = true;
                break;  // restart so the smallest legal pair always fires next
            }
        }
    }
    return blue;
}

ZeroForcingResult greedy_bound(const std::vector<Mask>& out)
{
    const std::size_t n = out.size();
    Mask chosen = 0;
    Mask blue = run_closure(out, 0, nullptr);
    while (blue != full_mask(n)) {
        Vertex best = 0;
        int best_count = -1;
        for (Vertex v = 0; v < n; ++v) {
            if ((blue >> v) & 1) continue;
            const int count = std::popcount(run_closure(out, blue | (Mask{1} << v), nullptr));
            if (count > best_count) {
                best_count = count;
                best = v;
            }
        }
        chosen |= Mask{1} << best;
        blue = run_closure(out, chosen, nullptr);
    }
    ZeroForcingResult result;
    result.exact = false;
    result.witness.initial_set = to_list(chosen);
    run_closure(out, chosen, &result.witness.forces);
    result.z = result.witness.initial_set.size();
    return result;
}

// Visits k-subsets of {0..n-1} in lexicographic order of sorted lists.
template <class Visit>
bool for_each_subset(std::size_t n, std::size_t k, Visit&& visit)
{
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
    while (true) {
        if (visit(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

ColorState closure(const Digraph& d, std::span<const Vertex> initial)
{
    ColorState state;
    const Mask blue = run_closure(out_masks(d), to_mask(d.order(), initial), &state.forces);
    state.blue = to_list(blue);
    return state;
}

ColorState closure(const Graph& g, std::span<const Vertex> initial)
{
    return closure(to_digraph(g), initial);
}

bool is_zero_forcing_set(const Digraph& d, std::span<const Vertex> initial)
{
    return run_closure(out_masks(d), to_mask(d.order(), initial), nullptr) == full_mask(d.order());
}

bool is_zero_forcing_set(const Graph& g, std::span<const Vertex> initial)
{
    return is_zero_forcing_set(to_digraph(g), initial);
}

ZeroForcingResult zero_forcing_number(const Digraph& d)
{
    const auto out = out_masks(d);
    const std::size_t n = d.order();
    if (n > kExactZeroForcingOrder) {
        return greedy_bound(out);
    }
    const Mask all = full_mask(n);
    for (std::size_t k = 0; k <= n; ++k) {
        ZeroForcingResult result;
        const bool found = for_each_subset(n, k, [&](const std::vector<Vertex>& set) {
            Mask start = 0;
            for (Vertex v : set) start |= Mask{1} << v;
            if (run_closure(out, start, nullptr) != all) return false;
            result.z = k;
            result.witness.initial_set = set;
            run_closure(out, start, &result.witness.forces);
            return true;
        });
        if (found) return result;
    }
    throw std::logic_error("the full vertex set is always zero forcing");
}

ZeroForcingResult zero_forcing_number(const Graph& g)
{
    return zero_forcing_number(to_digraph(g));
}

std::size_t mz(const Digraph& d) { return d.order() - zero_forcing_number(d).z; }
std::size_t mz(const Graph& g) { return mz(to_digraph(g)); }

bool is_valid_record(const Digraph& d, const ForceRecord& record)
{
    const auto out = out_masks(d);
    Mask blue = 0;
    for (Vertex v : record.initial_set) {
        if (v >= d.order() || ((blue >> v) & 1)) return false;
        blue |= Mask{1} << v;
    }
    for (const auto& f : record.forces) {
        if (f.forcer >= d.order() || f.forced >= d.order()) return false;
        if (!((blue >> f.forcer) & 1)) return false;
        const Mask white = out[f.forcer] & ~blue;
        if (white != (Mask{1} << f.forced)) return false;
        blue |= white;
    }
    return blue == full_mask(d.order());
}

int CertificateMinor::determinant() const
{
    int det = 1;
    for (std::size_t i = 0; i < size(); ++i) {
        det *= static_cast<int>((*this)(i, i).constant);
    }
    return det;
}

CertificateMinor certificate_minor(const Digraph& d, const ForceRecord& record)
{
    if (!is_valid_record(d, record)) {
        throw CertificateError("force record does not replay on this digraph");
    }
    const SymbolicMatrix laplacian(d);
    CertificateMinor minor;
    for (const auto& f : record.forces) {
        minor.rows.push_back(f.forcer);
        minor.cols.push_back(f.forced);
    }
    const std::size_t k = minor.rows.size();
    minor.entries.reserve(k * k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            minor.entries.push_back(laplacian(minor.rows[r], minor.cols[c]));
        }
    }
    for (std::size_t r = 0; r < k; ++r) {
        const auto& diag = minor(r, r);
        if (diag.is_variable || diag.constant != -1) {
            throw CertificateError("certificate minor diagonal entry " + std::to_string(r) + " is not -1");
        }
        for (std::size_t c = r + 1; c < k; ++c) {
            const auto& e = minor(r, c);
            if (e.is_variable || e.constant != 0) {
                throw CertificateError("certificate minor is not lower triangular at (" + std::to_string(r) +
                                       ", " + std::to_string(c) + ")");
            }
        }
    }
    return minor;
}

CertificateMinor certificate_minor(const Graph& g, const ForceRecord& record)
{
    return certificate_minor(to_digraph(g), record);
}

}  // namespace corank
