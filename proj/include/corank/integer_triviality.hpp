#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "corank/groebner.hpp"
#include "corank/polynomial.hpp"

namespace corank {

enum class Decision { Trivial, NonTrivial, Undecided };

std::string to_string(Decision d);

template <class D>
struct FieldTriviality {
    Decision decision = Decision::Undecided;
    /// Present when trivial and cofactors were requested:
    /// sum cofactors[j] * gens[j] == 1.
    std::optional<std::vector<Polynomial<D>>> cofactors;
    /// The reduced basis when non-trivial (or the partial basis on budget).
    std::vector<Polynomial<D>> basis;
    std::size_t groebner_runs = 0;
    std::string note;
};

namespace detail {

template <class D>
std::vector<std::size_t> cheap_first(const std::vector<Polynomial<D>>& gens)
{
    std::vector<std::size_t> idx(gens.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const auto da = gens[a].degree(), db = gens[b].degree();
        if (da != db) return da < db;
        return gens[a].size() < gens[b].size();
    });
    return idx;
}

}  // namespace detail

/// Decides 1 in <gens> over a field. Cofactors come from a tracked run on the
/// shortest trivial prefix of the generators ordered by (degree, size).
template <class D>
FieldTriviality<D> is_trivial_over_field(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& gens,
                                         const GroebnerBudget& budget = {}, bool want_cofactors = false)
{
    FieldTriviality<D> out;
    GroebnerOptions options;
    options.budget = budget;
    const auto order = detail::cheap_first(gens);
    std::vector<Polynomial<D>> sorted;
    for (auto i : order) sorted.push_back(gens[i]);

    auto prefix = [&](std::size_t k) { return std::vector<Polynomial<D>>(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k)); };

    auto full = buchberger(ring, sorted, options);
    ++out.groebner_runs;
    if (!full.complete()) {
        out.note = full.budget_reason;
        out.basis = std::move(full.basis.generators);
        return out;
    }
    if (!full.trivial()) {
        out.decision = Decision::NonTrivial;
        out.basis = std::move(full.basis.generators);
        return out;
    }
    out.decision = Decision::Trivial;
    out.basis = std::move(full.basis.generators);
    if (!want_cofactors) return out;

    // Smallest trivial prefix; failures on the way are treated as non-trivial.
    std::size_t lo = 1, hi = sorted.size();
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        auto r = buchberger(ring, prefix(mid), options);
        ++out.groebner_runs;
        if (r.trivial()) hi = mid;
        else lo = mid + 1;
    }
    GroebnerOptions tracked = options;
    tracked.track_cofactors = true;
    const auto gens_k = prefix(hi);
    auto r = buchberger(ring, gens_k, tracked);
    ++out.groebner_runs;
    if (!r.trivial() || !r.basis.cofactors) {
        out.note = "cofactor run did not reproduce triviality";
        return out;
    }
    std::vector<Polynomial<D>> cof(gens.size());
    for (std::size_t j = 0; j < hi; ++j) cof[order[j]] = (*r.basis.cofactors)[0][j];
    out.cofactors = std::move(cof);
    return out;
}

enum class IntegerCertificateKind { None, Combination, PrimeWise };

/// Decision of 1 in <gens> inside Z[x_0..x_{n-1}].
struct IntegerTriviality {
    Decision decision = Decision::Undecided;
    /// Positive integer D with an integer combination of gens equal to D
    /// (0 when none was found).
    mpz_class constant = 0;
    std::vector<mpz_class> primes_tested;

    IntegerCertificateKind certificate = IntegerCertificateKind::None;
    /// Combination: sum cofactors[j] * gens[j] == 1 over Z.
    std::vector<Polynomial<IntegerRing>> cofactors;
    bool certificate_verified = false;

    /// Non-trivial over Q when absent; otherwise the prime whose reduction is
    /// non-trivial.
    std::optional<std::uint64_t> failing_prime;
    std::vector<std::string> basis;

    std::size_t groebner_runs = 0;
    std::string note;
};

struct IntegerTrivialityOptions {
    GroebnerBudget budget;
    /// Above this many cofactor terms the certificate stays prime-wise.
    std::size_t max_certificate_terms = 2'000'000;
    bool build_certificate = true;
};

IntegerTriviality is_trivial_over_Z(std::size_t variables, const std::vector<Polynomial<IntegerRing>>& gens,
                                    const IntegerTrivialityOptions& options = {});

/// Prime factors (ascending, with multiplicity) of |n|; nullopt when a factor
/// could not be split within the budget.
std::optional<std::vector<mpz_class>> factor_integer(const mpz_class& n);

/// sum cofactors[j] * gens[j] over Z.
Polynomial<IntegerRing> combine(const PolynomialRing<IntegerRing>& ring, const std::vector<Polynomial<IntegerRing>>& gens,
                                const std::vector<Polynomial<IntegerRing>>& cofactors);

}  // namespace corank
