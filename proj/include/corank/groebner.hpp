#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "corank/polynomial.hpp"

namespace corank {

struct GroebnerBudget {
    std::size_t max_spairs = 50000;
    std::uint32_t max_degree = 30;

    bool operator==(const GroebnerBudget&) const = default;
};

enum class GroebnerStatus { Complete, BudgetExceeded };

/// cofactors[k][j] is the coefficient of input generator j in basis element k.
template <class D>
struct IdealBasis {
    std::vector<Polynomial<D>> generators;
    bool groebner = false;
    std::optional<std::vector<std::vector<Polynomial<D>>>> cofactors;

    bool is_unit() const { return generators.size() == 1 && generators[0].is_constant() && !generators[0].is_zero(); }
};

template <class D>
struct GroebnerResult {
    GroebnerStatus status = GroebnerStatus::Complete;
    /// Reduced and monic when complete; the unreduced working basis otherwise.
    IdealBasis<D> basis;
    std::size_t spairs = 0;
    std::size_t zero_reductions = 0;
    std::string budget_reason;

    bool complete() const { return status == GroebnerStatus::Complete; }
    bool trivial() const { return complete() && basis.is_unit(); }
};

struct GroebnerOptions {
    GroebnerBudget budget;
    bool track_cofactors = false;
};

template <class D>
struct DivisionResult {
    std::vector<Polynomial<D>> quotients;
    Polynomial<D> remainder;
};

/// Multivariate division: f = sum quotients[j] * divisors[j] + remainder, and
/// no term of the remainder is divisible by a divisor's leading monomial. The
/// first divisor (in list order) whose leading monomial divides is used.
template <class D>
DivisionResult<D> divide(const PolynomialRing<D>& ring, const Polynomial<D>& f, std::span<const Polynomial<D>> divisors)
{
    static_assert(D::is_field, "division needs a field");
    const auto& k = ring.domain();
    DivisionResult<D> out;
    out.quotients.resize(divisors.size());
    Polynomial<D> p = f;
    std::vector<Term<D>> rem;
    while (!p.is_zero()) {
        const auto& lt = p.terms.front();
        bool reduced = false;
        for (std::size_t j = 0; j < divisors.size(); ++j) {
            const auto& g = divisors[j];
            if (g.is_zero() || !g.leading_monomial().divides(lt.monomial)) continue;
            const auto c = k.mul(lt.coefficient, k.inv(g.leading_coefficient()));
            const Monomial m = lt.monomial / g.leading_monomial();
            out.quotients[j] = ring.add(out.quotients[j], ring.term(m, c));
            p = ring.add_scaled(p, k.neg(c), m, g);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(lt);
            p.terms.erase(p.terms.begin());
        }
    }
    out.remainder.terms = std::move(rem);
    return out;
}

template <class D>
Polynomial<D> normal_form(const PolynomialRing<D>& ring, const Polynomial<D>& f, std::span<const Polynomial<D>> basis)
{
    return divide(ring, f, basis).remainder;
}

namespace detail {

inline std::uint16_t support(const Monomial& m)
{
    std::uint16_t s = 0;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
        if (m.exp[i]) s = static_cast<std::uint16_t>(s | (1u << i));
    return s;
}

template <class D>
class Buchberger {
public:
    using Poly = Polynomial<D>;
    using Cof = std::vector<Poly>;

    Buchberger(const PolynomialRing<D>& ring, const GroebnerOptions& options, std::size_t input_count)
        : ring_(ring), k_(ring.domain()), options_(options), inputs_(input_count)
    {
    }

    GroebnerResult<D> run(const std::vector<Poly>& gens)
    {
        auto echelon = linear_echelon(gens);
        if (unit_) return finish_unit();
        std::sort(echelon.begin(), echelon.end(), [&](const Entry& a, const Entry& b) {
            return ring_.cmp(a.poly.leading_monomial(), b.poly.leading_monomial()) < 0;
        });
        for (auto& e : echelon) {
            reduce(e);
            if (e.poly.is_zero()) continue;
            if (e.poly.is_constant()) {
                unit_.emplace(std::move(e));
                return finish_unit();
            }
            insert(std::move(e));
        }
        while (!pairs_.empty()) {
            const Pair pair = pairs_.back();
            pairs_.pop_back();
            if (result_.spairs >= options_.budget.max_spairs) return budget("S-pair budget exceeded");
            if (pair.lcm.degree > options_.budget.max_degree) return budget("degree budget exceeded");
            ++result_.spairs;
            Entry s = spolynomial(pair);
            reduce(s);
            if (s.poly.is_zero()) {
                ++result_.zero_reductions;
                continue;
            }
            if (s.poly.is_constant()) {
                unit_.emplace(std::move(s));
                return finish_unit();
            }
            insert(std::move(s));
        }
        return finish();
    }

private:
    struct Entry {
        Poly poly;
        Cof cof;
        std::uint16_t mask = 0;
    };

    struct Pair {
        std::size_t i = 0;
        std::size_t j = 0;
        Monomial lcm;
    };

    bool tracking() const { return options_.track_cofactors; }

    Cof unit_vector(std::size_t j) const
    {
        Cof c(inputs_);
        c[j] = ring_.one();
        return c;
    }

    void cof_add_scaled(Cof& target, const typename D::Element& c, const Monomial& m, const Cof& source) const
    {
        for (std::size_t j = 0; j < inputs_; ++j)
            if (!source[j].is_zero()) target[j] = ring_.add_scaled(target[j], c, m, source[j]);
    }

    void make_monic(Entry& e) const
    {
        if (e.poly.is_zero() || k_.is_one(e.poly.leading_coefficient())) return;
        const auto inv = k_.inv(e.poly.leading_coefficient());
        e.poly = ring_.scale(e.poly, inv);
        if (tracking())
            for (auto& c : e.cof) c = ring_.scale(c, inv);
        e.mask = support(e.poly.leading_monomial());
    }

    // Gaussian elimination on leading monomials only.
    std::vector<Entry> linear_echelon(const std::vector<Poly>& gens)
    {
        auto less = [&](const Monomial& a, const Monomial& b) { return ring_.cmp(a, b) < 0; };
        std::map<Monomial, std::size_t, decltype(less)> pivot(less);
        std::vector<Entry> rows;
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Entry e{gens[j], tracking() ? unit_vector(j) : Cof{}, 0};
            while (!e.poly.is_zero()) {
                auto it = pivot.find(e.poly.leading_monomial());
                if (it == pivot.end()) break;
                const Entry& p = rows[it->second];
                const auto c = k_.neg(e.poly.leading_coefficient());
                e.poly = ring_.add_scaled(e.poly, c, Monomial{}, p.poly);
                if (tracking()) cof_add_scaled(e.cof, c, Monomial{}, p.cof);
            }
            if (e.poly.is_zero()) continue;
            make_monic(e);
            e.mask = support(e.poly.leading_monomial());
            if (e.poly.is_constant()) {
                unit_.emplace(std::move(e));
                return {};
            }
            pivot.emplace(e.poly.leading_monomial(), rows.size());
            rows.push_back(std::move(e));
        }
        return rows;
    }

    const Entry* find_reducer(const Monomial& m, std::uint16_t mask, std::size_t skip) const
    {
        for (std::size_t idx : active_) {
            if (idx == skip) continue;
            const Entry& g = basis_[idx];
            if ((g.mask & ~mask) != 0) continue;
            if (g.poly.leading_monomial().divides(m)) return &g;
        }
        return nullptr;
    }

    // Full reduction by the active basis, then monic.
    void reduce(Entry& e, std::size_t skip = static_cast<std::size_t>(-1)) const
    {
        std::vector<Term<D>> rem;
        Poly cur = std::move(e.poly);
        std::size_t from = 0;
        while (from < cur.terms.size()) {
            const auto& lt = cur.terms[from];
            const Entry* g = find_reducer(lt.monomial, support(lt.monomial), skip);
            if (!g) {
                rem.push_back(lt);
                ++from;
                continue;
            }
            const auto c = k_.neg(lt.coefficient);
            const Monomial m = lt.monomial / g->poly.leading_monomial();
            Poly tail;
            tail.terms.assign(cur.terms.begin() + static_cast<std::ptrdiff_t>(from), cur.terms.end());
            cur = ring_.add_scaled(tail, c, m, g->poly);
            from = 0;
            if (tracking()) cof_add_scaled(e.cof, c, m, g->cof);
        }
        e.poly.terms = std::move(rem);
        make_monic(e);
        if (!e.poly.is_zero()) e.mask = support(e.poly.leading_monomial());
    }

    Entry spolynomial(const Pair& pair) const
    {
        const Entry& f = basis_[pair.i];
        const Entry& g = basis_[pair.j];
        const Monomial mf = pair.lcm / f.poly.leading_monomial();
        const Monomial mg = pair.lcm / g.poly.leading_monomial();
        Entry s;
        s.poly = ring_.mul_term(f.poly, mf, k_.one());
        s.poly = ring_.add_scaled(s.poly, k_.neg(k_.one()), mg, g.poly);
        if (tracking()) {
            s.cof.assign(inputs_, Poly{});
            cof_add_scaled(s.cof, k_.one(), mf, f.cof);
            cof_add_scaled(s.cof, k_.neg(k_.one()), mg, g.cof);
        }
        return s;
    }

    const Monomial& lm(std::size_t idx) const { return basis_[idx].poly.leading_monomial(); }

    // Gebauer-Moeller installation of a new basis element.
    void insert(Entry e)
    {
        const std::size_t h = basis_.size();
        basis_.push_back(std::move(e));
        const Monomial& lh = lm(h);

        std::vector<Pair> candidates;
        for (std::size_t g : active_) candidates.push_back({g, h, Monomial::lcm(lm(g), lh)});

        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            if (Monomial::coprime(lm(p.i), lh)) {
                kept.push_back(p);
                continue;
            }
            bool redundant = false;
            for (std::size_t b = 0; b < candidates.size() && !redundant; ++b) {
                if (b == a) continue;
                const Pair& q = candidates[b];
                if (!q.lcm.divides(p.lcm)) continue;
                // q strictly better, or equal lcm with a deterministic winner
                if (!(q.lcm == p.lcm)) redundant = true;
                else if (Monomial::coprime(lm(q.i), lh) || b < a) redundant = true;
            }
            if (!redundant) kept.push_back(p);
        }
        std::vector<Pair> fresh;
        for (const auto& p : kept)
            if (!Monomial::coprime(lm(p.i), lh)) fresh.push_back(p);

        std::vector<Pair> old;
        old.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            const bool divisible = lh.divides(p.lcm);
            if (!divisible || Monomial::lcm(lm(p.i), lh) == p.lcm || Monomial::lcm(lm(p.j), lh) == p.lcm)
                old.push_back(p);
        }
        pairs_ = std::move(old);
        pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());
        std::sort(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
            const int c = ring_.cmp(a.lcm, b.lcm);
            if (c != 0) return c > 0;
            if (a.j != b.j) return a.j > b.j;
            return a.i > b.i;
        });

        std::vector<std::size_t> still;
        for (std::size_t g : active_)
            if (!lh.divides(lm(g))) still.push_back(g);
        still.push_back(h);
        active_ = std::move(still);
    }

    GroebnerResult<D> finish_unit()
    {
        Entry u = std::move(*unit_);
        make_monic(u);
        result_.basis.generators = {u.poly};
        result_.basis.groebner = true;
        if (tracking()) result_.basis.cofactors = std::vector<Cof>{std::move(u.cof)};
        return std::move(result_);
    }

    GroebnerResult<D> budget(const std::string& reason)
    {
        result_.status = GroebnerStatus::BudgetExceeded;
        result_.budget_reason = reason;
        for (std::size_t idx : active_) result_.basis.generators.push_back(basis_[idx].poly);
        if (tracking()) {
            std::vector<Cof> cofs;
            for (std::size_t idx : active_) cofs.push_back(basis_[idx].cof);
            result_.basis.cofactors = std::move(cofs);
        }
        return std::move(result_);
    }

    GroebnerResult<D> finish()
    {
        std::sort(active_.begin(), active_.end(),
                  [&](std::size_t a, std::size_t b) { return ring_.cmp(lm(a), lm(b)) < 0; });
        for (std::size_t idx : active_) {
            Entry e = basis_[idx];
            reduce(e, idx);
            basis_[idx] = std::move(e);
        }
        for (std::size_t idx : active_) result_.basis.generators.push_back(basis_[idx].poly);
        if (tracking()) {
            std::vector<Cof> cofs;
            for (std::size_t idx : active_) cofs.push_back(basis_[idx].cof);
            result_.basis.cofactors = std::move(cofs);
        }
        result_.basis.groebner = true;
        return std::move(result_);
    }

    const PolynomialRing<D>& ring_;
    const D& k_;
    GroebnerOptions options_;
    std::size_t inputs_;
    std::vector<Entry> basis_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;  // sorted so the next pair is at the back
    std::optional<Entry> unit_;
    GroebnerResult<D> result_;
};

}  // namespace detail

/// Reduced Groebner basis (monic, sorted by ascending leading monomial) of the
/// ideal generated by `gens`. Zero generators are ignored; the zero ideal
/// yields an empty basis.
template <class D>
GroebnerResult<D> buchberger(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& gens,
                             const GroebnerOptions& options = {})
{
    static_assert(D::is_field, "buchberger needs a field");
    detail::Buchberger<D> engine(ring, options, gens.size());
    return engine.run(gens);
}

template <class D>
Polynomial<D> s_polynomial(const PolynomialRing<D>& ring, const Polynomial<D>& f, const Polynomial<D>& g)
{
    const auto& k = ring.domain();
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    auto a = ring.mul_term(f, l / f.leading_monomial(), k.inv(f.leading_coefficient()));
    return ring.add_scaled(a, k.neg(k.inv(g.leading_coefficient())), l / g.leading_monomial(), g);
}

/// Buchberger's criterion over every pair, without pruning.
template <class D>
bool is_groebner_basis(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(ring, s_polynomial(ring, basis[i], basis[j]), std::span(basis)).is_zero()) return false;
    return true;
}

/// True iff the basis is reduced: monic, and no term of any element is
/// divisible by the leading monomial of another.
template <class D>
bool is_reduced_basis(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& basis)
{
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].is_zero() || !ring.domain().is_one(basis[i].leading_coefficient())) return false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : basis[i].terms)
                if (basis[j].leading_monomial().divides(t.monomial)) return false;
        }
    }
    return true;
}

/// Checks sum_j cofactors[k][j] * gens[j] == basis[k] for every k.
template <class D>
bool verify_cofactors(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& gens, const IdealBasis<D>& basis)
{
    if (!basis.cofactors || basis.cofactors->size() != basis.generators.size()) return false;
    for (std::size_t k = 0; k < basis.generators.size(); ++k) {
        const auto& row = (*basis.cofactors)[k];
        if (row.size() != gens.size()) return false;
        Polynomial<D> sum;
        for (std::size_t j = 0; j < gens.size(); ++j) sum = ring.add(sum, ring.mul(row[j], gens[j]));
        if (!(sum == basis.generators[k])) return false;
    }
    return true;
}

/// Ideal equality by mutual reduction against Groebner bases; nullopt when a
/// basis computation runs out of budget.
template <class D>
std::optional<bool> same_ideal(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& a,
                               const std::vector<Polynomial<D>>& b, const GroebnerBudget& budget = {})
{
    GroebnerOptions options;
    options.budget = budget;
    const auto ga = buchberger(ring, a, options);
    if (!ga.complete()) return std::nullopt;
    const auto gb = buchberger(ring, b, options);
    if (!gb.complete()) return std::nullopt;
    for (const auto& f : a)
        if (!normal_form(ring, f, std::span(gb.basis.generators)).is_zero()) return false;
    for (const auto& f : b)
        if (!normal_form(ring, f, std::span(ga.basis.generators)).is_zero()) return false;
    return true;
}

}  // namespace corank
