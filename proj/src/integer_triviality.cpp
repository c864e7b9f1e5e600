#include "corank/integer_triviality.hpp"

#include <functional>
#include <limits>

namespace corank {

std::string to_string(Decision d)
{
    switch (d) {
    case Decision::Trivial: return "trivial";
    case Decision::NonTrivial: return "non-trivial";
    case Decision::Undecided: return "undecided";
    }
    return "?";
}

Polynomial<IntegerRing> combine(const PolynomialRing<IntegerRing>& ring, const std::vector<Polynomial<IntegerRing>>& gens,
                                const std::vector<Polynomial<IntegerRing>>& cofactors)
{
    Polynomial<IntegerRing> sum;
    for (std::size_t j = 0; j < gens.size() && j < cofactors.size(); ++j)
        if (!cofactors[j].is_zero()) sum = ring.add(sum, ring.mul(cofactors[j], gens[j]));
    return sum;
}

namespace {

std::optional<mpz_class> pollard_brent(const mpz_class& n)
{
    if (mpz_even_p(n.get_mpz_t())) return mpz_class(2);
    for (unsigned long c = 1; c < 20; ++c) {
        mpz_class y = 2, x, g = 1, q = 1, ys;
        std::size_t r = 1;
        auto f = [&](const mpz_class& v) {
            mpz_class out = v * v + c;
            mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
            return out;
        };
        std::size_t steps = 0;
        while (g == 1 && steps < 2'000'000) {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = f(y);
            std::size_t k = 0;
            while (k < r && g == 1) {
                ys = y;
                const std::size_t m = std::min<std::size_t>(128, r - k);
                for (std::size_t i = 0; i < m; ++i) {
                    y = f(y);
                    mpz_class diff = x - y;
                    q = q * abs(diff);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
                steps += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = x - ys;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return std::nullopt;
}

bool split_into(const mpz_class& n, std::vector<mpz_class>& out)
{
    if (n == 1) return true;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        out.push_back(n);
        return true;
    }
    const auto d = pollard_brent(n);
    if (!d) return false;
    return split_into(*d, out) && split_into(n / *d, out);
}

std::vector<std::string> to_text(const auto& ring, const auto& basis)
{
    std::vector<std::string> out;
    for (const auto& f : basis) out.push_back(ring.to_string(f));
    return out;
}

std::size_t term_count(const std::vector<Polynomial<IntegerRing>>& v)
{
    std::size_t total = 0;
    for (const auto& f : v) total += f.size();
    return total;
}

}  // namespace

std::optional<std::vector<mpz_class>> factor_integer(const mpz_class& value)
{
    mpz_class n = abs(value);
    std::vector<mpz_class> out;
    if (n == 0) return std::nullopt;
    for (unsigned long d = 2; d <= 100000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            out.emplace_back(d);
            n /= d;
        }
    }
    if (!split_into(n, out)) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
}

IntegerTriviality is_trivial_over_Z(std::size_t variables, const std::vector<Polynomial<IntegerRing>>& gens,
                                    const IntegerTrivialityOptions& options)
{
    IntegerTriviality out;
    const PolynomialRing<IntegerRing> zr(IntegerRing{}, variables);
    std::vector<Polynomial<IntegerRing>> c(gens.size());
    mpz_class D = 0;

    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!gens[j].is_constant() || gens[j].is_zero()) continue;
        const mpz_class& v = gens[j].leading_coefficient();
        if (D == 0) {
            D = v;
            c[j] = zr.one();
            continue;
        }
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), D.get_mpz_t(), v.get_mpz_t());
        for (auto& f : c) f = zr.scale(f, s);
        c[j] = zr.constant(t);
        D = g;
    }
    if (D < 0) {
        D = -D;
        for (auto& f : c) f = zr.neg(f);
    }

    if (D == 0) {
        const PolynomialRing<RationalField> qr(RationalField{}, variables);
        std::vector<Polynomial<RationalField>> qgens;
        for (const auto& g : gens) qgens.push_back(qr.convert(g, [](const mpz_class& v) { return mpq_class(v); }));
        auto ft = is_trivial_over_field(qr, qgens, options.budget, true);
        out.groebner_runs += ft.groebner_runs;
        if (ft.decision == Decision::Undecided) {
            out.note = "rational basis: " + ft.note;
            return out;
        }
        if (ft.decision == Decision::NonTrivial) {
            out.decision = Decision::NonTrivial;
            out.basis = to_text(qr, ft.basis);
            return out;
        }
        if (!ft.cofactors) {
            out.note = ft.note;
            return out;
        }
        mpz_class l = 1;
        for (const auto& h : *ft.cofactors)
            for (const auto& t : h.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coefficient.get_den_mpz_t());
        for (std::size_t j = 0; j < gens.size(); ++j) {
            c[j] = zr.convert((*ft.cofactors)[j], [&](const mpq_class& q) {
                return mpz_class(q.get_num() * (l / q.get_den()));
            });
        }
        D = l;
        if (!(combine(zr, gens, c) == zr.constant(D))) {
            out.note = "denominator clearing failed to reproduce the constant";
            return out;
        }
    }
    out.constant = D;

    const auto factors = factor_integer(D);
    if (!factors) {
        out.note = "could not factor " + D.get_str();
        return out;
    }
    std::vector<std::pair<mpz_class, unsigned>> primes;
    for (const auto& f : *factors) {
        if (!primes.empty() && primes.back().first == f) ++primes.back().second;
        else primes.emplace_back(f, 1);
    }

    std::vector<std::vector<Polynomial<PrimeField>>> prime_cofactors;
    for (const auto& [p, mult] : primes) {
        if (!p.fits_ulong_p() || p.get_ui() >= (std::uint64_t{1} << 63)) {
            out.note = "prime factor too large: " + p.get_str();
            return out;
        }
        const std::uint64_t pu = p.get_ui();
        out.primes_tested.push_back(p);
        const PolynomialRing<PrimeField> fr(PrimeField(pu), variables);
        std::vector<Polynomial<PrimeField>> fgens;
        for (const auto& g : gens)
            fgens.push_back(fr.convert(g, [&](const mpz_class& v) { return fr.domain().from_integer(v); }));
        auto ft = is_trivial_over_field(fr, fgens, options.budget, options.build_certificate);
        out.groebner_runs += ft.groebner_runs;
        if (ft.decision == Decision::Undecided) {
            out.note = "basis mod " + p.get_str() + ": " + ft.note;
            return out;
        }
        if (ft.decision == Decision::NonTrivial) {
            out.decision = Decision::NonTrivial;
            out.failing_prime = pu;
            out.basis = to_text(fr, ft.basis);
            return out;
        }
        prime_cofactors.push_back(ft.cofactors ? std::move(*ft.cofactors) : std::vector<Polynomial<PrimeField>>{});
    }
    out.decision = Decision::Trivial;
    out.certificate = IntegerCertificateKind::PrimeWise;
    if (!options.build_certificate && D != 1) return out;

    // Lift: from 1 - p*s in I and D in I, (D/p)(1 - p*s) + s*D = D/p is in I.
    for (std::size_t k = 0; k < primes.size(); ++k) {
        const mpz_class& p = primes[k].first;
        const auto& hp = prime_cofactors[k];
        if (hp.size() != gens.size()) return out;
        std::vector<Polynomial<IntegerRing>> h(gens.size());
        for (std::size_t j = 0; j < gens.size(); ++j)
            h[j] = zr.convert(hp[j], [](std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); });
        auto s = zr.sub(zr.one(), combine(zr, gens, h));
        for (auto& t : s.terms) {
            if (!mpz_divisible_p(t.coefficient.get_mpz_t(), p.get_mpz_t())) {
                out.note = "mod-p cofactors do not lift";
                return out;
            }
            mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), p.get_mpz_t());
        }
        for (unsigned a = 0; a < primes[k].second; ++a) {
            const mpz_class next = D / p;
            for (std::size_t j = 0; j < gens.size(); ++j) c[j] = zr.add(zr.scale(h[j], next), zr.mul(s, c[j]));
            D = next;
            if (term_count(c) > options.max_certificate_terms) {
                out.note = "integer certificate exceeded the term budget; prime-wise certificate kept";
                return out;
            }
        }
    }
    out.certificate = IntegerCertificateKind::Combination;
    out.cofactors = std::move(c);
    out.certificate_verified = combine(zr, gens, out.cofactors) == zr.one();
    return out;
}

}  // namespace corank
