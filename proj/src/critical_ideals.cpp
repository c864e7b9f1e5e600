#include "corank/critical_ideals.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "corank/canonical.hpp"

namespace corank {

Domain Domain::prime_field(std::uint64_t prime)
{
    mpz_class p(static_cast<unsigned long>(prime));
    if (prime < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        throw std::invalid_argument("not a prime: " + std::to_string(prime));
    return {DomainKind::PrimeField, prime};
}

Domain Domain::parse(const std::string& text)
{
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q" || text == "r" || text == "R") return rationals();
    if (text.rfind("fp:", 0) == 0 || text.rfind("FP:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad prime in domain: " + text);
        return prime_field(std::stoull(digits));
    }
    throw std::invalid_argument("unknown domain: " + text);
}

std::string Domain::name() const
{
    switch (kind) {
    case DomainKind::Integers: return "Z";
    case DomainKind::Rationals: return "Q";
    case DomainKind::PrimeField: return "F_" + std::to_string(p);
    }
    return "?";
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::ZeroForcing: return "zero-forcing";
    case Method::ConstantMinor: return "constant-minor";
    case Method::Groebner: return "groebner";
    case Method::PointWitness: return "point";
    case Method::Structural: return "structural";
    case Method::Nesting: return "nesting";
    case Method::Undecided: return "undecided";
    }
    return "?";
}

std::vector<Vertex> MinorSource::row_list() const
{
    std::vector<Vertex> out;
    for (std::uint32_t m = rows; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

std::vector<Vertex> MinorSource::col_list() const
{
    std::vector<Vertex> out;
    for (std::uint32_t m = cols; m; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return out;
}

namespace {

using ZPoly = Polynomial<IntegerRing>;

std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k)
{
    std::vector<std::uint32_t> out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    if (k > n) return out;
    std::uint32_t s = (1u << k) - 1;
    const std::uint32_t limit = 1u << n;
    while (s < limit) {
        out.push_back(s);
        const std::uint32_t c = s & -s;
        const std::uint32_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ZPoly entry_poly(const PolynomialRing<IntegerRing>& zr, const LaplacianEntry& e)
{
    if (e.is_variable) return zr.variable(e.variable);
    return zr.constant(mpz_class(static_cast<long>(e.constant)));
}

}  // namespace

MinorSet minor_generators(const SymbolicMatrix& m, std::size_t i)
{
    const std::size_t n = m.order();
    if (i < 1 || i > n) throw std::out_of_range("minor order out of range");
    if (n > kMaxMinorMatrixOrder) throw std::out_of_range("matrix too large for minor expansion");
    const PolynomialRing<IntegerRing> zr(IntegerRing{}, n);

    std::unordered_map<std::uint32_t, ZPoly> prev;
    for (Vertex r = 0; r < n; ++r)
        for (Vertex c = 0; c < n; ++c) {
            auto p = entry_poly(zr, m(r, c));
            if (!p.is_zero()) prev.emplace((1u << r) | ((1u << c) << 16), std::move(p));
        }
    for (std::size_t k = 2; k <= i; ++k) {
        std::unordered_map<std::uint32_t, ZPoly> next;
        const auto row_sets = subsets_of_size(n, k);
        const auto col_sets = subsets_of_size(n, k);
        for (auto rs : row_sets) {
            const auto r0 = static_cast<Vertex>(std::countr_zero(rs));
            const std::uint32_t rest = rs & (rs - 1);
            for (auto cs : col_sets) {
                ZPoly det;
                int position = 0;
                for (std::uint32_t cm = cs; cm; cm &= cm - 1, ++position) {
                    const auto c = static_cast<Vertex>(std::countr_zero(cm));
                    const auto& e = m(r0, c);
                    if (!e.is_variable && e.constant == 0) continue;
                    auto it = prev.find(rest | ((cs & ~(1u << c)) << 16));
                    if (it == prev.end()) continue;
                    const mpz_class sign = (position % 2) ? -1 : 1;
                    if (e.is_variable) {
                        det = zr.add_scaled(det, sign, Monomial::variable(c), it->second);
                    } else {
                        det = zr.add_scaled(det, sign * static_cast<long>(e.constant), Monomial{}, it->second);
                    }
                }
                if (!det.is_zero()) next.emplace(rs | (cs << 16), std::move(det));
            }
        }
        prev = std::move(next);
    }

    MinorSet out;
    out.order = i;
    std::unordered_set<std::string> seen;
    const auto row_sets = subsets_of_size(n, i);
    for (auto rs : row_sets) {
        for (auto cs : row_sets) {
            auto it = prev.find(rs | (cs << 16));
            if (it == prev.end()) continue;
            ZPoly p = it->second;
            if (sgn(p.leading_coefficient()) < 0) p = zr.neg(p);
            const MinorSource src{rs, cs};
            if (p.is_constant()) {
                const mpz_class& v = p.leading_coefficient();
                if (!out.constant_minor) out.constant_minor = src;
                if (v == 1 && !out.unit_minor) out.unit_minor = src;
                mpz_gcd(out.constant_gcd.get_mpz_t(), out.constant_gcd.get_mpz_t(), v.get_mpz_t());
            }
            if (!seen.insert(zr.to_string(p)).second) continue;
            out.generators.push_back(std::move(p));
            out.sources.push_back(src);
        }
    }
    return out;
}

IntMatrix evaluate_laplacian(const Digraph& d, std::span<const std::int64_t> point)
{
    const std::size_t n = d.order();
    if (point.size() != n) throw std::invalid_argument("evaluation point has wrong dimension");
    IntMatrix m(n, n);
    for (Vertex v = 0; v < n; ++v) m(v, v) = point[v];
    for (auto [u, v] : d.arcs()) m(u, v) -= 1;
    return m;
}

namespace {

std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p)
{
    const auto sp = static_cast<std::int64_t>(p);
    const std::int64_t r = v % sp;
    return static_cast<std::uint64_t>(r < 0 ? r + sp : r);
}

class PointScanner {
public:
    PointScanner(const Digraph& d, std::uint64_t prime, std::size_t stop_at, std::size_t max_points)
        : base_(evaluate_laplacian(d, std::vector<std::int64_t>(d.order(), 0))), prime_(prime), stop_at_(stop_at),
          max_points_(max_points)
    {
    }

    // Returns true when scanning should stop.
    bool visit(const std::vector<std::int64_t>& point)
    {
        if (scan_.scanned >= max_points_) {
            scan_.exhaustive = false;
            return true;
        }
        ++scan_.scanned;
        IntMatrix m = base_;
        for (std::size_t v = 0; v < point.size(); ++v) m(v, v) = point[v];
        const std::size_t rank = prime_ ? rank_mod_p(m, prime_).rank : exact_rank(m).rank;
        if (!scan_.best || rank < scan_.best->rank) {
            PointWitness w;
            w.point = point;
            if (prime_)
                for (auto& x : w.point) x = static_cast<std::int64_t>(reduce_mod(x, prime_));
            w.prime = prime_;
            w.rank = rank;
            scan_.best = std::move(w);
        }
        return scan_.best->rank <= stop_at_;
    }

    BoxScan result() { return std::move(scan_); }

private:
    IntMatrix base_;
    std::uint64_t prime_;
    std::size_t stop_at_;
    std::size_t max_points_;
    BoxScan scan_;
};

// Visits points of values^n in lexicographic order; returns true if stopped.
template <class Visit>
bool odometer(std::size_t n, const std::vector<std::int64_t>& values, Visit&& visit)
{
    if (values.empty()) return false;
    std::vector<std::size_t> idx(n, 0);
    std::vector<std::int64_t> point(n, values[0]);
    while (true) {
        if (visit(point)) return true;
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < values.size()) {
                point[k] = values[idx[k]];
                break;
            }
            idx[k] = 0;
            point[k] = values[0];
            if (k == 0) return false;
        }
        if (n == 0) return false;
    }
}

}  // namespace

BoxScan min_rank_scan(const Digraph& d, const IntegerBox& box, std::uint64_t prime, std::size_t stop_at_rank,
                      std::size_t max_points)
{
    if (box.lo > box.hi) throw std::invalid_argument("empty box");
    const std::size_t n = d.order();
    PointScanner scanner(d, prime, stop_at_rank, max_points);
    const std::int64_t radius = std::max(std::abs(box.lo), std::abs(box.hi));
    const std::int64_t start = (box.lo <= 0 && box.hi >= 0) ? 0 : std::min(std::abs(box.lo), std::abs(box.hi));
    for (std::int64_t k = start; k <= radius; ++k) {
        std::vector<std::int64_t> values;
        bool has_edge_value = false;
        for (std::int64_t v = box.lo; v <= box.hi; ++v) {
            if (std::abs(v) <= k) values.push_back(v);
            if (std::abs(v) == k) has_edge_value = true;
        }
        if (!has_edge_value) continue;
        const bool stopped = odometer(n, values, [&](const std::vector<std::int64_t>& point) {
            std::int64_t norm = 0;
            for (auto x : point) norm = std::max(norm, std::abs(x));
            if (norm != k) return false;
            return scanner.visit(point);
        });
        if (stopped) break;
    }
    return scanner.result();
}

BoxScan min_rank_scan_mod_p(const Digraph& d, std::uint64_t prime, std::size_t stop_at_rank, std::size_t max_points)
{
    PointScanner scanner(d, prime, stop_at_rank, max_points);
    std::vector<std::int64_t> values;
    for (std::uint64_t v = 0; v < prime; ++v) values.push_back(static_cast<std::int64_t>(v));
    odometer(d.order(), values, [&](const std::vector<std::int64_t>& point) { return scanner.visit(point); });
    return scanner.result();
}

namespace {

bool exhaustive_mod_p_fits(std::size_t n, std::uint64_t p, std::size_t limit)
{
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > limit) return false;
    }
    return true;
}

BoxScan scan_prime(const Digraph& d, std::uint64_t p, const CriticalIdealConfig& config, std::size_t stop_at)
{
    if (exhaustive_mod_p_fits(d.order(), p, config.max_mod_p_points))
        return min_rank_scan_mod_p(d, p, stop_at, config.max_mod_p_points);
    return min_rank_scan(d, config.box, p, stop_at, config.max_box_points);
}

}  // namespace

BoxSearchResult variety_box_search(const Digraph& d, std::size_t r, const IntegerBox& box, const Domain& domain,
                                   std::size_t max_points)
{
    const std::uint64_t prime = domain.kind == DomainKind::PrimeField ? domain.p : 0;
    auto scan = min_rank_scan(d, box, prime, r, max_points);
    BoxSearchResult out;
    out.scanned = scan.scanned;
    out.exhaustive = scan.exhaustive;
    if (scan.best && scan.best->rank <= r) out.point = std::move(scan.best);
    return out;
}

BoxSearchResult variety_box_search(const Graph& g, std::size_t r, const IntegerBox& box, const Domain& domain,
                                   std::size_t max_points)
{
    return variety_box_search(to_digraph(g), r, box, domain, max_points);
}

std::optional<PointWitness> nontriviality_certificate(const Digraph& d, std::size_t i, const Domain& domain,
                                                      const CriticalIdealConfig& config)
{
    if (i == 0) return std::nullopt;
    const std::size_t target = i - 1;
    auto hit = [&](BoxScan s) -> std::optional<PointWitness> {
        if (s.best && s.best->rank <= target) return s.best;
        return std::nullopt;
    };
    switch (domain.kind) {
    case DomainKind::Rationals:
        return hit(min_rank_scan(d, config.box, 0, target, config.max_box_points));
    case DomainKind::PrimeField:
        return hit(scan_prime(d, domain.p, config, target));
    case DomainKind::Integers:
        for (auto p : config.primes)
            if (auto w = hit(scan_prime(d, p, config, target))) return w;
        return hit(min_rank_scan(d, config.box, 0, target, config.max_box_points));
    }
    return std::nullopt;
}

std::optional<PointWitness> nontriviality_certificate(const Graph& g, std::size_t i, const Domain& domain,
                                                      const CriticalIdealConfig& config)
{
    return nontriviality_certificate(to_digraph(g), i, domain, config);
}

std::string CriticalIdealConfig::budget_key() const
{
    std::ostringstream out;
    out << "box" << box.lo << ':' << box.hi << ";p";
    for (auto p : primes) out << p << ',';
    out << ";s" << budget.max_spairs << ";d" << budget.max_degree << ";b" << max_box_points << ";m"
        << max_mod_p_points << ";c" << max_minor_count;
    return out.str();
}

DecisionCache::DecisionCache(std::filesystem::path directory)
{
    std::filesystem::create_directories(directory);
    file_ = directory / "decisions.tsv";
    std::ifstream in(*file_);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string key;
        int decision = 0, method = 0;
        std::size_t runs = 0;
        if (!std::getline(fields, key, '\t')) continue;
        if (!(fields >> decision >> method >> runs)) continue;
        if (decision < 0 || decision > 2 || method < 0 || method > 6) continue;
        entries_[key] = {static_cast<Decision>(decision), static_cast<Method>(method), runs};
    }
}

std::optional<TrivialityDecision> DecisionCache::find(const std::string& key) const
{
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    TrivialityDecision d;
    d.decision = it->second.decision;
    d.method = it->second.method;
    d.groebner_runs = it->second.groebner_runs;
    d.from_cache = true;
    return d;
}

void DecisionCache::store(const std::string& key, const TrivialityDecision& decision)
{
    if (decision.decision == Decision::Undecided) return;
    std::lock_guard lock(mutex_);
    const bool inserted = entries_.try_emplace(key, Entry{decision.decision, decision.method, decision.groebner_runs}).second;
    if (!inserted || !file_) return;
    std::ofstream out(*file_, std::ios::app);
    out << key << '\t' << static_cast<int>(decision.decision) << '\t' << static_cast<int>(decision.method) << '\t'
        << decision.groebner_runs << '\n';
}

std::size_t DecisionCache::size() const
{
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::string cache_key(const Digraph& d, std::size_t i, const Domain& domain, const CriticalIdealConfig& config)
{
    return canonical_form(d).encoding + "|" + std::to_string(i) + "|" + domain.name() + "|" + config.budget_key();
}

namespace {

bool minors_affordable(std::size_t n, std::size_t i, const CriticalIdealConfig& config)
{
    const auto c = binomial(n, i);
    return n <= kMaxMinorMatrixOrder && c * c <= config.max_minor_count;
}

std::optional<TrivialityDecision> constant_minor_decision(const MinorSet& minors, const Domain& domain)
{
    if (minors.constant_gcd == 0) return std::nullopt;
    TrivialityDecision out;
    out.decision = Decision::Trivial;
    out.method = Method::ConstantMinor;
    out.minor = minors.unit_minor ? minors.unit_minor : minors.constant_minor;
    out.constant = minors.constant_gcd;
    switch (domain.kind) {
    case DomainKind::Rationals: return out;
    case DomainKind::Integers:
        if (minors.constant_gcd == 1) return out;
        return std::nullopt;
    case DomainKind::PrimeField:
        if (!mpz_divisible_ui_p(minors.constant_gcd.get_mpz_t(), domain.p)) return out;
        return std::nullopt;
    }
    return std::nullopt;
}

TrivialityDecision groebner_decision(std::size_t n, const MinorSet& minors, const Domain& domain,
                                     const CriticalIdealConfig& config)
{
    TrivialityDecision out;
    out.method = Method::Groebner;
    switch (domain.kind) {
    case DomainKind::Rationals: {
        const PolynomialRing<RationalField> qr(RationalField{}, n);
        std::vector<Polynomial<RationalField>> gens;
        for (const auto& g : minors.generators)
            gens.push_back(qr.convert(g, [](const mpz_class& v) { return mpq_class(v); }));
        auto r = is_trivial_over_field(qr, gens, config.budget, false);
        out.decision = r.decision;
        out.groebner_runs = r.groebner_runs;
        out.note = r.note;
        break;
    }
    case DomainKind::PrimeField: {
        const PolynomialRing<PrimeField> fr(PrimeField(domain.p), n);
        std::vector<Polynomial<PrimeField>> gens;
        for (const auto& g : minors.generators)
            gens.push_back(fr.convert(g, [&](const mpz_class& v) { return fr.domain().from_integer(v); }));
        auto r = is_trivial_over_field(fr, gens, config.budget, false);
        out.decision = r.decision;
        out.groebner_runs = r.groebner_runs;
        out.note = r.note;
        break;
    }
    case DomainKind::Integers: {
        IntegerTrivialityOptions options;
        options.budget = config.budget;
        options.build_certificate = false;
        auto r = is_trivial_over_Z(n, minors.generators, options);
        out.decision = r.decision;
        out.groebner_runs = r.groebner_runs;
        out.failing_prime = r.failing_prime;
        out.constant = r.constant;
        out.note = r.note;
        break;
    }
    }
    if (out.decision == Decision::Undecided) out.method = Method::Undecided;
    return out;
}

TrivialityDecision decide(const Digraph& d, std::size_t i, const Domain& domain, const CriticalIdealConfig& config,
                          DecisionCache* cache, bool point_search, const MinorSet* known_minors)
{
    const std::size_t n = d.order();
    TrivialityDecision out;
    if (i == 0) {
        out.decision = Decision::Trivial;
        out.method = Method::Structural;
        return out;
    }
    if (i >= n) {
        out.decision = Decision::NonTrivial;
        out.method = Method::Structural;
        return out;
    }
    std::string key;
    if (cache) {
        key = cache_key(d, i, domain, config) + (point_search ? "|points" : "|gap");
        if (auto hit = cache->find(key)) return *hit;
    }
    std::optional<MinorSet> own;
    const MinorSet* minors = known_minors;
    if (!minors && minors_affordable(n, i, config)) {
        own = minor_generators(SymbolicMatrix(d), i);
        minors = &*own;
    }
    if (minors) {
        if (auto c = constant_minor_decision(*minors, domain)) {
            if (cache) cache->store(key, *c);
            return *c;
        }
    }
    if (point_search) {
        if (auto w = nontriviality_certificate(d, i, domain, config)) {
            out.decision = Decision::NonTrivial;
            out.method = Method::PointWitness;
            out.point = std::move(w);
            if (cache) cache->store(key, out);
            return out;
        }
    }
    if (!minors) {
        out.note = "too many minors for expansion";
        return out;
    }
    out = groebner_decision(n, *minors, domain, config);
    if (cache) cache->store(key, out);
    return out;
}

}  // namespace

TrivialityDecision ideal_trivial(const Digraph& d, std::size_t i, const Domain& domain,
                                 const CriticalIdealConfig& config, DecisionCache* cache)
{
    return decide(d, i, domain, config, cache, true, nullptr);
}

TrivialityDecision ideal_trivial(const Graph& g, std::size_t i, const Domain& domain,
                                 const CriticalIdealConfig& config, DecisionCache* cache)
{
    return ideal_trivial(to_digraph(g), i, domain, config, cache);
}

GammaResult gamma(const Digraph& d, const Domain& domain, const CriticalIdealConfig& config, DecisionCache* cache)
{
    const std::size_t n = d.order();
    GammaResult res;
    res.domain = domain;
    if (n == 0) {
        res.value = 0;
        return res;
    }
    const auto zf = zero_forcing_number(d);
    res.zero_forcing = zf.witness;
    res.mz = n - zf.z;
    if (!zf.exact) res.note = "zero forcing number from the greedy bound";
    certificate_minor(d, zf.witness);

    std::map<std::size_t, std::pair<Decision, Method>> explicit_;
    std::size_t lower = res.mz;
    std::size_t upper = n - 1;

    auto take_scan = [&](const BoxScan& scan) {
        if (scan.best && scan.best->rank < upper) {
            upper = scan.best->rank;
            res.upper_point = scan.best;
        }
    };
    if (lower < upper) {
        if (domain.kind != DomainKind::PrimeField) take_scan(min_rank_scan(d, config.box, 0, lower, config.max_box_points));
        if (domain.kind == DomainKind::PrimeField) take_scan(scan_prime(d, domain.p, config, lower));
        if (domain.kind == DomainKind::Integers)
            for (auto p : config.primes)
                if (lower < upper) take_scan(scan_prime(d, p, config, lower));
    }
    if (res.upper_point) explicit_[upper + 1] = {Decision::NonTrivial, Method::PointWitness};

    std::map<std::size_t, MinorSet> minors;
    for (std::size_t i = lower + 1; i <= upper; ++i) {
        if (!minors_affordable(n, i, config)) continue;
        auto& ms = minors.emplace(i, minor_generators(SymbolicMatrix(d), i)).first->second;
        if (auto c = constant_minor_decision(ms, domain)) {
            explicit_[i] = {Decision::Trivial, Method::ConstantMinor};
            res.constant_minor = c->minor;
        }
    }
    for (const auto& [i, dec] : explicit_)
        if (dec.first == Decision::Trivial && i > lower) lower = i;

    for (std::size_t i = lower + 1; i <= upper; ++i) {
        auto it = minors.find(i);
        const MinorSet* known = it == minors.end() ? nullptr : &it->second;
        auto dec = decide(d, i, domain, config, cache, false, known);
        res.groebner_runs += dec.groebner_runs;
        if (dec.decision == Decision::Trivial) {
            explicit_[i] = {Decision::Trivial, dec.method};
            lower = i;
            continue;
        }
        if (dec.decision == Decision::NonTrivial) {
            explicit_[i] = {Decision::NonTrivial, dec.method};
            upper = i - 1;
            break;
        }
        if (!dec.note.empty()) res.note = "index " + std::to_string(i) + ": " + dec.note;
        break;
    }
    res.lower = lower;
    res.upper = upper;
    if (lower == upper) res.value = lower;

    for (std::size_t i = 1; i <= n; ++i) {
        IndexProvenance p;
        p.i = i;
        if (auto it = explicit_.find(i); it != explicit_.end()) {
            p.decision = it->second.first;
            p.method = it->second.second;
        } else if (i <= res.mz) {
            p.decision = Decision::Trivial;
            p.method = Method::ZeroForcing;
        } else if (i <= lower) {
            p.decision = Decision::Trivial;
            p.method = Method::Nesting;
        } else if (i == n) {
            p.decision = Decision::NonTrivial;
            p.method = Method::Structural;
        } else if (i > upper) {
            p.decision = Decision::NonTrivial;
            p.method = Method::Nesting;
        }
        res.provenance.push_back(p);
    }
    return res;
}

GammaResult gamma(const Graph& g, const Domain& domain, const CriticalIdealConfig& config, DecisionCache* cache)
{
    return gamma(to_digraph(g), domain, config, cache);
}

namespace {

template <class D>
std::vector<std::string> basis_text(const PolynomialRing<D>& ring, const std::vector<Polynomial<D>>& basis)
{
    std::vector<std::string> out;
    for (const auto& f : basis) out.push_back(ring.to_string(f));
    return out;
}

template <class D>
std::vector<Polynomial<D>> image(const PolynomialRing<D>& ring, const std::vector<ZPoly>& gens)
{
    std::vector<Polynomial<D>> out;
    for (const auto& g : gens) {
        if constexpr (std::is_same_v<D, RationalField>)
            out.push_back(ring.convert(g, [](const mpz_class& v) { return mpq_class(v); }));
        else
            out.push_back(ring.convert(g, [&](const mpz_class& v) { return ring.domain().from_integer(v); }));
    }
    return out;
}

template <class D>
void fill_field_basis(CriticalIdealBasis& out, const PolynomialRing<D>& ring, const std::vector<ZPoly>& gens,
                      const GroebnerBudget& budget)
{
    GroebnerOptions options;
    options.budget = budget;
    auto r = buchberger(ring, image(ring, gens), options);
    out.basis = basis_text(ring, r.basis.generators);
    if (!r.complete()) {
        out.decision = Decision::Undecided;
        out.note = r.budget_reason;
    } else {
        out.decision = r.trivial() ? Decision::Trivial : Decision::NonTrivial;
    }
}

}  // namespace

CriticalIdealBasis groebner_basis_of_critical_ideal(const Digraph& d, std::size_t i, const Domain& domain,
                                                    MonomialOrder order, const GroebnerBudget& budget)
{
    const std::size_t n = d.order();
    CriticalIdealBasis out;
    out.domain = domain;
    out.i = i;
    const auto minors = minor_generators(SymbolicMatrix(d), i);
    switch (domain.kind) {
    case DomainKind::Rationals:
        fill_field_basis(out, PolynomialRing<RationalField>(RationalField{}, n, order), minors.generators, budget);
        break;
    case DomainKind::PrimeField:
        out.prime = domain.p;
        fill_field_basis(out, PolynomialRing<PrimeField>(PrimeField(domain.p), n, order), minors.generators, budget);
        break;
    case DomainKind::Integers: {
        IntegerTrivialityOptions options;
        options.budget = budget;
        options.build_certificate = false;
        const auto r = is_trivial_over_Z(n, minors.generators, options);
        out.decision = r.decision;
        out.constant = r.constant;
        out.note = r.note;
        if (r.decision == Decision::Trivial) {
            out.basis = {"1"};
        } else if (r.decision == Decision::NonTrivial && r.failing_prime) {
            out.prime = r.failing_prime;
            CriticalIdealBasis mod_p;
            fill_field_basis(mod_p, PolynomialRing<PrimeField>(PrimeField(*r.failing_prime), n, order),
                             minors.generators, budget);
            out.basis = mod_p.basis;
            out.basis.push_back(std::to_string(*r.failing_prime));
        } else if (r.decision == Decision::NonTrivial) {
            CriticalIdealBasis over_q;
            fill_field_basis(over_q, PolynomialRing<RationalField>(RationalField{}, n, order), minors.generators,
                             budget);
            out.basis = over_q.basis;
            out.note = "non-trivial over Q; basis shown over Q";
        }
        break;
    }
    }
    return out;
}

CriticalIdealBasis groebner_basis_of_critical_ideal(const Graph& g, std::size_t i, const Domain& domain,
                                                    MonomialOrder order, const GroebnerBudget& budget)
{
    return groebner_basis_of_critical_ideal(to_digraph(g), i, domain, order, budget);
}

std::optional<bool> critical_ideal_equals(const Digraph& d, std::size_t i, const Domain& domain,
                                          const std::vector<std::string>& others, const GroebnerBudget& budget)
{
    const std::size_t n = d.order();
    const auto minors = minor_generators(SymbolicMatrix(d), i);
    auto field_compare = [&](const auto& ring) -> std::optional<bool> {
        using D = std::decay_t<decltype(ring.domain())>;
        std::vector<Polynomial<D>> theirs;
        for (const auto& s : others) theirs.push_back(ring.parse(s));
        return same_ideal(ring, image(ring, minors.generators), theirs, budget);
    };
    switch (domain.kind) {
    case DomainKind::Rationals: return field_compare(PolynomialRing<RationalField>(RationalField{}, n));
    case DomainKind::PrimeField: return field_compare(PolynomialRing<PrimeField>(PrimeField(domain.p), n));
    case DomainKind::Integers: {
        const PolynomialRing<IntegerRing> zr(IntegerRing{}, n);
        std::optional<mpz_class> prime;
        for (const auto& s : others) {
            const auto f = zr.parse(s);
            if (!f.is_constant() || f.is_zero()) continue;
            const mpz_class c = abs(f.leading_coefficient());
            if (mpz_probab_prime_p(c.get_mpz_t(), 30) > 0) {
                prime = c;
                break;
            }
        }
        if (!prime || !prime->fits_ulong_p()) return std::nullopt;
        bool contains = minors.constant_gcd != 0 && mpz_divisible_p(prime->get_mpz_t(), minors.constant_gcd.get_mpz_t());
        if (!contains) {
            IntegerTrivialityOptions options;
            options.budget = budget;
            options.build_certificate = false;
            const auto r = is_trivial_over_Z(n, minors.generators, options);
            contains = r.constant != 0 && mpz_divisible_p(prime->get_mpz_t(), r.constant.get_mpz_t());
        }
        if (!contains) return std::nullopt;
        return field_compare(PolynomialRing<PrimeField>(PrimeField(prime->get_ui()), n));
    }
    }
    return std::nullopt;
}

std::optional<bool> critical_ideal_equals(const Graph& g, std::size_t i, const Domain& domain,
                                          const std::vector<std::string>& others, const GroebnerBudget& budget)
{
    return critical_ideal_equals(to_digraph(g), i, domain, others, budget);
}

}  // namespace corank
