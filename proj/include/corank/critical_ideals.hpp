#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "corank/graph.hpp"
#include "corank/groebner.hpp"
#include "corank/integer_triviality.hpp"
#include "corank/laplacian.hpp"
#include "corank/polynomial.hpp"
#include "corank/rank.hpp"
#include "corank/zero_forcing.hpp"

namespace corank {

enum class DomainKind { Integers, Rationals, PrimeField };

struct Domain {
    DomainKind kind = DomainKind::Rationals;
    std::uint64_t p = 0;

    static Domain integers() { return {DomainKind::Integers, 0}; }
    static Domain rationals() { return {DomainKind::Rationals, 0}; }
    static Domain prime_field(std::uint64_t prime);
    /// "z", "q" or "fp:P".
    static Domain parse(const std::string& text);

    /// "Z", "Q" or "F_p".
    std::string name() const;
    bool operator==(const Domain&) const = default;
};

/// Row and column subsets of an i x i submatrix, as bitmasks.
struct MinorSource {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;

    std::vector<Vertex> row_list() const;
    std::vector<Vertex> col_list() const;
    bool operator==(const MinorSource&) const = default;
};

struct MinorSet {
    std::size_t order = 0;
    /// Nonzero i-minors, deduplicated up to sign, positive leading coefficient.
    std::vector<Polynomial<IntegerRing>> generators;
    /// One submatrix per generator.
    std::vector<MinorSource> sources;
    /// gcd of the nonzero constant minors, 0 when there is none.
    mpz_class constant_gcd = 0;
    std::optional<MinorSource> unit_minor;
    std::optional<MinorSource> constant_minor;
};

inline constexpr std::size_t kMaxMinorMatrixOrder = 16;

/// All i x i minors of the symbolic matrix, expanded over Z.
MinorSet minor_generators(const SymbolicMatrix& m, std::size_t i);

struct IntegerBox {
    std::int64_t lo = -2;
    std::int64_t hi = 2;

    std::size_t width() const { return static_cast<std::size_t>(hi - lo + 1); }
    bool operator==(const IntegerBox&) const = default;
};

/// An evaluation point a with rank L(G, a) = rank, over Q when prime == 0
/// and over F_prime otherwise (coordinates then lie in 0..prime-1).
struct PointWitness {
    std::vector<std::int64_t> point;
    std::uint64_t prime = 0;
    std::size_t rank = 0;
};

struct BoxScan {
    std::optional<PointWitness> best;
    std::size_t scanned = 0;
    /// False when the point budget stopped the scan early.
    bool exhaustive = true;
};

/// Scans box^n by increasing max-norm, then lexicographically, and keeps the
/// first point of minimum rank. Stops as soon as the rank is <= stop_at_rank.
/// A nonzero prime reduces the points modulo that prime.
BoxScan min_rank_scan(const Digraph& d, const IntegerBox& box, std::uint64_t prime, std::size_t stop_at_rank,
                      std::size_t max_points);

/// Every point of F_p^n in lexicographic order of 0..p-1 coordinates.
BoxScan min_rank_scan_mod_p(const Digraph& d, std::uint64_t prime, std::size_t stop_at_rank, std::size_t max_points);

struct BoxSearchResult {
    std::optional<PointWitness> point;
    std::size_t scanned = 0;
    bool exhaustive = true;
};

/// First point of box^n (scan order as above) with rank L(G, a) <= r. The
/// domain selects rational rank (Q, Z) or rank modulo p (F_p).
BoxSearchResult variety_box_search(const Digraph& d, std::size_t r, const IntegerBox& box, const Domain& domain,
                                   std::size_t max_points = 5'000'000);
BoxSearchResult variety_box_search(const Graph& g, std::size_t r, const IntegerBox& box, const Domain& domain,
                                   std::size_t max_points = 5'000'000);

struct CriticalIdealConfig {
    IntegerBox box;
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
    GroebnerBudget budget;
    std::size_t max_box_points = 2'000'000;
    /// F_p^n is scanned exhaustively up to this many points, else box mod p.
    std::size_t max_mod_p_points = 131072;
    /// Minors are expanded only while C(n, i)^2 stays below this.
    std::size_t max_minor_count = 250'000;

    std::string budget_key() const;
};

/// Common zero of all i-minors: rational box points for Q, points over F_p
/// for F_p, and either kind for Z.
std::optional<PointWitness> nontriviality_certificate(const Digraph& d, std::size_t i, const Domain& domain,
                                                      const CriticalIdealConfig& config = {});
std::optional<PointWitness> nontriviality_certificate(const Graph& g, std::size_t i, const Domain& domain,
                                                      const CriticalIdealConfig& config = {});

enum class Method { ZeroForcing, ConstantMinor, Groebner, PointWitness, Structural, Nesting, Undecided };

std::string to_string(Method m);

struct TrivialityDecision {
    Decision decision = Decision::Undecided;
    Method method = Method::Undecided;
    std::optional<MinorSource> minor;
    std::optional<PointWitness> point;
    std::optional<std::uint64_t> failing_prime;
    /// Z decisions: the constant D found in the ideal.
    mpz_class constant = 0;
    std::size_t groebner_runs = 0;
    bool from_cache = false;
    std::string note;
};

/// Thread-safe memo of ideal decisions keyed by (canonical form, i, domain,
/// budget). With a directory, entries persist in decisions.tsv.
class DecisionCache {
public:
    DecisionCache() = default;
    explicit DecisionCache(std::filesystem::path directory);

    std::optional<TrivialityDecision> find(const std::string& key) const;
    void store(const std::string& key, const TrivialityDecision& decision);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    struct Entry {
        Decision decision;
        Method method;
        std::size_t groebner_runs;
    };
    std::map<std::string, Entry> entries_;
    std::optional<std::filesystem::path> file_;
};

std::string cache_key(const Digraph& d, std::size_t i, const Domain& domain, const CriticalIdealConfig& config);

/// Unit constant minor, then a point certificate, then a Groebner decision.
TrivialityDecision ideal_trivial(const Digraph& d, std::size_t i, const Domain& domain,
                                 const CriticalIdealConfig& config = {}, DecisionCache* cache = nullptr);
TrivialityDecision ideal_trivial(const Graph& g, std::size_t i, const Domain& domain,
                                 const CriticalIdealConfig& config = {}, DecisionCache* cache = nullptr);

struct IndexProvenance {
    std::size_t i = 0;
    Decision decision = Decision::Undecided;
    Method method = Method::Undecided;
};

struct GammaResult {
    Domain domain;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::optional<std::size_t> value;

    ForceRecord zero_forcing;
    std::size_t mz = 0;
    /// Constant minor raising the lower bound above mz, if any.
    std::optional<MinorSource> constant_minor;
    /// Point attaining `upper`; absent when the bound is structural (n - 1) or
    /// came from a Groebner decision.
    std::optional<PointWitness> upper_point;

    /// One entry per i = 1..n.
    std::vector<IndexProvenance> provenance;
    std::size_t groebner_runs = 0;
    std::string note;
};

GammaResult gamma(const Digraph& d, const Domain& domain, const CriticalIdealConfig& config = {},
                  DecisionCache* cache = nullptr);
GammaResult gamma(const Graph& g, const Domain& domain, const CriticalIdealConfig& config = {},
                  DecisionCache* cache = nullptr);

/// Reduced basis of I_i for reporting. Over Z the ideal is described by its
/// rational basis, the constant D it contains and its reduction modulo the
/// failing prime.
struct CriticalIdealBasis {
    Domain domain;
    std::size_t i = 0;
    Decision decision = Decision::Undecided;
    std::vector<std::string> basis;
    std::optional<std::uint64_t> prime;
    mpz_class constant = 0;
    std::string note;
};

CriticalIdealBasis groebner_basis_of_critical_ideal(const Digraph& d, std::size_t i, const Domain& domain,
                                                    MonomialOrder order = MonomialOrder::DegRevLex,
                                                    const GroebnerBudget& budget = {});
CriticalIdealBasis groebner_basis_of_critical_ideal(const Graph& g, std::size_t i, const Domain& domain,
                                                    MonomialOrder order = MonomialOrder::DegRevLex,
                                                    const GroebnerBudget& budget = {});

/// Compares I_i(G) with <others> over the domain. Over Z, `others` must
/// contain a prime constant p that also lies in I_i; the comparison then
/// happens modulo p. nullopt when undecidable by these means or on budget.
std::optional<bool> critical_ideal_equals(const Digraph& d, std::size_t i, const Domain& domain,
                                          const std::vector<std::string>& others, const GroebnerBudget& budget = {});
std::optional<bool> critical_ideal_equals(const Graph& g, std::size_t i, const Domain& domain,
                                          const std::vector<std::string>& others, const GroebnerBudget& budget = {});

/// L(G, a) as an integer matrix.
IntMatrix evaluate_laplacian(const Digraph& d, std::span<const std::int64_t> point);

}  // namespace corank
