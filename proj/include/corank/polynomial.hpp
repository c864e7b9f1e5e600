#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace corank {

inline constexpr std::size_t kMaxVariables = 16;

enum class MonomialOrder { DegRevLex, Lex, GrLex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(const std::string& text);

struct Monomial {
    std::array<std::uint8_t, kMaxVariables> exp{};
    std::uint32_t degree = 0;

    bool operator==(const Monomial&) const = default;

    static Monomial variable(std::size_t i, unsigned power = 1)
    {
        if (i >= kMaxVariables) throw std::out_of_range("variable index exceeds kMaxVariables");
        if (power > 255) throw std::overflow_error("monomial exponent overflow");
        Monomial m;
        m.exp[i] = static_cast<std::uint8_t>(power);
        m.degree = power;
        return m;
    }

    bool is_one() const { return degree == 0; }

    bool divides(const Monomial& other) const
    {
        if (degree > other.degree) return false;
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (exp[i] > other.exp[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const
    {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            const unsigned e = unsigned{exp[i]} + other.exp[i];
            if (e > 255) throw std::overflow_error("monomial exponent overflow");
            m.exp[i] = static_cast<std::uint8_t>(e);
        }
        m.degree = degree + other.degree;
        return m;
    }

    /// Requires other.divides(*this).
    Monomial operator/(const Monomial& other) const
    {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) m.exp[i] = static_cast<std::uint8_t>(exp[i] - other.exp[i]);
        m.degree = degree - other.degree;
        return m;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b)
    {
        Monomial m;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            m.exp[i] = std::max(a.exp[i], b.exp[i]);
            m.degree += m.exp[i];
        }
        return m;
    }

    static bool coprime(const Monomial& a, const Monomial& b)
    {
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (a.exp[i] && b.exp[i]) return false;
        return true;
    }
};

/// Negative, zero or positive as a < b, a == b, a > b.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order)
{
    switch (order) {
    case MonomialOrder::DegRevLex:
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        for (std::size_t i = kMaxVariables; i-- > 0;)
            if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
        return 0;
    case MonomialOrder::GrLex:
        if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
        [[fallthrough]];
    case MonomialOrder::Lex:
        for (std::size_t i = 0; i < kMaxVariables; ++i)
            if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
        return 0;
    }
    return 0;
}

struct RationalField {
    using Element = mpq_class;
    static constexpr bool is_field = true;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_integer(const mpz_class& v) const { return Element(v); }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const
    {
        if (is_zero(a)) throw std::domain_error("division by zero");
        return 1 / a;
    }
    bool is_negative(const Element& a) const { return sgn(a) < 0; }
    std::string to_string(const Element& a) const { return a.get_str(); }
    Element parse(const std::string& text) const
    {
        Element v(text);
        v.canonicalize();
        return v;
    }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const = default;
};

struct PrimeField {
    using Element = std::uint64_t;
    static constexpr bool is_field = true;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime)
    {
        if (prime < 2 || prime >= (std::uint64_t{1} << 63)) throw std::invalid_argument("prime out of range");
    }

    Element zero() const { return 0; }
    Element one() const { return 1 % p; }
    Element from_integer(const mpz_class& v) const
    {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        return r.get_ui();
    }
    Element from_int(std::int64_t v) const
    {
        const auto m = static_cast<std::int64_t>(p);
        std::int64_t r = v % m;
        return static_cast<Element>(r < 0 ? r + m : r);
    }
    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    Element add(Element a, Element b) const
    {
        const Element s = a + b;
        return s >= p ? s - p : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p - b); }
    Element mul(Element a, Element b) const
    {
        return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p - a; }
    Element inv(Element a) const
    {
        if (a == 0) throw std::domain_error("division by zero");
        std::int64_t t = 0, new_t = 1;
        std::uint64_t r = p, new_r = a;
        while (new_r) {
            const std::uint64_t q = r / new_r;
            std::tie(t, new_t) = std::make_pair(new_t, static_cast<std::int64_t>(t - static_cast<std::int64_t>(q) * new_t));
            std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
        }
        if (r != 1) throw std::domain_error("modulus is not prime");
        return t < 0 ? static_cast<Element>(t + static_cast<std::int64_t>(p)) : static_cast<Element>(t);
    }
    bool is_negative(Element) const { return false; }
    std::string to_string(Element a) const { return std::to_string(a); }
    Element parse(const std::string& text) const
    {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return from_integer(mpz_class(text));
        return mul(from_integer(mpz_class(text.substr(0, slash))), inv(from_integer(mpz_class(text.substr(slash + 1)))));
    }
    std::string name() const { return "F_" + std::to_string(p); }
    bool operator==(const PrimeField&) const = default;
};

/// Ring operations only; no inverses.
struct IntegerRing {
    using Element = mpz_class;
    static constexpr bool is_field = false;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_integer(const mpz_class& v) const { return v; }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    bool is_negative(const Element& a) const { return sgn(a) < 0; }
    std::string to_string(const Element& a) const { return a.get_str(); }
    Element parse(const std::string& text) const { return Element(text); }
    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const = default;
};

template <class D>
struct Term {
    Monomial monomial;
    typename D::Element coefficient;
};

/// Terms are strictly decreasing under the owning ring's order; no zero
/// coefficients are stored.
template <class D>
struct Polynomial {
    std::vector<Term<D>> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const { return terms.empty() || (terms.size() == 1 && terms[0].monomial.is_one()); }
    const Monomial& leading_monomial() const { return terms.front().monomial; }
    const typename D::Element& leading_coefficient() const { return terms.front().coefficient; }
    std::size_t size() const { return terms.size(); }
    std::uint32_t degree() const
    {
        std::uint32_t d = 0;
        for (const auto& t : terms) d = std::max(d, t.monomial.degree);
        return d;
    }
    bool operator==(const Polynomial& other) const
    {
        if (terms.size() != other.terms.size()) return false;
        for (std::size_t i = 0; i < terms.size(); ++i)
            if (!(terms[i].monomial == other.terms[i].monomial) || terms[i].coefficient != other.terms[i].coefficient)
                return false;
        return true;
    }
};

template <class D>
class PolynomialRing {
public:
    using Element = typename D::Element;
    using Poly = Polynomial<D>;

    PolynomialRing(D domain, std::size_t variables, MonomialOrder order = MonomialOrder::DegRevLex)
        : domain_(std::move(domain)), variables_(variables), order_(order)
    {
        if (variables > kMaxVariables) throw std::out_of_range("too many variables");
    }

    const D& domain() const { return domain_; }
    std::size_t variables() const { return variables_; }
    MonomialOrder order() const { return order_; }

    int cmp(const Monomial& a, const Monomial& b) const { return compare(a, b, order_); }

    Poly zero() const { return {}; }
    Poly constant(const Element& c) const
    {
        Poly p;
        if (!domain_.is_zero(c)) p.terms.push_back({Monomial{}, c});
        return p;
    }
    Poly one() const { return constant(domain_.one()); }
    Poly variable(std::size_t i) const
    {
        if (i >= variables_) throw std::out_of_range("variable index out of range");
        Poly p;
        p.terms.push_back({Monomial::variable(i), domain_.one()});
        return p;
    }
    Poly term(const Monomial& m, const Element& c) const
    {
        Poly p;
        if (!domain_.is_zero(c)) p.terms.push_back({m, c});
        return p;
    }

    /// Sorts, merges equal monomials and drops zeros.
    Poly from_terms(std::vector<Term<D>> terms) const
    {
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<D>& a, const Term<D>& b) { return cmp(a.monomial, b.monomial) > 0; });
        Poly p;
        for (auto& t : terms) {
            if (!p.terms.empty() && p.terms.back().monomial == t.monomial) {
                p.terms.back().coefficient = domain_.add(p.terms.back().coefficient, t.coefficient);
                if (domain_.is_zero(p.terms.back().coefficient)) p.terms.pop_back();
            } else if (!domain_.is_zero(t.coefficient)) {
                p.terms.push_back(std::move(t));
            }
        }
        return p;
    }

    /// f + c * m * g.
    Poly add_scaled(const Poly& f, const Element& c, const Monomial& m, const Poly& g) const
    {
        if (domain_.is_zero(c) || g.is_zero()) return f;
        Poly out;
        out.terms.reserve(f.terms.size() + g.terms.size());
        std::size_t i = 0, j = 0;
        Monomial gm;
        bool have_gm = false;
        while (i < f.terms.size() || j < g.terms.size()) {
            if (j < g.terms.size() && !have_gm) {
                gm = g.terms[j].monomial * m;
                have_gm = true;
            }
            int side;
            if (i == f.terms.size()) side = 1;
            else if (j == g.terms.size()) side = -1;
            else side = -cmp(f.terms[i].monomial, gm);
            if (side < 0) {
                out.terms.push_back(f.terms[i++]);
            } else if (side > 0) {
                out.terms.push_back({gm, domain_.mul(c, g.terms[j].coefficient)});
                ++j;
                have_gm = false;
            } else {
                auto v = domain_.add(f.terms[i].coefficient, domain_.mul(c, g.terms[j].coefficient));
                if (!domain_.is_zero(v)) out.terms.push_back({gm, std::move(v)});
                ++i;
                ++j;
                have_gm = false;
            }
        }
        return out;
    }

    Poly add(const Poly& f, const Poly& g) const { return add_scaled(f, domain_.one(), Monomial{}, g); }
    Poly sub(const Poly& f, const Poly& g) const { return add_scaled(f, domain_.neg(domain_.one()), Monomial{}, g); }
    Poly neg(const Poly& f) const { return scale(f, domain_.neg(domain_.one())); }

    Poly scale(const Poly& f, const Element& c) const
    {
        if (domain_.is_zero(c)) return {};
        Poly out = f;
        for (auto& t : out.terms) t.coefficient = domain_.mul(t.coefficient, c);
        if constexpr (!D::is_field) {
            std::erase_if(out.terms, [&](const Term<D>& t) { return domain_.is_zero(t.coefficient); });
        }
        return out;
    }

    Poly mul_term(const Poly& f, const Monomial& m, const Element& c) const
    {
        if (domain_.is_zero(c)) return {};
        Poly out;
        out.terms.reserve(f.terms.size());
        for (const auto& t : f.terms) {
            auto v = domain_.mul(t.coefficient, c);
            if (!domain_.is_zero(v)) out.terms.push_back({t.monomial * m, std::move(v)});
        }
        return out;
    }

    Poly mul(const Poly& f, const Poly& g) const
    {
        if (f.terms.size() > g.terms.size()) return mul(g, f);
        Poly out;
        for (const auto& t : f.terms) out = add_scaled(out, t.coefficient, t.monomial, g);
        return out;
    }

    Poly pow(const Poly& f, unsigned e) const
    {
        Poly result = one();
        for (unsigned k = 0; k < e; ++k) result = mul(result, f);
        return result;
    }

    Poly make_monic(const Poly& f) const
    {
        static_assert(D::is_field, "make_monic needs a field");
        if (f.is_zero() || domain_.is_one(f.leading_coefficient())) return f;
        return scale(f, domain_.inv(f.leading_coefficient()));
    }

    Element evaluate(const Poly& f, std::span<const Element> point) const
    {
        Element total = domain_.zero();
        for (const auto& t : f.terms) {
            Element v = t.coefficient;
            for (std::size_t i = 0; i < variables_; ++i)
                for (unsigned e = 0; e < t.monomial.exp[i]; ++e) v = domain_.mul(v, point[i]);
            total = domain_.add(total, v);
        }
        return total;
    }

    /// Image of a polynomial from another ring with the same variables.
    template <class D2, class Map>
    Poly convert(const Polynomial<D2>& f, Map&& map_coefficient) const
    {
        std::vector<Term<D>> terms;
        terms.reserve(f.terms.size());
        for (const auto& t : f.terms) terms.push_back({t.monomial, map_coefficient(t.coefficient)});
        return from_terms(std::move(terms));
    }

    std::string to_string(const Poly& f) const
    {
        if (f.is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : f.terms) {
            bool negative = domain_.is_negative(t.coefficient);
            Element magnitude = negative ? domain_.neg(t.coefficient) : t.coefficient;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            const std::string mono = monomial_string(t.monomial);
            if (mono.empty()) {
                out += domain_.to_string(magnitude);
            } else {
                if (!domain_.is_one(magnitude)) out += domain_.to_string(magnitude) + "*";
                out += mono;
            }
        }
        return out;
    }

    std::string monomial_string(const Monomial& m) const
    {
        std::string out;
        for (std::size_t i = 0; i < kMaxVariables; ++i) {
            if (!m.exp[i]) continue;
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(i);
            if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
        }
        return out;
    }

    /// Accepts sums of terms such as "x0*x1 - x1 - 2", "3*x5^2", "-x0 + 1/2".
    Poly parse(const std::string& text) const
    {
        std::vector<Term<D>> terms;
        std::size_t pos = 0;
        auto skip = [&] {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        };
        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
        };
        skip();
        if (pos == text.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos == text.size()) break;
            bool negative = false;
            if (text[pos] == '+' || text[pos] == '-') {
                negative = text[pos] == '-';
                ++pos;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            Element coefficient = domain_.one();
            Monomial mono;
            bool have_factor = false;
            while (true) {
                skip();
                if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    const std::size_t start = pos;
                    while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                        ++pos;
                    coefficient = domain_.mul(coefficient, domain_.parse(text.substr(start, pos - start)));
                } else if (pos < text.size() && text[pos] == 'x') {
                    ++pos;
                    const std::size_t start = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (start == pos) fail("expected variable index");
                    const std::size_t var = std::stoul(text.substr(start, pos - start));
                    if (var >= variables_) fail("variable index out of range");
                    unsigned power = 1;
                    skip();
                    if (pos < text.size() && text[pos] == '^') {
                        ++pos;
                        skip();
                        const std::size_t pstart = pos;
                        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                        if (pstart == pos) fail("expected exponent");
                        power = static_cast<unsigned>(std::stoul(text.substr(pstart, pos - pstart)));
                    }
                    mono = mono * Monomial::variable(var, power);
                } else {
                    fail("expected coefficient or variable");
                }
                have_factor = true;
                skip();
                if (pos < text.size() && text[pos] == '*') {
                    ++pos;
                    continue;
                }
                break;
            }
            if (!have_factor) fail("empty term");
            if (negative) coefficient = domain_.neg(coefficient);
            terms.push_back({mono, coefficient});
        }
        return from_terms(std::move(terms));
    }

private:
    D domain_;
    std::size_t variables_;
    MonomialOrder order_;
};

inline std::string to_string(MonomialOrder order)
{
    switch (order) {
    case MonomialOrder::DegRevLex: return "degrevlex";
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::GrLex: return "grlex";
    }
    return "?";
}

inline MonomialOrder parse_monomial_order(const std::string& text)
{
    if (text == "degrevlex" || text == "grevlex") return MonomialOrder::DegRevLex;
    if (text == "lex") return MonomialOrder::Lex;
    if (text == "grlex" || text == "deglex") return MonomialOrder::GrLex;
    throw std::invalid_argument("unknown monomial order: " + text);
}

}  // namespace corank
