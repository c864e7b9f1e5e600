#include "corank/rank.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace corank {

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> values)
    : rows(r), cols(c), data(std::move(values))
{
    if (data.size() != r * c) throw std::invalid_argument("matrix data has wrong size");
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_set, std::span<const std::size_t> col_set) const
{
    IntMatrix out(row_set.size(), col_set.size());
    for (std::size_t i = 0; i < row_set.size(); ++i)
        for (std::size_t j = 0; j < col_set.size(); ++j) out(i, j) = (*this)(row_set[i], col_set[j]);
    return out;
}

namespace {

struct Overflow {};

struct Int64Ops {
    using T = std::int64_t;
    static T from(std::int64_t v) { return v; }
    static bool is_zero(T v) { return v == 0; }
    // (a*d - b*c) / e, exact.
    static T step(T a, T d, T b, T c, T e)
    {
        __int128 v = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
        v /= e;
        if (v > INT64_MAX || v < INT64_MIN) throw Overflow{};
        return static_cast<T>(v);
    }
};

struct MpzOps {
    using T = mpz_class;
    static T from(std::int64_t v) { return T(static_cast<long>(v)); }
    static bool is_zero(const T& v) { return sgn(v) == 0; }
    static T step(const T& a, const T& d, const T& b, const T& c, const T& e)
    {
        T v = a * d - b * c;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), e.get_mpz_t());
        return v;
    }
};

template <class Ops>
RankComputation bareiss_rank(std::size_t rows, std::size_t cols, std::vector<typename Ops::T> a,
                             typename Ops::T* det_out = nullptr)
{
    using T = typename Ops::T;
    std::vector<std::size_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = i;
    RankComputation rc;
    T prev = Ops::from(1);
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && Ops::is_zero(a[piv * cols + c])) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
            std::swap(order[piv], order[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i * cols + j] = Ops::step(a[r * cols + c], a[i * cols + j], a[i * cols + c], a[r * cols + j], prev);
            a[i * cols + c] = Ops::from(0);
        }
        prev = a[r * cols + c];
        rc.pivot_rows.push_back(order[r]);
        rc.pivot_cols.push_back(c);
        ++r;
    }
    rc.rank = r;
    if (det_out) {
        if (rows != cols || r < rows) *det_out = Ops::from(0);
        else *det_out = sign < 0 ? T(-prev) : prev;
    }
    std::sort(rc.pivot_rows.begin(), rc.pivot_rows.end());
    return rc;
}

std::vector<mpz_class> to_mpz(const IntMatrix& m)
{
    std::vector<mpz_class> out;
    out.reserve(m.data.size());
    for (auto v : m.data) out.emplace_back(static_cast<long>(v));
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

RankComputation eliminate_mod_p(const IntMatrix& m, std::uint64_t p, std::uint64_t* det_out)
{
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    const std::size_t rows = m.rows, cols = m.cols;
    std::vector<std::uint64_t> a(m.data.size());
    const auto sp = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t v = m.data[i] % sp;
        a[i] = static_cast<std::uint64_t>(v < 0 ? v + sp : v);
    }
    std::vector<std::size_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i) order[i] = i;
    RankComputation rc;
    std::uint64_t det = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
            std::swap(order[piv], order[r]);
            det = det == 0 ? 0 : p - det;
        }
        const std::uint64_t pv = a[r * cols + c];
        det = mulmod(det, pv, p);
        const std::uint64_t inv = powmod(pv, p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = mulmod(a[i * cols + c], inv, p);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t sub = mulmod(f, a[r * cols + j], p);
                a[i * cols + j] = a[i * cols + j] >= sub ? a[i * cols + j] - sub : a[i * cols + j] + p - sub;
            }
        }
        rc.pivot_rows.push_back(order[r]);
        rc.pivot_cols.push_back(c);
        ++r;
    }
    rc.rank = r;
    std::sort(rc.pivot_rows.begin(), rc.pivot_rows.end());
    if (det_out) *det_out = (rows == cols && r == rows) ? det : 0;
    return rc;
}

}  // namespace

RankComputation exact_rank(const IntMatrix& m)
{
    try {
        return bareiss_rank<Int64Ops>(m.rows, m.cols, m.data);
    } catch (const Overflow&) {
        return bareiss_rank<MpzOps>(m.rows, m.cols, to_mpz(m));
    }
}

RankComputation exact_rank(const RationalMatrix& m)
{
    if (m.data.size() != m.rows * m.cols) throw std::invalid_argument("matrix data has wrong size");
    std::vector<mpz_class> a(m.data.size());
    for (std::size_t i = 0; i < m.rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.data[i * m.cols + j].get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols; ++j) {
            const mpq_class& q = m.data[i * m.cols + j];
            a[i * m.cols + j] = q.get_num() * (l / q.get_den());
        }
    }
    return bareiss_rank<MpzOps>(m.rows, m.cols, std::move(a));
}

RankComputation rank_mod_p(const IntMatrix& m, std::uint64_t p) { return eliminate_mod_p(m, p, nullptr); }

mpz_class determinant(const IntMatrix& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    if (m.rows == 0) return 1;
    try {
        std::int64_t det = 0;
        bareiss_rank<Int64Ops>(m.rows, m.cols, m.data, &det);
        return mpz_class(static_cast<long>(det));
    } catch (const Overflow&) {
        mpz_class det;
        bareiss_rank<MpzOps>(m.rows, m.cols, to_mpz(m), &det);
        return det;
    }
}

std::uint64_t determinant_mod_p(const IntMatrix& m, std::uint64_t p)
{
    if (m.rows != m.cols) throw std::invalid_argument("determinant needs a square matrix");
    std::uint64_t det = 0;
    eliminate_mod_p(m, p, &det);
    return m.rows == 0 ? 1 % p : det;
}

std::string to_string(const RationalMatrix& m)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ' ';
            const mpq_class& q = m.data[i * m.cols + j];
            out << q.get_num().get_str() << '/' << q.get_den().get_str();
        }
        out << '\n';
    }
    return out.str();
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace corank
