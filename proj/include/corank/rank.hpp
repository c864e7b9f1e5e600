#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace corank {

/// Rank with a witness: the submatrix on pivot_rows x pivot_cols is
/// nonsingular and has order `rank`.
struct RankComputation {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
};

/// Dense row-major integer matrix.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    IntMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> values);

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    IntMatrix submatrix(std::span<const std::size_t> row_set, std::span<const std::size_t> col_set) const;
};

/// Rational matrix given as row-major entries.
struct RationalMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpq_class> data;
};

/// Fraction-free elimination; int64 arithmetic with a GMP restart on overflow.
RankComputation exact_rank(const IntMatrix& m);
RankComputation exact_rank(const RationalMatrix& m);

RankComputation rank_mod_p(const IntMatrix& m, std::uint64_t p);

mpz_class determinant(const IntMatrix& m);
std::uint64_t determinant_mod_p(const IntMatrix& m, std::uint64_t p);

/// "p/q" strings, row-major, rows separated by newlines.
std::string to_string(const RationalMatrix& m);
std::string to_string(const IntMatrix& m);

}  // namespace corank
