#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fatpoints/field.hpp"

namespace fatpoints {

/// Dense row-major matrix of canonical residues in [0, p).
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

DenseMatrix transpose(const DenseMatrix& m);
DenseMatrix vstack(const DenseMatrix& top, const DenseMatrix& bottom);

struct RowReduceResult {
    DenseMatrix reduced;              // reduced row echelon form, same shape
    std::vector<std::size_t> pivots;  // pivot column indices, ascending
};

/// Rank by Gauss elimination with first-nonzero pivoting.
///
/// Row updates run under OpenMP and use delayed reduction (entries are
/// accumulated in 64 bits and swept mod p only when the accumulated slack
/// could overflow, which for p = 32749 is never at desk scale). The result
/// is bit-identical to the serial reference for any thread count.
std::size_t rank(const DenseMatrix& m, const FieldContext& F);

/// Reduced row echelon form; row space is preserved and the output is the
/// canonical representative of it (used to compare linear spans).
RowReduceResult row_reduce(const DenseMatrix& m, const FieldContext& F);

/// Textbook serial elimination, reducing after every operation. Kept as the
/// reference implementation for the tests and the benchmark.
std::size_t rank_serial(const DenseMatrix& m, const FieldContext& F);
RowReduceResult row_reduce_serial(const DenseMatrix& m, const FieldContext& F);

}  // namespace fatpoints
