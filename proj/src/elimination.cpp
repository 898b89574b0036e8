#include "fatpoints/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <limits>

namespace fatpoints {

DenseMatrix transpose(const DenseMatrix& m) {
    DenseMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

DenseMatrix vstack(const DenseMatrix& top, const DenseMatrix& bottom) {
    if (top.rows && bottom.rows && top.cols != bottom.cols)
        throw std::invalid_argument("vstack: column count mismatch");
    DenseMatrix r(top.rows + bottom.rows, top.rows ? top.cols : bottom.cols);
    std::copy(top.a.begin(), top.a.end(), r.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), r.a.begin() + top.a.size());
    return r;
}

namespace {

// Below this many touched entries the parallel-for is pure overhead.
constexpr std::size_t kParallelCutoff = 1u << 14;

// Each AXPY adds at most (p-1)^2 to an entry that starts below p, so a row
// can absorb this many eliminations before a mod-p sweep is required.
std::uint64_t axpy_budget(std::uint32_t p) {
    const std::uint64_t step = std::uint64_t(p - 1) * (p - 1);
    return (std::numeric_limits<std::uint64_t>::max() - p) / step;
}

std::vector<std::size_t> eliminate(std::vector<std::uint64_t>& w,
                                   std::size_t rows, std::size_t cols,
                                   const FieldContext& F, bool rref) {
    const std::uint64_t p = F.p();
    const std::uint64_t budget = axpy_budget(F.p());
    std::vector<std::size_t> pivots;
    if (rows == 0 || cols == 0) return pivots;

    std::uint64_t steps = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            w[i * cols + c] %= p;
            if (w[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t x = c; x < cols; ++x)
                std::swap(w[r * cols + x], w[piv * cols + x]);

        std::uint64_t* prow = &w[r * cols];
        const std::uint64_t inv = F.inv(static_cast<std::uint32_t>(prow[c]));
        for (std::size_t x = c; x < cols; ++x) prow[x] = prow[x] % p * inv % p;

        const auto lo = static_cast<std::int64_t>(r) + 1;
        const auto hi = static_cast<std::int64_t>(rows);
        const bool big = std::size_t(hi - lo) * (cols - c) >= kParallelCutoff;
#pragma omp parallel for schedule(static) if (big)
        for (std::int64_t j = lo; j < hi; ++j) {
            std::uint64_t* row = &w[std::size_t(j) * cols];
            const std::uint64_t f = row[c] % p;
            if (f == 0) {
                row[c] = 0;
                continue;
            }
            const std::uint64_t g = p - f;
            for (std::size_t x = c; x < cols; ++x) row[x] += g * prow[x];
        }
        pivots.push_back(c);
        ++r;
        if (++steps >= budget) {  // reachable only for primes near 2^31
            for (std::size_t i = r; i < rows; ++i)
                for (std::size_t x = c; x < cols; ++x) w[i * cols + x] %= p;
            steps = 0;
        }
    }

    if (rref) {
        steps = 0;
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t c = pivots[k];
            // the pivot row may have absorbed earlier back-steps: sweep it
            // so the AXPY growth bound stays linear
            std::uint64_t* prow = &w[k * cols];
            for (std::size_t x = c; x < cols; ++x) prow[x] %= p;

            const bool big = k * (cols - c) >= kParallelCutoff;
#pragma omp parallel for schedule(static) if (big)
            for (std::int64_t j = 0; j < static_cast<std::int64_t>(k); ++j) {
                std::uint64_t* row = &w[std::size_t(j) * cols];
                const std::uint64_t f = row[c] % p;
                if (f == 0) {
                    row[c] = 0;
                    continue;
                }
                const std::uint64_t g = p - f;
                for (std::size_t x = c; x < cols; ++x) row[x] += g * prow[x];
            }
            if (++steps >= budget) {
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t x = 0; x < cols; ++x) w[i * cols + x] %= p;
                steps = 0;
            }
        }
        for (auto& v : w) v %= p;
    }
    return pivots;
}

std::vector<std::uint64_t> widen(const DenseMatrix& m, const FieldContext& F) {
    std::vector<std::uint64_t> w(m.a.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = m.a[i] % F.p();
    return w;
}

}  // namespace

std::size_t rank(const DenseMatrix& m, const FieldContext& F) {
    auto w = widen(m, F);
    return eliminate(w, m.rows, m.cols, F, false).size();
}

RowReduceResult row_reduce(const DenseMatrix& m, const FieldContext& F) {
    auto w = widen(m, F);
    RowReduceResult res;
    res.pivots = eliminate(w, m.rows, m.cols, F, true);
    res.reduced = DenseMatrix(m.rows, m.cols);
    for (std::size_t i = 0; i < w.size(); ++i)
        res.reduced.a[i] = static_cast<std::uint32_t>(w[i]);
    return res;
}

namespace {

std::vector<std::size_t> eliminate_serial(std::vector<std::uint32_t>& w,
                                          std::size_t rows, std::size_t cols,
                                          const FieldContext& F, bool rref) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (w[i * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t x = 0; x < cols; ++x)
                std::swap(w[r * cols + x], w[piv * cols + x]);
        const std::uint32_t inv = F.inv(w[r * cols + c]);
        for (std::size_t x = c; x < cols; ++x)
            w[r * cols + x] = F.mul(w[r * cols + x], inv);
        for (std::size_t j = r + 1; j < rows; ++j) {
            const std::uint32_t f = w[j * cols + c];
            if (f == 0) continue;
            for (std::size_t x = c; x < cols; ++x)
                w[j * cols + x] = F.sub(w[j * cols + x], F.mul(f, w[r * cols + x]));
        }
        pivots.push_back(c);
        ++r;
    }
    if (rref) {
        for (std::size_t k = pivots.size(); k-- > 0;) {
            const std::size_t c = pivots[k];
            for (std::size_t j = 0; j < k; ++j) {
                const std::uint32_t f = w[j * cols + c];
                if (f == 0) continue;
                for (std::size_t x = c; x < cols; ++x)
                    w[j * cols + x] = F.sub(w[j * cols + x], F.mul(f, w[k * cols + x]));
            }
        }
    }
    return pivots;
}

}  // namespace

std::size_t rank_serial(const DenseMatrix& m, const FieldContext& F) {
    std::vector<std::uint32_t> w(m.a);
    for (auto& v : w) v %= F.p();
    return eliminate_serial(w, m.rows, m.cols, F, false).size();
}

RowReduceResult row_reduce_serial(const DenseMatrix& m, const FieldContext& F) {
    std::vector<std::uint32_t> w(m.a);
    for (auto& v : w) v %= F.p();
    RowReduceResult res;
    res.pivots = eliminate_serial(w, m.rows, m.cols, F, true);
    res.reduced = DenseMatrix(m.rows, m.cols);
    res.reduced.a = std::move(w);
    return res;
}

}  // namespace fatpoints
