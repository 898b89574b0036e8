#pragma once

#include <cstdint>
#include <vector>

namespace fatpoints {

/// Binomial coefficient with the vanishing convention: 0 whenever a < b,
/// including negative a. Requires b >= 0. Exact in 64 bits; throws on
/// overflow rather than wrapping.
std::int64_t binomial(std::int64_t a, std::int64_t b);

/// Exponents of a monomial in n+1 variables (length n+1).
using ExponentVector = std::vector<int>;

/// All exponent vectors of length n+1 summing to d, in descending
/// lexicographic order: (d,0,...,0) first, (0,...,0,d) last. This order is
/// fixed; it indexes the columns of every conditions matrix.
std::vector<ExponentVector> monomials(int n, int d);

/// Multi-indices of total order exactly k in n+1 variables, enumerated in
/// the same order as monomials(n, k). Count is binomial(n+k, k).
std::vector<ExponentVector> derivative_multiindices(int n, int k);

/// Visits every subset of {0,...,s-1} with size in [kmin, kmax], ordered by
/// size and lexicographically within a size. The visited vector is scratch
/// storage owned by the enumerator.
template <typename F>
void for_each_subset(int s, int kmin, int kmax, F&& visit) {
    std::vector<int> idx;
    for (int k = kmin; k <= kmax; ++k) {
        if (k == 0) {
            idx.clear();
            visit(static_cast<const std::vector<int>&>(idx));
            continue;
        }
        if (k > s) break;
        idx.resize(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            visit(static_cast<const std::vector<int>&>(idx));
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

/// Materialized form of for_each_subset, for small s.
std::vector<std::vector<int>> subsets(int s, int kmin, int kmax);

}  // namespace fatpoints
