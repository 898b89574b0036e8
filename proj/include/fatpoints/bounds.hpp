#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/geometry.hpp"

namespace fatpoints {

/// The numeric triple of a linear system L_{n,d}(m_1,...,m_s), independent
/// of point positions. Multiplicities are stored sorted descending.
struct LinearSystemSpec {
    int n = 1;
    int d = 0;
    std::vector<int> mults;

    LinearSystemSpec(int n_, int d_, std::vector<int> mults_);

    int s() const { return static_cast<int>(mults.size()); }
    std::int64_t weight() const;
};

/// max{m1+m2-1, floor(w/2)}; planar bound, m2 = 0 when s = 1.
std::int64_t segre_bound_p2(const std::vector<int>& mults);

/// w - 1; requires w >= 2.
std::int64_t fulton_bound(const std::vector<int>& mults);

/// max{m1+m2-1, floor((w+n-2)/n)}; m2 = 0 when s = 1.
std::int64_t segre_bound_pn(int n, const std::vector<int>& mults);

/// floor((w_L + r - 2)/r) for r = dim L >= 1.
std::int64_t T_of(const FatPointScheme& Z, const LinearSpan& L);

/// max of T over the ambient space and the spans of all support subsets of
/// size 2..n+1 (spans attain the maximum over arbitrary subspaces: any L
/// satisfies w_L = w_span(S cap L) with dim span <= dim L, and T decreases
/// in the dimension at fixed weight). Guard s <= 16.
std::int64_t generalized_segre_bound(const FatPointScheme& Z);

/// C(n+d,n) - sum C(n+m_i-1,n); may be negative.
std::int64_t vdim(const LinearSystemSpec& L);
std::int64_t edim(const LinearSystemSpec& L);

/// k_I = max(m_{i_1}+...+m_{i_{r+1}} - r d, 0) with r = |I| - 1; the empty
/// set has r = -1 and k = d.
std::int64_t k_of(const LinearSystemSpec& L, const std::vector<int>& I);

/// Alternating sum over all support subsets of (-1)^{r+1} C(n+k_I-r-1, n)
/// with the vanishing binomial convention. Guard s <= 20 (2^s subsets).
std::int64_t lvdim(const LinearSystemSpec& L);

/// max(lvdim, 0). The definition's containment clause (force 0 when the
/// system sits inside one of non-positive linear virtual dimension) is not
/// decidable from the numeric triple alone, so the flag is always raised.
struct LdimValue {
    std::int64_t value = 0;
    bool containment_clause_unchecked = true;
};
LdimValue ldim(const LinearSystemSpec& L);

/// Number of multiplicities equal to d.
int s_of_d(const LinearSystemSpec& L);

/// min{n - s(d), s - n - 2}; may be negative.
int b_of(const LinearSystemSpec& L);

/// min{n, s - n - 2}; requires s >= n + 3.
int c_of(const LinearSystemSpec& L);

struct BdpCheck {
    bool applicable = false;
    std::string reason;  // first failed hypothesis when not applicable
};
/// Hypotheses of the linear-obstruction theorem: s >= n+3, n >= 1, d >= 2,
/// d >= m_1 >= ... >= m_s >= 1 and w <= nd + b.
BdpCheck bdp_applicable(const LinearSystemSpec& L);

/// max{m1+m2-1, ceil((w-c)/n)}; requires s >= n+3.
std::int64_t bdp_bound(int n, const std::vector<int>& mults);

/// Second terms of the two regularity bounds as offsets from mu, where
/// w = mu n + lambda and 0 <= lambda <= n-1, produced by the tabulated case
/// split on (lambda, s). Requires s >= n+4.
struct BoundComparisonRow {
    std::int64_t mu = 0;
    int lambda = 0;
    int segre_offset = 0;  // second term of the Segre bound minus mu
    int bdp_offset = 0;    // second term of the improved bound minus mu
};
BoundComparisonRow compare_bounds(int n, int s, std::int64_t w);

/// For t >= 2, z > z1 >= ... >= zt > 0 and eta = z + z1 + 1:
/// z + z1 + ... + zt <= (t+1)/2 eta - t        when eta is even,
/// z + z1 + ... + zt <= (t+1)/2 eta - (t-1)/2  when eta is odd.
bool multiplicity_sum_inequality(int z, const std::vector<int>& zs);

/// Exhaustive check of the inequality over 2 <= t <= t_max and all
/// admissible tuples with z <= z_max. Returns the number of cases tested,
/// or -1 as soon as one fails.
std::int64_t multiplicity_sum_inequality_exhaustive(int t_max, int z_max);

/// All bounds applicable to one scheme plus the measured regularity index.
struct BoundReport {
    std::uint32_t prime = 0;
    int n = 0;
    int s = 0;
    std::int64_t weight = 0;
    int measured_reg = 0;
    std::optional<std::int64_t> segre_p2;           // n == 2 only
    std::optional<std::int64_t> fulton;             // w >= 2
    std::optional<std::int64_t> segre_pn;
    std::optional<std::int64_t> generalized_segre;  // absent beyond the s <= 16 guard
    std::optional<std::int64_t> bdp;                // s >= n+3
    bool holds(std::int64_t bound) const { return measured_reg <= bound; }
};

/// Measures the regularity index and evaluates every applicable bound.
/// Reported bounds are clamped to >= 1 (the regularity index is at least 1
/// by definition). Implemented alongside the cohomology module.
BoundReport bound_report(const FatPointScheme& Z);

}  // namespace fatpoints
