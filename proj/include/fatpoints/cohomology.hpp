#pragma once

#include <cstdint>
#include <vector>

#include "fatpoints/bounds.hpp"
#include "fatpoints/geometry.hpp"
#include "fatpoints/matrix.hpp"

namespace fatpoints {

/// Cohomology of I_Z(d) for one degree. Always satisfies
///   h0 = C(n+d,n) - rank,  h1 = deg Z - rank,  hilbert = rank,
/// and the Euler identity h0 - h1 = C(n+d,n) - deg Z.
struct CohomologyReport {
    int degree = 0;
    std::int64_t rank = 0;
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t hilbert = 0;
    std::int64_t deg_scheme = 0;
    std::uint32_t prime = 0;
};

/// deg Z = sum C(n + m_i - 1, n), the number of conditions the scheme
/// imposes when they are independent.
std::int64_t scheme_degree(const FatPointScheme& Z);

/// Interpolation conditions matrix at degree d: one row per point per
/// derivative multi-index of order exactly k_i = min(m_i - 1, d), one column
/// per degree-d monomial in the fixed enumeration order. Entry = value at
/// the point of that partial derivative of the column monomial.
///
/// Only top-order partials are imposed; for p > d the Euler relation
/// sum_j x_j d_j(d^a F) = (d - |a|) d^a F propagates their vanishing to all
/// lower orders, so the kernel is exactly the degree-d part of the ideal.
/// Requires p > d (enforced). Capping k_i at d avoids identically zero rows
/// when a multiplicity exceeds d + 1; deg Z still counts the true m_i.
DenseMatrix conditions_matrix(const FatPointScheme& Z, int d);

CohomologyReport cohomology(const FatPointScheme& Z, int d);

/// Exact, but cheaper than a full report: when C(n+d,n) < deg Z the rank
/// bound already forces h1 > 0 and no matrix is built.
bool h1_positive(const FatPointScheme& Z, int d);

/// Smallest d >= 1 with h1(I_Z(d)) = 0. The search starts at
/// max(1, max_mult - 1) and must terminate by max(1, w - 1); failure to do
/// so signals a kernel bug and throws. With paranoid set, vanishing at d+1
/// is verified as well.
int regularity_index(const FatPointScheme& Z, bool paranoid = false);

/// Affine dimension of L_{n,d}(m_1,...,m_s) at the given points (= h0).
std::int64_t system_dimension(const LinearSystemSpec& spec,
                              const std::vector<PrimePoint>& points,
                              const FieldContext& F);

/// Cohomology of the trace Z cap L viewed inside L = P^r via the canonical
/// basis of L (coefficients read off the pivot columns of the reduced row
/// echelon basis, so the report is basis independent). Multiplicities carry
/// over unchanged. Requires dim L >= 1.
CohomologyReport restricted_cohomology(const FatPointScheme& Z, const LinearSpan& L,
                                       int d);

/// The trace scheme itself (exposed for checkers that need the point map).
FatPointScheme trace_scheme(const FatPointScheme& Z, const LinearSpan& L);

}  // namespace fatpoints
