#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fatpoints/field.hpp"
#include "fatpoints/matrix.hpp"

namespace fatpoints {

/// Point of P^n over GF(p): n+1 canonical residues, not all zero, scaled so
/// the first nonzero coordinate is 1. Equality of points is equality of the
/// stored coordinates.
struct PrimePoint {
    std::vector<std::uint32_t> coords;

    int n() const { return static_cast<int>(coords.size()) - 1; }

    friend bool operator==(const PrimePoint&, const PrimePoint&) = default;
    friend auto operator<=>(const PrimePoint&, const PrimePoint&) = default;
};

/// Reduces raw integers mod p, normalizes, rejects the zero vector.
PrimePoint make_point(const std::vector<std::int64_t>& raw, const FieldContext& F);
PrimePoint make_point_residues(std::vector<std::uint32_t> coords, const FieldContext& F);

/// Fat point scheme Z = sum m_i p_i. Points are pairwise distinct and all
/// multiplicities are >= 1; the empty scheme (s = 0) is allowed because it
/// arises as a residual.
struct FatPointScheme {
    FieldContext field;
    int n = 0;
    std::vector<PrimePoint> points;
    std::vector<int> mults;

    int s() const { return static_cast<int>(points.size()); }
    std::int64_t weight() const;
    int max_mult() const;
};

FatPointScheme make_scheme(const FieldContext& F, int n, std::vector<PrimePoint> points,
                           std::vector<int> mults);

/// Linear subspace of P^n in canonical form: the reduced row echelon basis
/// of its spanning points. Equal subspaces have equal representations.
struct LinearSpan {
    FieldContext field{kDefaultPrime};
    int n = 0;
    DenseMatrix basis;  // (dim+1) x (n+1), RREF, no zero rows

    int dim() const { return static_cast<int>(basis.rows) - 1; }

    friend bool operator==(const LinearSpan&, const LinearSpan&) = default;
};

/// Smallest linear subspace containing the (nonempty) set of points.
LinearSpan span_of(const std::vector<PrimePoint>& pts, const FieldContext& F);
LinearSpan ambient_span(const FieldContext& F, int n);
bool contains(const LinearSpan& L, const PrimePoint& q);

/// Sum of multiplicities of the points of Z lying on L.
std::int64_t weight_on(const FatPointScheme& Z, const LinearSpan& L);

/// True iff every subset of size k <= n+1 spans a (k-1)-dimensional
/// subspace. Guarded at s <= 16; throws beyond.
bool is_linearly_general(const std::vector<PrimePoint>& pts, const FieldContext& F);

/// Residual with respect to a hyperplane: multiplicities of points on H drop
/// by one, points reaching zero disappear.
FatPointScheme residual(const FatPointScheme& Z, const LinearSpan& H);

/// Quadric-count membership test: for s >= 2n+3 points in linearly general
/// position, the support lies on a rational normal curve of degree n iff the
/// space of quadrics through it has dimension C(n+2,2) - (2n+1). Returns
/// nullopt when the criterion does not apply (s < 2n+3, or the points are
/// not linearly general, or s exceeds the linear-generality guard).
std::optional<bool> is_on_rational_normal_curve(const std::vector<PrimePoint>& pts,
                                                const FieldContext& F);

/// True iff for every k, all k-subsets have the same Hilbert function values
/// at t = 1..x. Guarded at s <= 12; throws beyond.
bool is_uniform_position_deg(const std::vector<PrimePoint>& pts, const FieldContext& F,
                             int x);

/// Seeded pseudorandom points, retried until pairwise distinct and in
/// linearly general position. Deterministic per seed.
std::vector<PrimePoint> gen_general(const FieldContext& F, int n, int s,
                                    std::uint64_t seed);

/// s points (1 : t : t^2 : ... : t^n) for distinct seeded parameters t.
std::vector<PrimePoint> gen_rnc(const FieldContext& F, int n, int s, std::uint64_t seed);

/// Cone configuration: a vertex of multiplicity d plus (n-1)d + 2 seeded
/// simple points on the cone over a degree-(n-1) rational normal curve in
/// the hyperplane x0 = 0, with distinct projection parameters.
FatPointScheme gen_cone_example(const FieldContext& F, int n, int d, std::uint64_t seed);

/// Built-in reference configurations: which=1 is the seven-point scheme in
/// P^4 (coordinate points, e0+e1+e2+e3, e0+e1-e2+e4, all multiplicity 3);
/// which=2 the eight-point scheme in P^5 (coordinate points, e0+e1+e2+e3,
/// e0+e1+e4+e5, all multiplicity 2).
FatPointScheme gen_appendix(int which, const FieldContext& F = FieldContext{});

/// First b points on a rational normal curve, the remaining s-b seeded
/// general points off the curve; the whole set is linearly general.
/// Multiplicities must satisfy w = nd + alpha with 1 <= alpha <= n-1, d >= 4,
/// and sum(m_i, i > b) <= alpha; violations name the failed inequality.
FatPointScheme gen_rnc_plus_general(const FieldContext& F, int n, int b, int s,
                                    std::vector<int> mults, std::uint64_t seed);

}  // namespace fatpoints
