#include "fatpoints/cohomology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fatpoints/combinatorics.hpp"

namespace fatpoints {

std::int64_t scheme_degree(const FatPointScheme& Z) {
    std::int64_t deg = 0;
    for (int m : Z.mults) deg += binomial(Z.n + m - 1, Z.n);
    return deg;
}

DenseMatrix conditions_matrix(const FatPointScheme& Z, int d) {
    const FieldContext& F = Z.field;
    if (d < 0) throw std::invalid_argument("conditions_matrix: need d >= 0");
    if (F.p() <= static_cast<std::uint32_t>(d))
        throw std::invalid_argument(
            "conditions_matrix: requires p > d (multiplicity conditions degenerate in "
            "characteristic <= d); p = " +
            std::to_string(F.p()) + ", d = " + std::to_string(d));
    const int n = Z.n;
    const auto cols = monomials(n, d);

    // falling factorials ff[e][a] = e (e-1) ... (e-a+1) mod p, 0 <= a <= e <= d
    std::vector<std::vector<std::uint32_t>> ff(static_cast<std::size_t>(d) + 1);
    for (int e = 0; e <= d; ++e) {
        ff[static_cast<std::size_t>(e)].resize(static_cast<std::size_t>(e) + 1);
        std::uint32_t acc = 1;
        ff[static_cast<std::size_t>(e)][0] = 1;
        for (int a = 1; a <= e; ++a) {
            acc = F.mul(acc, static_cast<std::uint32_t>(e - a + 1));
            ff[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] = acc;
        }
    }

    // flatten (point, derivative multi-index) pairs into a row list
    struct RowSpec {
        int point;
        const ExponentVector* deriv;
    };
    std::vector<std::vector<ExponentVector>> deriv_sets;
    std::vector<RowSpec> row_specs;
    for (int i = 0; i < Z.s(); ++i) {
        const int k = std::min(Z.mults[static_cast<std::size_t>(i)] - 1, d);
        deriv_sets.push_back(derivative_multiindices(n, k));
    }
    for (int i = 0; i < Z.s(); ++i)
        for (const auto& a : deriv_sets[static_cast<std::size_t>(i)])
            row_specs.push_back({i, &a});

    // powers of each coordinate of each point up to d
    std::vector<std::vector<std::uint32_t>> pw(
        static_cast<std::size_t>(Z.s()) * (static_cast<std::size_t>(n) + 1));
    for (int i = 0; i < Z.s(); ++i)
        for (int j = 0; j <= n; ++j) {
            auto& v = pw[static_cast<std::size_t>(i) * (n + 1) + static_cast<std::size_t>(j)];
            v.resize(static_cast<std::size_t>(d) + 1);
            v[0] = 1;
            const std::uint32_t x = Z.points[static_cast<std::size_t>(i)]
                                        .coords[static_cast<std::size_t>(j)];
            for (int e = 1; e <= d; ++e)
                v[static_cast<std::size_t>(e)] = F.mul(v[static_cast<std::size_t>(e) - 1], x);
        }

    DenseMatrix m(row_specs.size(), cols.size());
    const auto nrows = static_cast<std::int64_t>(row_specs.size());
#pragma omp parallel for schedule(static) if (nrows * static_cast<std::int64_t>(cols.size()) > 1 << 14)
    for (std::int64_t r = 0; r < nrows; ++r) {
        const auto& spec = row_specs[static_cast<std::size_t>(r)];
        const ExponentVector& a = *spec.deriv;
        const auto* ppw = &pw[static_cast<std::size_t>(spec.point) * (n + 1)];
        for (std::size_t cidx = 0; cidx < cols.size(); ++cidx) {
            const ExponentVector& e = cols[cidx];
            std::uint32_t val = 1;
            for (int j = 0; j <= n && val; ++j) {
                const int ej = e[static_cast<std::size_t>(j)];
                const int aj = a[static_cast<std::size_t>(j)];
                if (aj > ej) {
                    val = 0;
                    break;
                }
                val = F.mul(val, ff[static_cast<std::size_t>(ej)][static_cast<std::size_t>(aj)]);
                val = F.mul(val, ppw[j][static_cast<std::size_t>(ej - aj)]);
            }
            m.at(static_cast<std::size_t>(r), cidx) = val;
        }
    }
    return m;
}

CohomologyReport cohomology(const FatPointScheme& Z, int d) {
    const DenseMatrix m = conditions_matrix(Z, d);
    const auto rk = static_cast<std::int64_t>(rank(m, Z.field));
    CohomologyReport rep;
    rep.degree = d;
    rep.rank = rk;
    rep.deg_scheme = scheme_degree(Z);
    rep.h0 = binomial(Z.n + d, Z.n) - rk;
    rep.h1 = rep.deg_scheme - rk;
    rep.hilbert = rk;
    rep.prime = Z.field.p();
    return rep;
}

bool h1_positive(const FatPointScheme& Z, int d) {
    if (binomial(Z.n + d, Z.n) < scheme_degree(Z)) return true;  // rank <= #columns
    return cohomology(Z, d).h1 > 0;
}

int regularity_index(const FatPointScheme& Z, bool paranoid) {
    const std::int64_t w = Z.weight();
    const int start = std::max(1, Z.max_mult() - 1);
    const int stop = static_cast<int>(std::max<std::int64_t>(1, w - 1));
    for (int d = start; d <= stop; ++d) {
        if (!h1_positive(Z, d)) {
            if (paranoid && d < stop && h1_positive(Z, d + 1))
                throw std::logic_error(
                    "regularity_index: h1 vanished at d but not d+1 (kernel bug)");
            return d;
        }
    }
    throw std::logic_error(
        "regularity_index: h1 did not vanish by w(Z)-1 (kernel bug or p <= d leak)");
}

std::int64_t system_dimension(const LinearSystemSpec& spec,
                              const std::vector<PrimePoint>& points,
                              const FieldContext& F) {
    if (static_cast<int>(points.size()) != spec.s())
        throw std::invalid_argument("system_dimension: point count != s");
    if (spec.s() == 0) return binomial(spec.n + spec.d, spec.n);
    FatPointScheme Z = make_scheme(F, spec.n, points, spec.mults);
    return cohomology(Z, spec.d).h0;
}

FatPointScheme trace_scheme(const FatPointScheme& Z, const LinearSpan& L) {
    if (Z.field.p() != L.field.p())
        throw std::invalid_argument("trace_scheme: scheme and subspace field mismatch");
    if (L.n != Z.n)
        throw std::invalid_argument("trace_scheme: ambient dimension mismatch");
    const int r = L.dim();
    // pivot columns of the canonical basis
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < L.basis.rows; ++i)
        for (std::size_t j = 0; j < L.basis.cols; ++j)
            if (L.basis.at(i, j) != 0) {
                pivots.push_back(j);
                break;
            }
    std::vector<PrimePoint> pts;
    std::vector<int> mults;
    for (int i = 0; i < Z.s(); ++i) {
        const PrimePoint& q = Z.points[static_cast<std::size_t>(i)];
        if (!contains(L, q)) continue;
        // q = sum_i q[pivot_i] * basis_row_i, so the pivot coordinates are
        // the coefficients of q in the canonical basis
        std::vector<std::uint32_t> c(pivots.size());
        for (std::size_t k = 0; k < pivots.size(); ++k) c[k] = q.coords[pivots[k]];
        pts.push_back(make_point_residues(std::move(c), Z.field));
        mults.push_back(Z.mults[static_cast<std::size_t>(i)]);
    }
    return FatPointScheme{Z.field, r, std::move(pts), std::move(mults)};
}

CohomologyReport restricted_cohomology(const FatPointScheme& Z, const LinearSpan& L,
                                       int d) {
    if (L.dim() < 1)
        throw std::invalid_argument("restricted_cohomology: need dim L >= 1");
    return cohomology(trace_scheme(Z, L), d);
}

}  // namespace fatpoints
