#include "fatpoints/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "fatpoints/cohomology.hpp"
#include "fatpoints/combinatorics.hpp"
#include "fatpoints/rng.hpp"

namespace fatpoints {

namespace {

void normalize(std::vector<std::uint32_t>& c, const FieldContext& F) {
    std::size_t lead = c.size();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) {
            lead = i;
            break;
        }
    if (lead == c.size())
        throw std::invalid_argument("point: all coordinates are zero");
    const std::uint32_t inv = F.inv(c[lead]);
    for (auto& v : c) v = F.mul(v, inv);
}

DenseMatrix coord_matrix(const std::vector<PrimePoint>& pts) {
    DenseMatrix m(pts.size(), pts.empty() ? 0 : pts[0].coords.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        std::copy(pts[i].coords.begin(), pts[i].coords.end(), m.a.begin() + i * m.cols);
    return m;
}

// Linear generality of distinct points is equivalent to every subset of size
// exactly min(s, n+1) being linearly independent (smaller dependent subsets
// would sit inside a dependent one of that size).
bool linearly_general_unguarded(const std::vector<PrimePoint>& pts, const FieldContext& F,
                                std::int64_t subset_cap) {
    const int s = static_cast<int>(pts.size());
    if (s <= 1) return true;
    const int n = pts[0].n();
    const int k = std::min(s, n + 1);
    if (binomial(s, k) > subset_cap)
        throw std::invalid_argument("linear-generality check: subset enumeration too large");
    bool ok = true;
    for_each_subset(s, k, k, [&](const std::vector<int>& idx) {
        if (!ok) return;
        DenseMatrix m(idx.size(), static_cast<std::size_t>(n) + 1);
        for (std::size_t r = 0; r < idx.size(); ++r)
            std::copy(pts[static_cast<std::size_t>(idx[r])].coords.begin(),
                      pts[static_cast<std::size_t>(idx[r])].coords.end(),
                      m.a.begin() + r * m.cols);
        if (rank(m, F) < idx.size()) ok = false;
    });
    return ok;
}

}  // namespace

PrimePoint make_point(const std::vector<std::int64_t>& raw, const FieldContext& F) {
    std::vector<std::uint32_t> c(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) c[i] = F.reduce(raw[i]);
    return make_point_residues(std::move(c), F);
}

PrimePoint make_point_residues(std::vector<std::uint32_t> coords, const FieldContext& F) {
    if (coords.size() < 2) throw std::invalid_argument("point: need n >= 1");
    for (auto& v : coords) v %= F.p();
    normalize(coords, F);
    return PrimePoint{std::move(coords)};
}

std::int64_t FatPointScheme::weight() const {
    std::int64_t w = 0;
    for (int m : mults) w += m;
    return w;
}

int FatPointScheme::max_mult() const {
    int m = 0;
    for (int v : mults) m = std::max(m, v);
    return m;
}

FatPointScheme make_scheme(const FieldContext& F, int n, std::vector<PrimePoint> points,
                           std::vector<int> mults) {
    if (n < 1) throw std::invalid_argument("scheme: need n >= 1");
    if (points.size() != mults.size())
        throw std::invalid_argument("scheme: points/multiplicities length mismatch");
    for (const auto& p : points)
        if (p.n() != n) throw std::invalid_argument("scheme: point dimension mismatch");
    for (int m : mults)
        if (m < 1) throw std::invalid_argument("scheme: multiplicities must be >= 1");
    std::set<PrimePoint> seen(points.begin(), points.end());
    if (seen.size() != points.size())
        throw std::invalid_argument("scheme: points must be pairwise distinct");
    return FatPointScheme{F, n, std::move(points), std::move(mults)};
}

LinearSpan span_of(const std::vector<PrimePoint>& pts, const FieldContext& F) {
    if (pts.empty()) throw std::invalid_argument("span_of: empty point set");
    const int n = pts[0].n();
    auto rr = row_reduce(coord_matrix(pts), F);
    DenseMatrix basis(rr.pivots.size(), static_cast<std::size_t>(n) + 1);
    std::copy(rr.reduced.a.begin(), rr.reduced.a.begin() + basis.a.size(), basis.a.begin());
    return LinearSpan{F, n, std::move(basis)};
}

LinearSpan ambient_span(const FieldContext& F, int n) {
    DenseMatrix basis(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) basis.at(i, i) = 1;
    return LinearSpan{F, n, std::move(basis)};
}

bool contains(const LinearSpan& L, const PrimePoint& q) {
    if (q.coords.size() != L.basis.cols)
        throw std::invalid_argument("contains: ambient dimension mismatch");
    const FieldContext& F = L.field;
    std::vector<std::uint32_t> v = q.coords;
    for (std::size_t r = 0; r < L.basis.rows; ++r) {
        std::size_t piv = L.basis.cols;
        for (std::size_t j = 0; j < L.basis.cols; ++j)
            if (L.basis.at(r, j) != 0) {
                piv = j;
                break;
            }
        if (piv == L.basis.cols) continue;
        const std::uint32_t f = v[piv];
        if (f == 0) continue;
        for (std::size_t j = piv; j < L.basis.cols; ++j)
            v[j] = F.sub(v[j], F.mul(f, L.basis.at(r, j)));
    }
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

std::int64_t weight_on(const FatPointScheme& Z, const LinearSpan& L) {
    if (Z.field.p() != L.field.p())
        throw std::invalid_argument("weight_on: scheme and subspace field mismatch");
    std::int64_t w = 0;
    for (int i = 0; i < Z.s(); ++i)
        if (contains(L, Z.points[static_cast<std::size_t>(i)]))
            w += Z.mults[static_cast<std::size_t>(i)];
    return w;
}

bool is_linearly_general(const std::vector<PrimePoint>& pts, const FieldContext& F) {
    if (pts.size() > 16)
        throw std::invalid_argument(
            "is_linearly_general: guard s <= 16 exceeded (subset enumeration)");
    return linearly_general_unguarded(pts, F, 1 << 20);
}

FatPointScheme residual(const FatPointScheme& Z, const LinearSpan& H) {
    if (Z.field.p() != H.field.p())
        throw std::invalid_argument("residual: scheme and hyperplane field mismatch");
    if (H.dim() != Z.n - 1)
        throw std::invalid_argument("residual: subspace is not a hyperplane");
    std::vector<PrimePoint> pts;
    std::vector<int> mults;
    for (int i = 0; i < Z.s(); ++i) {
        int m = Z.mults[static_cast<std::size_t>(i)];
        if (contains(H, Z.points[static_cast<std::size_t>(i)])) m -= 1;
        if (m > 0) {
            pts.push_back(Z.points[static_cast<std::size_t>(i)]);
            mults.push_back(m);
        }
    }
    return FatPointScheme{Z.field, Z.n, std::move(pts), std::move(mults)};
}

std::optional<bool> is_on_rational_normal_curve(const std::vector<PrimePoint>& pts,
                                                const FieldContext& F) {
    const int s = static_cast<int>(pts.size());
    if (s == 0) return std::nullopt;
    const int n = pts[0].n();
    if (s < 2 * n + 3) return std::nullopt;
    try {
        if (!linearly_general_unguarded(pts, F, 1 << 21)) return std::nullopt;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    FatPointScheme simple{F, n, pts, std::vector<int>(pts.size(), 1)};
    const std::int64_t h0 = cohomology(simple, 2).h0;
    return h0 == binomial(n + 2, 2) - (2 * n + 1);
}

bool is_uniform_position_deg(const std::vector<PrimePoint>& pts, const FieldContext& F,
                             int x) {
    if (x < 1) throw std::invalid_argument("uniform-position check: need x >= 1");
    const int s = static_cast<int>(pts.size());
    if (s > 12)
        throw std::invalid_argument("uniform-position check: guard s <= 12 exceeded");
    const int n = pts.empty() ? 1 : pts[0].n();
    for (int k = 1; k <= s; ++k) {
        std::vector<std::int64_t> reference;
        bool first = true, same = true;
        for_each_subset(s, k, k, [&](const std::vector<int>& idx) {
            if (!same) return;
            std::vector<PrimePoint> sub;
            sub.reserve(idx.size());
            for (int i : idx) sub.push_back(pts[static_cast<std::size_t>(i)]);
            FatPointScheme E{F, n, std::move(sub), std::vector<int>(idx.size(), 1)};
            std::vector<std::int64_t> hf;
            hf.reserve(static_cast<std::size_t>(x));
            for (int t = 1; t <= x; ++t) hf.push_back(cohomology(E, t).hilbert);
            if (first) {
                reference = std::move(hf);
                first = false;
            } else if (hf != reference) {
                same = false;
            }
        });
        if (!same) return false;
    }
    return true;
}

namespace {

PrimePoint draw_point(Xorshift64Star& rng, const FieldContext& F, int n) {
    for (int tries = 0; tries < 4096; ++tries) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1);
        bool nonzero = false;
        for (auto& v : c) {
            v = rng.residue(F);
            nonzero |= (v != 0);
        }
        if (nonzero) return make_point_residues(std::move(c), F);
    }
    throw std::runtime_error("point draw budget exhausted");
}

// Fills `out` with s pairwise-distinct points; false when the draw budget
// runs out (too few distinct points exist over a tiny field).
bool draw_distinct_points(Xorshift64Star& rng, const FieldContext& F, int n, int s,
                          std::vector<PrimePoint>& out) {
    out.clear();
    std::set<PrimePoint> seen;
    for (int tries = 0; static_cast<int>(out.size()) < s; ++tries) {
        if (tries > 1024 + 1024 * s) return false;
        PrimePoint q = draw_point(rng, F, n);
        if (seen.insert(q).second) out.push_back(std::move(q));
    }
    return true;
}

std::vector<std::uint32_t> distinct_parameters(Xorshift64Star& rng, const FieldContext& F,
                                               int count) {
    if (static_cast<std::uint64_t>(count) > F.p())
        throw std::invalid_argument(
            "distinct curve parameters: count exceeds the field size");
    std::set<std::uint32_t> seen;
    std::vector<std::uint32_t> out;
    while (static_cast<int>(out.size()) < count) {
        std::uint32_t t = rng.residue(F);
        if (seen.insert(t).second) out.push_back(t);
    }
    return out;
}

}  // namespace

std::vector<PrimePoint> gen_general(const FieldContext& F, int n, int s,
                                    std::uint64_t seed) {
    if (n < 1 || s < 1) throw std::invalid_argument("gen_general: need n >= 1, s >= 1");
    Xorshift64Star rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<PrimePoint> pts;
        if (!draw_distinct_points(rng, F, n, s, pts)) break;
        if (linearly_general_unguarded(pts, F, 1 << 21)) return pts;
    }
    throw std::runtime_error("gen_general: retry budget exhausted (p too small?)");
}

std::vector<PrimePoint> gen_rnc(const FieldContext& F, int n, int s, std::uint64_t seed) {
    if (n < 1 || s < 1) throw std::invalid_argument("gen_rnc: need n >= 1, s >= 1");
    if (static_cast<std::uint64_t>(s) > F.p())
        throw std::invalid_argument("gen_rnc: s > p is impossible (parameters collide)");
    Xorshift64Star rng(seed);
    std::vector<PrimePoint> pts;
    for (std::uint32_t t : distinct_parameters(rng, F, s)) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1);
        c[0] = 1;
        for (int j = 1; j <= n; ++j)
            c[static_cast<std::size_t>(j)] = F.mul(c[static_cast<std::size_t>(j) - 1], t);
        pts.push_back(PrimePoint{std::move(c)});
    }
    return pts;
}

FatPointScheme gen_cone_example(const FieldContext& F, int n, int d, std::uint64_t seed) {
    if (n < 3 || d < 2) throw std::invalid_argument("gen_cone_example: need n >= 3, d >= 2");
    const int s = (n - 1) * d + 3;
    Xorshift64Star rng(seed);
    std::vector<PrimePoint> pts;
    std::vector<int> mults;
    std::vector<std::uint32_t> vertex(static_cast<std::size_t>(n) + 1, 0);
    vertex[0] = 1;
    pts.push_back(PrimePoint{std::move(vertex)});
    mults.push_back(d);
    // points (u : 1 : t : ... : t^{n-1}) on the cone, distinct t
    for (std::uint32_t t : distinct_parameters(rng, F, s - 1)) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1);
        c[0] = rng.residue(F);
        c[1] = 1;
        for (int j = 2; j <= n; ++j)
            c[static_cast<std::size_t>(j)] = F.mul(c[static_cast<std::size_t>(j) - 1], t);
        pts.push_back(make_point_residues(std::move(c), F));
        mults.push_back(1);
    }
    return make_scheme(F, n, std::move(pts), std::move(mults));
}

FatPointScheme gen_appendix(int which, const FieldContext& F) {
    auto pt = [&](std::vector<std::int64_t> raw) { return make_point(raw, F); };
    if (which == 1) {
        std::vector<PrimePoint> pts = {
            pt({1, 0, 0, 0, 0}), pt({0, 1, 0, 0, 0}), pt({0, 0, 1, 0, 0}),
            pt({0, 0, 0, 1, 0}), pt({0, 0, 0, 0, 1}), pt({1, 1, 1, 1, 0}),
            pt({1, 1, -1, 0, 1})};
        return make_scheme(F, 4, std::move(pts), std::vector<int>(7, 3));
    }
    if (which == 2) {
        std::vector<PrimePoint> pts = {
            pt({1, 0, 0, 0, 0, 0}), pt({0, 1, 0, 0, 0, 0}), pt({0, 0, 1, 0, 0, 0}),
            pt({0, 0, 0, 1, 0, 0}), pt({0, 0, 0, 0, 1, 0}), pt({0, 0, 0, 0, 0, 1}),
            pt({1, 1, 1, 1, 0, 0}), pt({1, 1, 0, 0, 1, 1})};
        return make_scheme(F, 5, std::move(pts), std::vector<int>(8, 2));
    }
    throw std::invalid_argument("gen_appendix: which must be 1 or 2");
}

namespace {

bool lies_on_standard_rnc(const PrimePoint& q, const FieldContext& F) {
    const int n = q.n();
    if (q.coords[0] == 0) {
        // only the parameter-infinity point (0:...:0:1) is on the curve
        for (int j = 1; j < n; ++j)
            if (q.coords[static_cast<std::size_t>(j)] != 0) return false;
        return q.coords[static_cast<std::size_t>(n)] == 1;
    }
    const std::uint32_t t = q.coords[1];  // normalized: coords[0] == 1
    std::uint32_t power = 1;
    for (int j = 1; j <= n; ++j) {
        power = F.mul(power, t);
        if (q.coords[static_cast<std::size_t>(j)] != power) return false;
    }
    return true;
}

}  // namespace

FatPointScheme gen_rnc_plus_general(const FieldContext& F, int n, int b, int s,
                                    std::vector<int> mults, std::uint64_t seed) {
    auto fail = [](const std::string& what) {
        throw std::invalid_argument("gen_rnc_plus_general: " + what);
    };
    if (n < 4) fail("n >= 4 violated");
    if (!(1 <= b && b < s)) fail("1 <= b < s violated");
    if (static_cast<int>(mults.size()) != s) fail("multiplicity count != s");
    for (int m : mults)
        if (m < 1) fail("m_i >= 1 violated");
    std::int64_t w = 0;
    for (int m : mults) w += m;
    const std::int64_t alpha = w % n;
    if (alpha < 1 || alpha > n - 1) fail("w = nd + alpha with 1 <= alpha <= n-1 violated");
    const std::int64_t d = (w - alpha) / n;
    if (d < 4) fail("d >= 4 violated");
    std::int64_t tail = 0;
    for (int i = b; i < s; ++i) tail += mults[static_cast<std::size_t>(i)];
    if (tail > alpha) fail("sum(m_i, i > b) <= alpha violated");

    Xorshift64Star rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<PrimePoint> pts;
        std::set<PrimePoint> seen;
        for (std::uint32_t t : distinct_parameters(rng, F, b)) {
            std::vector<std::uint32_t> c(static_cast<std::size_t>(n) + 1);
            c[0] = 1;
            for (int j = 1; j <= n; ++j)
                c[static_cast<std::size_t>(j)] = F.mul(c[static_cast<std::size_t>(j) - 1], t);
            PrimePoint q{std::move(c)};
            seen.insert(q);
            pts.push_back(std::move(q));
        }
        bool filled = true;
        for (int tries = 0; static_cast<int>(pts.size()) < s; ++tries) {
            if (tries > 1024 + 1024 * s) {
                filled = false;
                break;
            }
            PrimePoint q = draw_point(rng, F, n);
            if (lies_on_standard_rnc(q, F)) continue;
            if (seen.insert(q).second) pts.push_back(std::move(q));
        }
        if (filled && linearly_general_unguarded(pts, F, 1 << 21))
            return make_scheme(F, n, std::move(pts), std::move(mults));
    }
    throw std::runtime_error("gen_rnc_plus_general: retry budget exhausted");
}

}  // namespace fatpoints
