#include "fatpoints/bounds.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "fatpoints/combinatorics.hpp"

namespace fatpoints {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t weight_of(const std::vector<int>& mults) {
    std::int64_t w = 0;
    for (int m : mults) w += m;
    return w;
}

// m1 >= m2 regardless of input order; m2 = 0 when s = 1
std::pair<int, int> top_two(const std::vector<int>& mults) {
    int m1 = 0, m2 = 0;
    for (int m : mults) {
        if (m >= m1) {
            m2 = m1;
            m1 = m;
        } else if (m > m2) {
            m2 = m;
        }
    }
    return {m1, m2};
}

}  // namespace

LinearSystemSpec::LinearSystemSpec(int n_, int d_, std::vector<int> mults_)
    : n(n_), d(d_), mults(std::move(mults_)) {
    if (n < 1) throw std::invalid_argument("linear system: need n >= 1");
    if (d < 0) throw std::invalid_argument("linear system: need d >= 0");
    for (int m : mults)
        if (m < 1) throw std::invalid_argument("linear system: multiplicities must be >= 1");
    std::sort(mults.begin(), mults.end(), std::greater<int>());
}

std::int64_t LinearSystemSpec::weight() const { return weight_of(mults); }

std::int64_t segre_bound_p2(const std::vector<int>& mults) {
    if (mults.empty()) throw std::invalid_argument("segre_bound_p2: need s >= 1");
    auto [m1, m2] = top_two(mults);
    return std::max<std::int64_t>(m1 + m2 - 1, floor_div(weight_of(mults), 2));
}

std::int64_t fulton_bound(const std::vector<int>& mults) {
    const std::int64_t w = weight_of(mults);
    if (w < 2) throw std::invalid_argument("fulton_bound: need w >= 2");
    return w - 1;
}

std::int64_t segre_bound_pn(int n, const std::vector<int>& mults) {
    if (n < 2) throw std::invalid_argument("segre_bound_pn: need n >= 2");
    if (mults.empty()) throw std::invalid_argument("segre_bound_pn: need s >= 1");
    auto [m1, m2] = top_two(mults);
    return std::max<std::int64_t>(m1 + m2 - 1, floor_div(weight_of(mults) + n - 2, n));
}

std::int64_t T_of(const FatPointScheme& Z, const LinearSpan& L) {
    const int r = L.dim();
    if (r < 1) throw std::invalid_argument("T_of: points (r = 0) carry no T value");
    return floor_div(weight_on(Z, L) + r - 2, r);
}

std::int64_t generalized_segre_bound(const FatPointScheme& Z) {
    if (Z.s() < 2) throw std::invalid_argument("generalized_segre_bound: need s >= 2");
    if (Z.s() > 16)
        throw std::invalid_argument("generalized_segre_bound: guard s <= 16 exceeded");
    std::int64_t best = T_of(Z, ambient_span(Z.field, Z.n));
    std::set<std::vector<std::uint32_t>> seen;
    for_each_subset(Z.s(), 2, std::min(Z.s(), Z.n + 1), [&](const std::vector<int>& idx) {
        std::vector<PrimePoint> sub;
        sub.reserve(idx.size());
        for (int i : idx) sub.push_back(Z.points[static_cast<std::size_t>(i)]);
        LinearSpan L = span_of(sub, Z.field);
        if (L.dim() < 1 || L.dim() > Z.n - 1) return;
        if (!seen.insert(L.basis.a).second) return;
        best = std::max(best, T_of(Z, L));
    });
    return best;
}

std::int64_t vdim(const LinearSystemSpec& L) {
    std::int64_t v = binomial(L.n + L.d, L.n);
    for (int m : L.mults) v -= binomial(L.n + m - 1, L.n);
    return v;
}

std::int64_t edim(const LinearSystemSpec& L) { return std::max<std::int64_t>(vdim(L), 0); }

std::int64_t k_of(const LinearSystemSpec& L, const std::vector<int>& I) {
    const std::int64_t r = static_cast<std::int64_t>(I.size()) - 1;
    std::int64_t sum = 0;
    for (int i : I) {
        if (i < 0 || i >= L.s()) throw std::invalid_argument("k_of: index out of range");
        sum += L.mults[static_cast<std::size_t>(i)];
    }
    return std::max<std::int64_t>(sum - r * L.d, 0);
}

std::int64_t lvdim(const LinearSystemSpec& L) {
    const int s = L.s();
    if (s > 20) throw std::invalid_argument("lvdim: guard s <= 20 exceeded (2^s subsets)");
    // r = -1 term (empty set): k = d
    std::int64_t total = binomial(L.n + L.d, L.n);
    const std::uint32_t full = s >= 1 ? (1u << s) : 1u;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        const int r = __builtin_popcount(mask) - 1;
        std::int64_t sum = 0;
        for (int i = 0; i < s; ++i)
            if (mask & (1u << i)) sum += L.mults[static_cast<std::size_t>(i)];
        const std::int64_t k = std::max<std::int64_t>(sum - static_cast<std::int64_t>(r) * L.d, 0);
        const std::int64_t term = binomial(L.n + k - r - 1, L.n);
        total += (r % 2 == 0) ? -term : term;  // sign (-1)^{r+1}
    }
    return total;
}

LdimValue ldim(const LinearSystemSpec& L) {
    return LdimValue{std::max<std::int64_t>(lvdim(L), 0), true};
}

int s_of_d(const LinearSystemSpec& L) {
    return static_cast<int>(std::count(L.mults.begin(), L.mults.end(), L.d));
}

int b_of(const LinearSystemSpec& L) { return std::min(L.n - s_of_d(L), L.s() - L.n - 2); }

int c_of(const LinearSystemSpec& L) {
    if (L.s() < L.n + 3) throw std::invalid_argument("c_of: need s >= n + 3");
    return std::min(L.n, L.s() - L.n - 2);
}

BdpCheck bdp_applicable(const LinearSystemSpec& L) {
    if (L.s() < L.n + 3) return {false, "s >= n+3"};
    if (L.n < 1) return {false, "n >= 1"};
    if (L.d < 2) return {false, "d >= 2"};
    if (!L.mults.empty() && L.mults.front() > L.d) return {false, "d >= m_1"};
    if (L.weight() > static_cast<std::int64_t>(L.n) * L.d + b_of(L))
        return {false, "w <= nd + b"};
    return {true, ""};
}

std::int64_t bdp_bound(int n, const std::vector<int>& mults) {
    const int s = static_cast<int>(mults.size());
    if (s < n + 3)
        throw std::invalid_argument("bdp_bound: need s >= n + 3 (c undefined below)");
    const int c = std::min(n, s - n - 2);
    auto [m1, m2] = top_two(mults);
    return std::max<std::int64_t>(m1 + m2 - 1, ceil_div(weight_of(mults) - c, n));
}

BoundComparisonRow compare_bounds(int n, int s, std::int64_t w) {
    if (n < 2) throw std::invalid_argument("compare_bounds: need n >= 2");
    if (s < n + 4) throw std::invalid_argument("compare_bounds: need s >= n + 4");
    if (w < 1) throw std::invalid_argument("compare_bounds: need w >= 1");
    BoundComparisonRow row;
    row.mu = floor_div(w, n);
    row.lambda = static_cast<int>(w - row.mu * n);
    const int c = std::min(n, s - n - 2);
    if (s >= 2 * n + 3) {
        if (row.lambda == 0) {
            row.segre_offset = 0;
            row.bdp_offset = -1;
        } else if (row.lambda == 1) {
            row.segre_offset = 0;
            row.bdp_offset = 0;
        } else {  // 2 <= lambda <= n-1
            row.segre_offset = 1;
            row.bdp_offset = 0;
        }
        return row;
    }
    // n+4 <= s <= 2n+2, where c = s-n-2 ranges over 2..n
    if (row.lambda == 0) {
        row.segre_offset = 0;
        row.bdp_offset = (s == 2 * n + 2) ? -1 : 0;
    } else if (row.lambda == 1) {
        row.segre_offset = 0;
        row.bdp_offset = 0;
    } else if (row.lambda <= c) {
        row.segre_offset = 1;
        row.bdp_offset = 0;
    } else {  // s-n-2 < lambda <= n-1
        row.segre_offset = 1;
        row.bdp_offset = 1;
    }
    return row;
}

bool multiplicity_sum_inequality(int z, const std::vector<int>& zs) {
    const int t = static_cast<int>(zs.size());
    if (t < 2) throw std::invalid_argument("multiplicity_sum_inequality: need t >= 2");
    const int z1 = zs.front();
    if (!(z > z1)) throw std::invalid_argument("multiplicity_sum_inequality: need z > z1");
    const std::int64_t eta = z + z1 + 1;
    std::int64_t lhs = z;
    for (int zi : zs) lhs += zi;
    // stated with halves; compare doubled to stay in integers
    const std::int64_t rhs2 =
        (eta % 2 == 0) ? (t + 1) * eta - 2 * t : (t + 1) * eta - (t - 1);
    return 2 * lhs <= rhs2;
}

std::int64_t multiplicity_sum_inequality_exhaustive(int t_max, int z_max) {
    std::int64_t cases = 0;
    std::vector<int> zs;
    for (int t = 2; t <= t_max; ++t) {
        for (int z = 2; z <= z_max; ++z) {
            for (int z1 = 1; z1 < z; ++z1) {
                zs.assign(1, z1);
                // enumerate non-increasing tails z2..zt in [1, z1]
                std::function<bool(int)> rec = [&](int pos) -> bool {
                    if (pos == t) {
                        ++cases;
                        return multiplicity_sum_inequality(z, zs);
                    }
                    for (int v = zs.back(); v >= 1; --v) {
                        zs.push_back(v);
                        const bool ok = rec(pos + 1);
                        zs.pop_back();
                        if (!ok) return false;
                    }
                    return true;
                };
                if (!rec(1)) return -1;
            }
        }
    }
    return cases;
}

}  // namespace fatpoints
