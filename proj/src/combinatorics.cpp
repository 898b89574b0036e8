#include "fatpoints/combinatorics.hpp"

#include <stdexcept>

namespace fatpoints {

std::int64_t binomial(std::int64_t a, std::int64_t b) {
    if (b < 0) throw std::invalid_argument("binomial: negative lower index");
    if (a < b) return 0;
    if (b == 0 || b == a) return 1;
    if (b > a - b) b = a - b;
    unsigned __int128 c = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        c = c * static_cast<unsigned __int128>(a - i);
        c /= static_cast<unsigned __int128>(i + 1);  // exact: product of i+1 consecutive integers
        if (c > static_cast<unsigned __int128>(INT64_MAX))
            throw std::overflow_error("binomial overflows 64 bits");
    }
    return static_cast<std::int64_t>(c);
}

std::vector<ExponentVector> monomials(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("monomials: need n >= 1, d >= 0");
    std::vector<ExponentVector> out;
    out.reserve(static_cast<std::size_t>(binomial(n + d, n)));
    ExponentVector e(static_cast<std::size_t>(n) + 1, 0);
    e[0] = d;
    while (true) {
        out.push_back(e);
        // successor in descending lex: decrement the rightmost positive entry
        // before the last slot, move everything to its right there
        int last = e[static_cast<std::size_t>(n)];
        int i = n - 1;
        while (i >= 0 && e[static_cast<std::size_t>(i)] == 0) --i;
        if (i < 0) break;
        e[static_cast<std::size_t>(i)] -= 1;
        for (int j = i + 1; j <= n; ++j) e[static_cast<std::size_t>(j)] = 0;
        e[static_cast<std::size_t>(i) + 1] = last + 1;
    }
    return out;
}

std::vector<ExponentVector> derivative_multiindices(int n, int k) {
    if (k < 0) throw std::invalid_argument("derivative_multiindices: negative order");
    return monomials(n, k);
}

std::vector<std::vector<int>> subsets(int s, int kmin, int kmax) {
    if (kmin < 0 || kmin > kmax || kmax > s)
        throw std::invalid_argument("subsets: need 0 <= kmin <= kmax <= s");
    std::vector<std::vector<int>> out;
    for_each_subset(s, kmin, kmax, [&](const std::vector<int>& idx) { out.push_back(idx); });
    return out;
}

}  // namespace fatpoints
