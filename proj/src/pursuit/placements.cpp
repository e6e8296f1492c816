#include "placements.hpp"

#include <limits>

namespace dgw::detail {

namespace {

std::vector<std::vector<std::uint64_t>> pascal(int n) {
    // binom[i][j] = C(i, j) for 0 <= i, j <= n, saturating.
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::vector<std::uint64_t>> b(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 2, 0));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i) {
        b[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) {
            const std::uint64_t x = b[i - 1][j - 1], y = b[i - 1][j];
            b[i][j] = x > cap - y ? cap : x + y;
        }
    }
    return b;
}

}  // namespace

std::uint64_t PlacementIndex::count(int n, int k) {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    const auto b = pascal(n);
    std::uint64_t total = 0;
    for (int s = 0; s <= k && s <= n; ++s) {
        const std::uint64_t c = b[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
        total = total > cap - c ? cap : total + c;
    }
    return total;
}

PlacementIndex::PlacementIndex(int n, int k) : binom_(pascal(n)) {
    if (k > n) k = n;
    offset_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (int s = 0; s <= n; ++s) {
        offset_[static_cast<std::size_t>(s) + 1] = offset_[static_cast<std::size_t>(s)];
        if (s > k) continue;
        const std::uint64_t c = binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
        offset_[static_cast<std::size_t>(s) + 1] += c;
        std::uint64_t x = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;
        for (std::uint64_t i = 0; i < c; ++i) {
            masks_.push_back(x);
            if (i + 1 == c || x == 0) break;
            // Gosper's hack: next larger mask with the same popcount.
            const std::uint64_t low = x & (~x + 1);
            const std::uint64_t ripple = x + low;
            x = (((ripple ^ x) >> 2) / low) | ripple;
        }
    }
}

}  // namespace dgw::detail
