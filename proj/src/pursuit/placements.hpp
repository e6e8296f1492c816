#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace dgw::detail {

/// Dense index over all placements (vertex subsets) of size <= k on n <= 64
/// vertices. Placements are grouped by size; within a size they appear in
/// colexicographic order, which is ascending numeric order of the masks.
class PlacementIndex {
public:
    PlacementIndex(int n, int k);

    /// sum_{s<=k} C(n, s), saturating at UINT64_MAX.
    static std::uint64_t count(int n, int k);

    std::size_t size() const { return masks_.size(); }
    std::uint64_t mask(std::size_t i) const { return masks_[i]; }

    std::size_t rank(std::uint64_t mask) const {
        std::size_t r = offset_[static_cast<std::size_t>(std::popcount(mask))];
        std::size_t j = 1;
        while (mask != 0) {
            const int pos = std::countr_zero(mask);
            r += binom_[static_cast<std::size_t>(pos)][j++];
            mask &= mask - 1;
        }
        return r;
    }

private:
    std::vector<std::uint64_t> masks_;
    std::vector<std::size_t> offset_;
    std::vector<std::vector<std::uint64_t>> binom_;
};

}  // namespace dgw::detail
