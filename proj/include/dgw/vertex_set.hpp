#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace dgw {

using Vertex = std::uint32_t;

/// Set of vertex ids over a graph with a fixed universe size.
///
/// Backed by 64-bit words; iteration is in ascending id order. Two sets are
/// only comparable when they share a universe size.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    static VertexSet full(std::size_t universe);
    /// Only valid for universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const;

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    /// Members in ascending order.
    std::vector<Vertex> members() const;

    /// Only valid for universe <= 64.
    std::uint64_t to_mask() const { return words_.empty() ? 0 : words_[0]; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::size_t hash() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dgw

template <>
struct std::hash<dgw::VertexSet> {
    std::size_t operator()(const dgw::VertexSet& s) const noexcept { return s.hash(); }
};
