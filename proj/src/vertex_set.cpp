#include "dgw/vertex_set.hpp"

#include <stdexcept>

namespace dgw {

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (const std::size_t tail = universe & 63; tail != 0)
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::out_of_range("VertexSet::from_mask: universe exceeds 64");
    VertexSet s(universe);
    if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::empty() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) throw std::out_of_range("VertexSet::insert: vertex id out of range");
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size(); ++w)
        words_[w] &= w < other.words_.size() ? other.words_[w] : 0;
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const std::uint64_t o = w < other.words_.size() ? other.words_[w] : 0;
        if ((words_[w] & ~o) != 0) return false;
    }
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < words_.size() && w < other.words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::size_t VertexSet::hash() const {
    // splitmix-style mixing over the words
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
    for (std::uint64_t w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 31));
}

}  // namespace dgw
