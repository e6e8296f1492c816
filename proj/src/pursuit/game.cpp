#include "dgw/pursuit/game.hpp"

#include "dgw/errors.hpp"

namespace dgw {

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::TW: return "tw";
        case Variant::DAGW: return "dagw";
        case Variant::KW: return "kw";
        case Variant::DPW: return "dpw";
        case Variant::ENT: return "ent";
    }
    return "?";
}

Variant parse_variant(const std::string& name) {
    for (Variant v : {Variant::TW, Variant::DAGW, Variant::KW, Variant::DPW, Variant::ENT})
        if (variant_name(v) == name) return v;
    throw InputError("unknown measure \"" + name + "\"");
}

std::optional<std::uint64_t> PositionalStrategy::next_mask(std::uint64_t cops, Vertex robber) const {
    if (robber >= moves_.size()) return std::nullopt;
    const auto& m = moves_[robber];
    const auto it = m.find(cops);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::optional<VertexSet> PositionalStrategy::next(const VertexSet& cops, Vertex robber) const {
    if (auto m = next_mask(cops.to_mask(), robber)) return VertexSet::from_mask(universe_, *m);
    return std::nullopt;
}

std::size_t PositionalStrategy::size() const {
    std::size_t n = 0;
    for (const auto& m : moves_) n += m.size();
    return n;
}

CopStrategy PositionalStrategy::as_function() const {
    return [self = *this](const VertexSet& cops, Vertex robber) {
        if (auto next = self.next(cops, robber)) return *next;
        return cops;
    };
}

}  // namespace dgw
