#include "dgw/pursuit/invisible.hpp"

#include <algorithm>
#include <vector>

#include "dgw/families.hpp"
#include "exact.hpp"

namespace dgw {

using detail::bit;

namespace {

void require_invisible(Variant v) {
    if (v != Variant::KW && v != Variant::DPW)
        throw InputError("invisible-robber games are kw and dpw, got " + variant_name(v));
}

std::uint64_t advance_mask(const Graph& g, Variant semantics, std::uint64_t cops, std::uint64_t next,
                           std::uint64_t robber) {
    const std::uint64_t stay = cops & next;
    if (semantics == Variant::KW) return (robber | reach_mask(g, stay, robber & next)) & ~next;
    return reach_mask(g, stay, robber) & ~next;
}

std::uint64_t state_hash(std::uint64_t cops, std::uint64_t robber) {
    std::uint64_t h = cops * 0x9e3779b97f4a7c15ULL ^ (robber + 0x632be59bd9b4e019ULL);
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 32);
}

struct SearchNode {
    std::uint64_t cops;
    std::uint64_t robber;
    std::uint32_t parent;
};

// Linear-probing set of node indices keyed by the (cops, robber) stored in
// the node array; four bytes per slot.
class StateIndex {
public:
    explicit StateIndex(const std::vector<SearchNode>& nodes) : nodes_(nodes), slots_(1024, kEmpty) {}

    /// Records `index` unless nodes_[index]'s state is already present.
    bool insert(std::uint32_t index) {
        if (2 * (count_ + 1) > slots_.size()) grow();
        if (!place(slots_, index)) return false;
        ++count_;
        return true;
    }

private:
    static constexpr std::uint32_t kEmpty = ~std::uint32_t{0};

    bool place(std::vector<std::uint32_t>& slots, std::uint32_t index) const {
        const SearchNode& s = nodes_[index];
        const std::size_t mask = slots.size() - 1;
        for (std::size_t i = state_hash(s.cops, s.robber) & mask;; i = (i + 1) & mask) {
            if (slots[i] == kEmpty) {
                slots[i] = index;
                return true;
            }
            const SearchNode& t = nodes_[slots[i]];
            if (t.cops == s.cops && t.robber == s.robber) return false;
        }
    }

    void grow() {
        std::vector<std::uint32_t> bigger(slots_.size() * 2, kEmpty);
        for (std::uint32_t index : slots_)
            if (index != kEmpty) place(bigger, index);
        slots_ = std::move(bigger);
    }

    const std::vector<SearchNode>& nodes_;
    std::vector<std::uint32_t> slots_;
    std::size_t count_ = 0;
};

}  // namespace

VertexSet advance_robber_space(const Graph& graph, Variant semantics, const VertexSet& cops,
                               const VertexSet& next, const VertexSet& robber_space) {
    require_invisible(semantics);
    const VertexSet stay = cops & next;
    if (semantics == Variant::KW) return (robber_space | reachable(graph, stay, robber_space & next)) - next;
    return reachable(graph, stay, robber_space) - next;
}

SolveOutcome solve_invisible(const Graph& graph, const GameConfig& config, const SolverLimits& limits) {
    require_invisible(config.variant);
    detail::require_exact_size(graph);
    detail::require_cop_count(graph, config.cops);

    const auto n = static_cast<Vertex>(graph.vertex_count());
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;

    std::vector<SearchNode> nodes;
    // Untouched capacity costs address space only.
    nodes.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(limits.max_states + n + 2, 1ULL << 31)));
    StateIndex seen(nodes);

    SolveOutcome out;
    auto finish = [&](std::uint32_t goal) {
        std::vector<VertexSet> seq;
        for (std::uint32_t i = goal; i != 0; i = nodes[i].parent) seq.push_back(VertexSet::from_mask(n, nodes[i].cops));
        std::reverse(seq.begin(), seq.end());
        out.winner = Winner::Cops;
        out.placements = std::move(seq);
        out.states_explored = nodes.size();
        return out;
    };

    nodes.push_back({0, all, 0});
    seen.insert(0);
    if (all == 0) return finish(0);

    for (std::uint32_t head = 0; head < nodes.size(); ++head) {
        const SearchNode cur = nodes[head];
        auto visit = [&](std::uint64_t next) -> std::optional<std::uint32_t> {
            const std::uint64_t robber = advance_mask(graph, config.variant, cur.cops, next, cur.robber);
            if (config.require_monotone && (robber & ~cur.robber) != 0) return std::nullopt;
            nodes.push_back({next, robber, head});
            if (!seen.insert(static_cast<std::uint32_t>(nodes.size() - 1))) {
                nodes.pop_back();
                return std::nullopt;
            }
            if (robber == 0) return static_cast<std::uint32_t>(nodes.size() - 1);
            return std::nullopt;
        };
        for (std::uint64_t rest = cur.cops; rest != 0; rest &= rest - 1)
            if (auto goal = visit(cur.cops & ~(rest & (~rest + 1)))) return finish(*goal);
        if (std::popcount(cur.cops) < config.cops)
            for (Vertex u = 0; u < n; ++u)
                if ((cur.cops & bit(u)) == 0)
                    if (auto goal = visit(cur.cops | bit(u))) return finish(*goal);
        if (nodes.size() > limits.max_states) {
            out.states_explored = nodes.size();
            return out;
        }
    }
    out.winner = Winner::Robber;
    out.states_explored = nodes.size();
    return out;
}

SweepReport verify_sweep(const Graph& graph, const SweepCertificate& cert, Variant semantics) {
    require_invisible(semantics);
    const std::size_t n = graph.vertex_count();
    SweepReport report;
    VertexSet cops(n);
    VertexSet robber = graph.all_vertices();
    for (std::size_t i = 0; i < cert.placements.size(); ++i) {
        const VertexSet& next = cert.placements[i];
        if (next.universe() != n)
            throw InputError("placement " + std::to_string(i) + " is over a universe of " +
                             std::to_string(next.universe()) + " vertices");
        if (next.size() > static_cast<std::size_t>(cert.budget))
            throw InputError("placement " + std::to_string(i) + " uses " + std::to_string(next.size()) +
                             " cops, budget is " + std::to_string(cert.budget));
        VertexSet after = advance_robber_space(graph, semantics, cops, next, robber);
        if (!after.is_subset_of(robber) && report.monotone) {
            report.monotone = false;
            report.first_violation = i;
        }
        cops = next;
        robber = std::move(after);
        ++report.steps;
    }
    report.cleared = robber.empty();
    return report;
}

SweepCertificate dpw_sweep_certificate_switch_all(int n) {
    const Graph g = gen_switch_all(n);
    SweepCertificate cert;
    cert.budget = 4;
    VertexSet cops(g.vertex_count());
    auto place = [&](const std::string& v) {
        cops.insert(g.id(v));
        cert.placements.push_back(cops);
    };
    auto lift = [&](const std::string& v) {
        cops.erase(g.id(v));
        cert.placements.push_back(cops);
    };
    auto visit = [&](const std::string& v) {
        place(v);
        lift(v);
    };
    auto at = [](const char* p, int i) { return p + std::to_string(i); };

    place("r");
    place("s");
    for (int i = 1; i <= n; ++i) {
        place(at("e", i));
        // g_i before f_i: lifting from f_i while g_i is dirty would let the
        // robber back onto f_i.
        for (const char* p : {"d", "g", "f", "h", "k"}) visit(at(p, i));
        lift(at("e", i));
    }
    visit("x");
    for (int j = 2 * n; j >= 1; --j) {
        visit(at("a", j));
        visit(at("t", j));
    }
    place("c");
    return cert;
}

}  // namespace dgw
