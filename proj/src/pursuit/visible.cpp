#include "dgw/pursuit/visible.hpp"

#include <optional>
#include <unordered_map>

#include "exact.hpp"
#include "placements.hpp"

namespace dgw {

using detail::bit;

namespace {

Graph board_for(const Graph& graph, Variant variant) {
    if (variant == Variant::TW) return symmetric_closure(graph);
    if (variant == Variant::DAGW) return graph;
    throw InputError("visible solver handles tw and dagw, got " + variant_name(variant));
}

class VisibleGame {
public:
    VisibleGame(const Graph& g, int k, bool monotone)
        : g_(g), n_(static_cast<Vertex>(g.vertex_count())), k_(k), monotone_(monotone),
          index_(static_cast<int>(g.vertex_count()), k), win_(index_.size() * n_, 0),
          choice_(index_.size() * n_, 0) {}

    void solve() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t p = 0; p < index_.size(); ++p) {
                const std::uint64_t cops = index_.mask(p);
                for (Vertex v = 0; v < n_; ++v) {
                    if ((cops & bit(v)) != 0 || win_[p * n_ + v] != 0) continue;
                    if (auto next = winning_move(cops, v)) {
                        win_[p * n_ + v] = 1;
                        choice_[p * n_ + v] = *next;
                        changed = true;
                    }
                }
            }
        }
    }

    bool cops_win() const {
        for (Vertex v = 0; v < n_; ++v)
            if (win_[v] == 0) return false;  // placement rank 0 is the empty set
        return true;
    }

    std::uint64_t positions() const { return win_.size(); }

    PositionalStrategy strategy() const {
        PositionalStrategy s(n_);
        for (std::size_t p = 0; p < index_.size(); ++p)
            for (Vertex v = 0; v < n_; ++v)
                if (win_[p * n_ + v] != 0) s.set(index_.mask(p), v, choice_[p * n_ + v]);
        return s;
    }

private:
    bool all_win(std::uint64_t cops, std::uint64_t targets) const {
        const std::size_t base = index_.rank(cops) * n_;
        while (targets != 0) {
            const auto w = static_cast<Vertex>(std::countr_zero(targets));
            if (win_[base + w] == 0) return false;
            targets &= targets - 1;
        }
        return true;
    }

    std::optional<std::uint64_t> winning_move(std::uint64_t cops, Vertex v) const {
        // Lift one cop: the robber runs in G - C'.
        for (std::uint64_t rest = cops; rest != 0; rest &= rest - 1) {
            const std::uint64_t lifted = rest & (~rest + 1);
            const std::uint64_t next = cops & ~lifted;
            const std::uint64_t reach = reach_mask(g_, next, bit(v));
            if (monotone_ && (reach & lifted) != 0) continue;
            if (all_win(next, reach)) return next;
        }
        // Place one cop on u: the robber runs in G - C but may not stop on u.
        if (std::popcount(cops) < k_) {
            const std::uint64_t reach = reach_mask(g_, cops, bit(v));
            for (Vertex u = 0; u < n_; ++u) {
                if ((cops & bit(u)) != 0) continue;
                const std::uint64_t next = cops | bit(u);
                if (all_win(next, reach & ~bit(u))) return next;
            }
        }
        return std::nullopt;
    }

    const Graph& g_;
    Vertex n_;
    int k_;
    bool monotone_;
    detail::PlacementIndex index_;
    std::vector<std::uint8_t> win_;
    std::vector<std::uint64_t> choice_;
};

}  // namespace

SolveOutcome solve_visible(const Graph& graph, const GameConfig& config, const SolverLimits& limits) {
    const Graph board = board_for(graph, config.variant);
    detail::require_exact_size(board);
    detail::require_cop_count(board, config.cops);

    SolveOutcome out;
    const std::size_t n = board.vertex_count();
    if (n == 0) {
        out.winner = Winner::Cops;
        out.strategy = PositionalStrategy(0);
        return out;
    }
    const std::uint64_t placements = detail::PlacementIndex::count(static_cast<int>(n), config.cops);
    if (placements > limits.max_states / n) {
        out.states_explored = 0;
        return out;
    }
    VisibleGame game(board, config.cops, config.require_monotone);
    game.solve();
    out.states_explored = game.positions();
    out.winner = game.cops_win() ? Winner::Cops : Winner::Robber;
    if (out.cops_win()) out.strategy = game.strategy();
    return out;
}

Winner solve_visible_full_moves(const Graph& graph, const GameConfig& config) {
    const Graph board = board_for(graph, config.variant);
    const std::size_t n = board.vertex_count();
    if (n > 12) throw InputError("full-move reference solver is limited to 12 vertices");
    detail::require_cop_count(board, config.cops);
    if (n == 0) return Winner::Cops;

    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::uint64_t> legal;
    for (std::uint64_t c = 0; c < subsets; ++c)
        if (std::popcount(c) <= config.cops) legal.push_back(c);

    // win[c * n + v]: cops force capture from cop position (c, v).
    std::vector<std::uint8_t> win(subsets * n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t c : legal) {
            for (Vertex v = 0; v < n; ++v) {
                if ((c & bit(v)) != 0 || win[c * n + v] != 0) continue;
                for (std::uint64_t next : legal) {
                    const std::uint64_t stay = c & next;
                    const std::uint64_t reach = reach_mask(board, stay, bit(v));
                    if (config.require_monotone && (reach & (c & ~next)) != 0) continue;
                    bool good = true;
                    for (std::uint64_t t = reach & ~next; t != 0 && good; t &= t - 1)
                        good = win[next * n + static_cast<std::size_t>(std::countr_zero(t))] != 0;
                    if (good) {
                        win[c * n + v] = 1;
                        changed = true;
                        break;
                    }
                }
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (win[v] == 0) return Winner::Robber;
    return Winner::Cops;
}

StrategyCheck verify_visible_strategy(const Graph& graph, const GameConfig& config, const CopStrategy& strategy) {
    const Graph board = board_for(graph, config.variant);
    const std::size_t n = board.vertex_count();
    StrategyCheck check;

    struct Key {
        VertexSet cops;
        Vertex robber;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return k.cops.hash() * 31 + k.robber; }
    };
    enum class Mark : std::uint8_t { OnPath, Done };
    std::unordered_map<Key, Mark, KeyHash> marks;

    auto describe = [&](const Key& k) {
        std::string s = "(C={";
        bool first = true;
        k.cops.for_each([&](Vertex v) {
            s += (first ? "" : ",") + board.name(v);
            first = false;
        });
        return s + "}, robber=" + board.name(k.robber) + ")";
    };

    struct Frame {
        Key key;
        std::vector<Vertex> replies;
        VertexSet next;
        std::size_t pos = 0;
    };

    for (Vertex start = 0; start < n; ++start) {
        Key root{VertexSet(n), start};
        if (marks.contains(root)) continue;
        std::vector<Frame> stack;
        auto enter = [&](Key key) -> bool {
            VertexSet next = strategy(key.cops, key.robber);
            if (next.universe() != n || next.size() > static_cast<std::size_t>(config.cops)) {
                check.failure = "strategy exceeds the cop budget at " + describe(key);
                return false;
            }
            const VertexSet stay = key.cops & next;
            const VertexSet reach = reachable(board, stay, VertexSet(n, {key.robber}));
            if (config.require_monotone && reach.intersects(key.cops - next)) {
                check.failure = "non-monotone move at " + describe(key);
                return false;
            }
            marks[key] = Mark::OnPath;
            ++check.positions;
            stack.push_back({std::move(key), (reach - next).members(), std::move(next)});
            return true;
        };
        if (!enter(root)) return check;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pos == f.replies.size()) {
                marks[f.key] = Mark::Done;
                stack.pop_back();
                continue;
            }
            Key child{f.next, f.replies[f.pos++]};
            const auto it = marks.find(child);
            if (it != marks.end()) {
                if (it->second == Mark::OnPath) {
                    check.failure = "robber can repeat position " + describe(child);
                    return check;
                }
                continue;
            }
            if (!enter(std::move(child))) return check;
        }
    }
    check.ok = true;
    return check;
}

}  // namespace dgw
