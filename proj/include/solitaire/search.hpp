#pragma once

// Game-agnostic solvers: shortest-path search (BFS, or A* when the problem
// supplies an admissible heuristic), memoized DFS for yes/no solvability,
// and seeded random playouts.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>

#include "solitaire/rng.hpp"

namespace solitaire::search {

/// A puzzle the solvers can traverse.
///
/// `legal_moves` clears and fills the output buffer in a deterministic
/// order. `apply` is pure. Equal keys must mean equal move sets and goal
/// status.
template <class P>
concept SearchProblem = requires(const P& p, const typename P::State& s,
                                 const typename P::Move& m,
                                 std::vector<typename P::Move>& out) {
    typename P::State;
    typename P::Move;
    typename P::Key;
    { p.initial_state() } -> std::convertible_to<typename P::State>;
    { p.legal_moves(s, out) };
    { p.apply(s, m) } -> std::convertible_to<typename P::State>;
    { p.is_goal(s) } -> std::convertible_to<bool>;
    { p.key(s) } -> std::convertible_to<typename P::Key>;
};

/// Problems whose `heuristic` never overestimates the remaining moves.
template <class P>
concept HeuristicProblem = SearchProblem<P> && requires(const P& p, const typename P::State& s) {
    { p.heuristic(s) } -> std::convertible_to<int>;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct Limits {
    std::uint64_t node_budget = kDefaultNodeBudget;
};

/// Thrown when a search expands more nodes than its budget allows. This is
/// "gave up", not "unsolvable".
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t budget)
        : std::runtime_error("search node budget of " + std::to_string(budget) + " exceeded"),
          budget_(budget) {}
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

template <class Move>
struct SolveResult {
    bool solvable = false;
    std::optional<int> min_length;
    std::optional<std::vector<Move>> path;
    std::uint64_t nodes_expanded = 0;
};

struct SolvabilityResult {
    bool solvable = false;
    std::uint64_t nodes_expanded = 0;
};

struct PlayoutResult {
    bool solved = false;
    int moves_made = 0;
    bool truncated = false;
};

namespace detail {

template <class State, class Move>
struct Node {
    State state;
    std::uint32_t parent;
    Move move;
};

inline constexpr std::uint32_t kNoParent = 0xffffffffU;

template <class State, class Move>
std::vector<Move> unwind(const std::vector<Node<State, Move>>& nodes, std::uint32_t at) {
    std::vector<Move> path;
    while (nodes[at].parent != kNoParent) {
        path.push_back(nodes[at].move);
        at = nodes[at].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

inline void charge(std::uint64_t& expanded, const Limits& limits) {
    if (++expanded > limits.node_budget) throw BudgetExceeded(limits.node_budget);
}

template <class Move>
SolveResult<Move> found(std::vector<Move> path, std::uint64_t expanded) {
    SolveResult<Move> r;
    r.solvable = true;
    r.min_length = static_cast<int>(path.size());
    r.path = std::move(path);
    r.nodes_expanded = expanded;
    return r;
}

}  // namespace detail

/// Uniform-cost breadth-first search. Goal test happens at generation, which
/// is exact for unit move costs.
template <SearchProblem P>
SolveResult<typename P::Move> bfs_min_length(const P& problem, const Limits& limits = {}) {
    using State = typename P::State;
    using Move = typename P::Move;
    using Node = detail::Node<State, Move>;

    std::vector<Node> nodes;
    absl::flat_hash_set<typename P::Key> visited;
    std::uint64_t expanded = 0;

    const State root = problem.initial_state();
    if (problem.is_goal(root)) return detail::found<Move>({}, 0);
    nodes.push_back(Node{root, detail::kNoParent, Move{}});
    visited.insert(problem.key(root));

    std::vector<Move> moves;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        detail::charge(expanded, limits);
        const State current = nodes[head].state;
        problem.legal_moves(current, moves);
        for (const Move& m : moves) {
            State child = problem.apply(current, m);
            if (!visited.insert(problem.key(child)).second) continue;
            const bool goal = problem.is_goal(child);
            nodes.push_back(Node{std::move(child), static_cast<std::uint32_t>(head), m});
            if (goal) {
                return detail::found<Move>(
                    detail::unwind(nodes, static_cast<std::uint32_t>(nodes.size() - 1)), expanded);
            }
        }
    }
    SolveResult<Move> r;
    r.nodes_expanded = expanded;
    return r;
}

/// A* with the problem's heuristic. Ties on f prefer deeper nodes, then
/// insertion order, so results are deterministic.
template <HeuristicProblem P>
SolveResult<typename P::Move> astar_min_length(const P& problem, const Limits& limits = {}) {
    using State = typename P::State;
    using Move = typename P::Move;
    using Node = detail::Node<State, Move>;
    // (f, -g, insertion index)
    using Entry = std::tuple<int, int, std::uint32_t>;

    std::vector<Node> nodes;
    std::vector<int> depth;
    absl::flat_hash_map<typename P::Key, int> best_g;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
    std::uint64_t expanded = 0;

    const State root = problem.initial_state();
    nodes.push_back(Node{root, detail::kNoParent, Move{}});
    depth.push_back(0);
    best_g[problem.key(root)] = 0;
    open.emplace(problem.heuristic(root), 0, 0U);

    std::vector<Move> moves;
    while (!open.empty()) {
        const auto [f, neg_g, index] = open.top();
        open.pop();
        const int g = depth[index];
        const State current = nodes[index].state;
        if (best_g[problem.key(current)] < g) continue;  // stale entry
        if (problem.is_goal(current)) {
            return detail::found<Move>(detail::unwind(nodes, index), expanded);
        }
        detail::charge(expanded, limits);
        problem.legal_moves(current, moves);
        for (const Move& m : moves) {
            State child = problem.apply(current, m);
            const auto key = problem.key(child);
            auto [it, inserted] = best_g.try_emplace(key, g + 1);
            if (!inserted) {
                if (it->second <= g + 1) continue;
                it->second = g + 1;
            }
            const int h = problem.heuristic(child);
            const auto child_index = static_cast<std::uint32_t>(nodes.size());
            nodes.push_back(Node{std::move(child), index, m});
            depth.push_back(g + 1);
            open.emplace(g + 1 + h, -(g + 1), child_index);
        }
    }
    SolveResult<Move> r;
    r.nodes_expanded = expanded;
    return r;
}

/// Shortest solution: A* when the problem has a heuristic, BFS otherwise.
template <SearchProblem P>
SolveResult<typename P::Move> solve_min_length(const P& problem, const Limits& limits = {}) {
    if constexpr (HeuristicProblem<P>) {
        return astar_min_length(problem, limits);
    } else {
        return bfs_min_length(problem, limits);
    }
}

/// Yes/no solvability by depth-first search over a transposition table.
/// Every state is expanded at most once.
template <SearchProblem P>
SolvabilityResult check_solvable(const P& problem, const Limits& limits = {}) {
    using State = typename P::State;
    using Move = typename P::Move;

    struct Frame {
        State state;
        std::size_t begin;
        std::size_t next;
        std::size_t end;
    };

    const State root = problem.initial_state();
    if (problem.is_goal(root)) return {true, 0};

    absl::flat_hash_set<typename P::Key> visited;
    visited.insert(problem.key(root));
    std::uint64_t expanded = 0;

    std::vector<Move> pending;  // move lists of all open frames, stacked
    std::vector<Move> moves;
    std::vector<Frame> stack;

    auto open_frame = [&](State s) {
        detail::charge(expanded, limits);
        problem.legal_moves(s, moves);
        const std::size_t begin = pending.size();
        pending.insert(pending.end(), moves.begin(), moves.end());
        stack.push_back(Frame{std::move(s), begin, begin, pending.size()});
    };

    open_frame(root);
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.end) {
            pending.resize(top.begin);
            stack.pop_back();
            continue;
        }
        State child = problem.apply(top.state, pending[top.next++]);
        if (!visited.insert(problem.key(child)).second) continue;
        if (problem.is_goal(child)) return {true, expanded};
        open_frame(std::move(child));
    }
    return {false, expanded};
}

/// Plays uniformly random legal moves until the goal, a dead end, or `cap`
/// moves.
template <SearchProblem P>
PlayoutResult random_playout(const P& problem, std::uint64_t seed, int cap) {
    if (cap < 1) throw std::invalid_argument("random_playout: cap must be positive");
    Rng rng(seed);
    auto state = problem.initial_state();
    std::vector<typename P::Move> moves;
    PlayoutResult result;
    while (true) {
        if (problem.is_goal(state)) {
            result.solved = true;
            return result;
        }
        problem.legal_moves(state, moves);
        if (moves.empty()) return result;
        if (result.moves_made == cap) {
            result.truncated = true;
            return result;
        }
        state = problem.apply(state, moves[rng.below(moves.size())]);
        ++result.moves_made;
    }
}

/// True iff every move of `path` is legal when played in order from the
/// initial state and the final state is a goal.
template <SearchProblem P>
bool replay_reaches_goal(const P& problem, const std::vector<typename P::Move>& path) {
    auto state = problem.initial_state();
    std::vector<typename P::Move> moves;
    for (const auto& m : path) {
        problem.legal_moves(state, moves);
        if (std::find(moves.begin(), moves.end(), m) == moves.end()) return false;
        state = problem.apply(state, m);
    }
    return problem.is_goal(state);
}

}  // namespace solitaire::search
