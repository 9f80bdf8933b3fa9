#pragma once

// Fujisan: four priests climb a 2 x 12 mountain of values 0..5 toward the
// two summit columns (5 and 6). A priest moves along its row onto a space
// whose value equals the number of unoccupied spaces travelled (destination
// included, occupied spaces skipped), or steps freely to the other row of
// its column. Ground priests must land on the mountain; summit priests may
// only step vertically.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "solitaire/errors.hpp"

namespace solitaire::fujisan {

inline constexpr int kRows = 2;
inline constexpr int kCols = 12;
inline constexpr int kSpaces = kRows * kCols;
inline constexpr int kSpots = kSpaces + 4;
inline constexpr int kPriests = 4;
inline constexpr int kSummitLo = 5;
inline constexpr int kSummitHi = 6;
inline constexpr int kMaxValue = 5;

enum class Side { left, right };

/// A place a priest can stand: one of the 24 board spaces (row * 12 + col)
/// or one of the four ground slots beside the mountain.
class Spot {
public:
    constexpr Spot() = default;
    static constexpr Spot board(int row, int col) {
        return Spot(static_cast<std::uint8_t>(row * kCols + col));
    }
    static constexpr Spot ground(Side side, int row) {
        return Spot(static_cast<std::uint8_t>(kSpaces + (side == Side::right ? 2 : 0) + row));
    }
    static constexpr Spot from_index(int index) { return Spot(static_cast<std::uint8_t>(index)); }

    constexpr int index() const noexcept { return id_; }
    constexpr bool is_ground() const noexcept { return id_ >= kSpaces; }
    constexpr int row() const noexcept { return is_ground() ? (id_ - kSpaces) % 2 : id_ / kCols; }
    /// Board column, or the virtual column -1 / 12 for ground slots.
    constexpr int col() const noexcept {
        if (!is_ground()) return id_ % kCols;
        return id_ - kSpaces < 2 ? -1 : kCols;
    }
    constexpr Side side() const noexcept { return id_ - kSpaces < 2 ? Side::left : Side::right; }
    constexpr bool on_summit() const noexcept {
        return !is_ground() && (col() == kSummitLo || col() == kSummitHi);
    }

    constexpr auto operator<=>(const Spot&) const = default;

private:
    constexpr explicit Spot(std::uint8_t id) : id_(id) {}
    std::uint8_t id_ = 0;
};

using Values = std::array<std::array<int, kCols>, kRows>;

struct Move {
    Spot from;  // the moving priest's current spot
    Spot to;
    bool operator==(const Move&) const = default;
};

class Board {
public:
    Board() = default;
    /// Priests start on the four ground slots.
    explicit Board(const Values& values);
    /// Throws InvalidParams for out-of-range values or shared spots.
    Board(const Values& values, const std::array<Spot, kPriests>& priests);

    const Values& values() const noexcept { return values_; }
    int value(int row, int col) const { return values_[row][col]; }
    const std::array<Spot, kPriests>& priests() const noexcept { return priests_; }
    bool occupied(Spot spot) const noexcept;
    bool entered_mountain(int priest) const { return !priests_[priest].is_ground(); }

    bool operator==(const Board&) const = default;

private:
    Values values_{};
    std::array<Spot, kPriests> priests_{};
};

std::array<Spot, kPriests> start_spots();

std::vector<Move> legal_moves(const Board& board);
/// Throws IllegalMove naming the broken rule.
Board apply_move(const Board& board, const Move& move);
bool is_solved(const Board& board);
/// Empty summit spaces: 4 minus priests on the summit.
int summit_heuristic(const Board& board);

enum class Algorithm { shuffled, shuffled_unique_steps, piecepack, engraved_tiles, dominoes };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);
inline constexpr std::array<Algorithm, 5> kAlgorithms{
    Algorithm::shuffled, Algorithm::shuffled_unique_steps, Algorithm::piecepack,
    Algorithm::engraved_tiles, Algorithm::dominoes};

/// Unordered value pair of a tile or domino.
struct Tile {
    int a = 0;
    int b = 0;
    bool operator==(const Tile&) const = default;
};

/// All pairs 0 <= a <= b <= 5 except {0,0}.
std::vector<Tile> engraved_tile_set();
/// All pairs 0 <= a < b <= 5.
std::vector<Tile> domino_set();

inline constexpr int kUniqueStepRetries = 1'000'000;

/// Throws std::runtime_error if rejection sampling exhausts its retries.
Board generate(Algorithm algorithm, std::uint64_t seed);

/// True when no two columns hold the same unordered value pair.
bool steps_unique(const Values& values);

/// Fraction of ordered column pairs (B, A) where a priest in B could reach A
/// on an empty board.
double connectivity(const Values& values);

/// Distance to the nearer summit column; ground slots count as 6.
int summit_distance(Spot spot);
/// Moves in `path` that take a priest farther from the summit. Throws
/// IllegalMove if the path is not playable from `board`.
int count_counterintuitive(const Board& board, const std::vector<Move>& path);

/// `fujisan` header, row 1 then row 0 as 12 digits each, and an optional
/// priest line such as `P L 0 | R 1 | 0 3 | 1 6`.
std::string to_text(const Board& board);
Board parse_text(std::string_view text);
std::string to_string(Spot spot);
std::string to_string(const Move& move);

/// Search adapter. States are occupancy masks over the 28 spots; priests
/// are interchangeable.
class Problem {
public:
    using State = std::uint32_t;
    using Key = std::uint32_t;
    using Move = fujisan::Move;

    explicit Problem(const Board& board);

    State initial_state() const noexcept { return initial_; }
    void legal_moves(State state, std::vector<Move>& out) const;
    State apply(State state, const Move& move) const noexcept {
        return (state & ~(1U << move.from.index())) | (1U << move.to.index());
    }
    bool is_goal(State state) const noexcept { return (state & kSummitMask) == kSummitMask; }
    Key key(State state) const noexcept { return state; }
    int heuristic(State state) const noexcept {
        return kPriests - __builtin_popcount(state & kSummitMask);
    }

    static constexpr State kSummitMask = (1U << kSummitLo) | (1U << kSummitHi) |
                                         (1U << (kCols + kSummitLo)) | (1U << (kCols + kSummitHi));

private:
    void scan(State state, Spot from, int row, int start, int step, std::vector<Move>& out) const;

    Values values_;
    State initial_;
};

/// Same rules without the heuristic, so the generic solver falls back to BFS.
class PlainProblem {
public:
    using State = Problem::State;
    using Key = Problem::Key;
    using Move = Problem::Move;

    explicit PlainProblem(const Board& board) : inner_(board) {}
    State initial_state() const noexcept { return inner_.initial_state(); }
    void legal_moves(State s, std::vector<Move>& out) const { inner_.legal_moves(s, out); }
    State apply(State s, const Move& m) const noexcept { return inner_.apply(s, m); }
    bool is_goal(State s) const noexcept { return inner_.is_goal(s); }
    Key key(State s) const noexcept { return s; }

private:
    Problem inner_;
};

}  // namespace solitaire::fujisan
