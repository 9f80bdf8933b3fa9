#pragma once

// Pretzel solitaire, a Montana-family patience. k suits of n ranks are dealt
// into a k x n grid and the aces moved to an implicit column on the left,
// leaving k holes. A card may move into a hole when it is the successor
// (same suit, one rank higher) of the card directly left of the hole.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solitaire/errors.hpp"

namespace solitaire::pretzel {

inline constexpr int kMaxCells = 40;

struct Params {
    int k = 0;  // suits
    int n = 0;  // ranks per suit
    bool operator==(const Params&) const = default;
};

void validate(const Params& params);

struct Card {
    int suit = 0;
    int rank = 1;  // 1 is the ace
    auto operator<=>(const Card&) const = default;
};

struct Pos {
    std::uint8_t row = 0;
    std::uint8_t col = 0;
    bool operator==(const Pos&) const = default;
};

struct Move {
    Pos from;
    Pos to;
    bool operator==(const Move&) const = default;
};

/// Compact cell contents: suit * n + (rank - 1), or kHole.
using CardId = std::uint8_t;
inline constexpr CardId kHole = 0xff;

class Layout {
public:
    Layout() = default;
    /// Validates a mid-game layout: k holes, no aces, each other card once.
    Layout(Params params, std::vector<CardId> cells);

    const Params& params() const noexcept { return params_; }
    const std::vector<CardId>& cells() const noexcept { return cells_; }
    std::optional<Card> at(int row, int col) const;
    CardId id_at(int row, int col) const { return cells_[row * params_.n + col]; }
    /// Suit whose ace heads row `row`. Fixed as suit ids 0..k-1.
    int row_suit(int row) const noexcept { return row; }

    CardId id(Card card) const noexcept {
        return static_cast<CardId>(card.suit * params_.n + card.rank - 1);
    }
    Card card(CardId id) const noexcept { return Card{id / params_.n, id % params_.n + 1}; }
    std::optional<Pos> find(Card card) const;

    bool operator==(const Layout&) const = default;

private:
    friend Layout apply_move(const Layout&, const Move&);
    Params params_;
    std::vector<CardId> cells_;
};

std::vector<Move> legal_moves(const Layout& layout);
/// Throws IllegalMove.
Layout apply_move(const Layout& layout, const Move& move);
bool is_solved(const Layout& layout);

enum class Algorithm { shuffled, sequential_suits, banded_suits };

std::string_view to_string(Algorithm algorithm);
Algorithm parse_algorithm(std::string_view name);

/// Builds a layout from the full k x n deal (aces included), row-major, then
/// pulls the aces out into the implicit column.
Layout deal(const Params& params, std::span<const Card> row_major);

/// Deal orders produced from independently ordered suit decks. Deck s lists
/// the ranks of suit s from top to bottom.
std::vector<Card> sequential_order(const Params& params,
                                   std::span<const std::vector<int>> suit_decks);
std::vector<Card> banded_order(const Params& params,
                               std::span<const std::vector<int>> suit_decks);

Layout generate(const Params& params, Algorithm algorithm, std::uint64_t seed);

struct Blockades {
    bool ducking_crab = false;
    bool duelling_deuces = false;
};

/// Ducking Crab for suit s: the 2 of s sits in the last column while the 3
/// of s occupies the 2's goal cell. Always false when n < 3.
bool has_ducking_crab(const Layout& layout, int suit);
/// Duelling Deuces for suits s != u: each 2 occupies the other's goal cell.
bool has_duelling_deuces(const Layout& layout, int suit_a, int suit_b);
Blockades detect_blockades(const Layout& layout);

/// `pretzel k n` header, then k rows of n tokens such as `3S` or `--`.
std::string to_text(const Layout& layout);
Layout parse_text(std::string_view text);
std::string to_string(const Move& move);
std::string card_token(Card card);

/// Search adapter over a fixed-size cell array.
class Problem {
public:
    using State = std::array<CardId, kMaxCells>;
    using Key = std::array<std::uint64_t, 4>;
    using Move = pretzel::Move;

    explicit Problem(const Layout& layout);

    State initial_state() const noexcept { return initial_; }
    void legal_moves(const State& state, std::vector<Move>& out) const;
    State apply(const State& state, const Move& move) const;
    bool is_goal(const State& state) const noexcept { return state == goal_; }
    Key key(const State& state) const noexcept;

    int cell_count() const noexcept { return k_ * n_; }

private:
    int k_;
    int n_;
    State initial_;
    State goal_;
};

}  // namespace solitaire::pretzel
