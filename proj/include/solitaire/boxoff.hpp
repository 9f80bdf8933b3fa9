#pragma once

// BoxOff: remove same-colored pairs from an h x w grid until it is empty.
// A pair may be removed when every other cell of its bounding rectangle is
// already empty (orthogonal neighbours satisfy this trivially).

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "solitaire/errors.hpp"

namespace solitaire::boxoff {

using Color = std::int8_t;
inline constexpr Color kEmpty = -1;
inline constexpr int kMaxCells = 64;

struct Params {
    int h = 0;
    int w = 0;
    int c = 0;
    bool operator==(const Params&) const = default;
};

/// Throws InvalidParams unless the grid fits and colors divide it evenly.
void validate(const Params& params);
/// Additionally requires a tiling by 2x3 (or 3x2) blocks.
void validate_for_ltiles(const Params& params);

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

struct Move {
    Cell a;
    Cell b;
    bool operator==(const Move&) const = default;
};

class Grid {
public:
    Grid() = default;
    /// Row-major cells; any position is accepted, including ones play cannot
    /// reach. Throws InvalidParams on bad sizes or colors.
    Grid(Params params, std::vector<Color> cells);

    const Params& params() const noexcept { return params_; }
    const std::vector<Color>& cells() const noexcept { return cells_; }
    Color at(Cell cell) const { return cells_[index(cell)]; }
    Color at(int row, int col) const { return at(Cell{row, col}); }
    int index(Cell cell) const noexcept { return cell.row * params_.w + cell.col; }
    Cell cell(int index) const noexcept { return Cell{index / params_.w, index % params_.w}; }
    bool contains(Cell cell) const noexcept {
        return cell.row >= 0 && cell.row < params_.h && cell.col >= 0 && cell.col < params_.w;
    }
    int occupied_count() const noexcept;

    bool operator==(const Grid&) const = default;

private:
    friend Grid apply_move(const Grid&, const Move&);
    Params params_;
    std::vector<Color> cells_;
};

std::vector<Move> legal_moves(const Grid& grid);
/// Throws IllegalMove naming the violated condition.
Grid apply_move(const Grid& grid, const Move& move);
bool is_solved(const Grid& grid);

enum class Algorithm { shuffled, l_tiles, l_tiles_3unique };

std::string_view to_string(Algorithm algorithm);
/// Throws InvalidParams for unknown names.
Algorithm parse_algorithm(std::string_view name);

/// An L-tromino. `corner` is the bend of the L, `long_arm` its neighbour
/// along the block's long edge and `short_arm` the other neighbour. A flipped
/// tile mirrors through the corner, swapping where the two arms sit.
struct LTile {
    Color corner = 0;
    Color long_arm = 0;
    Color short_arm = 0;
    bool flipped = false;
    bool operator==(const LTile&) const = default;
};

/// The canonical tile set: for each color i, two tiles with i on the corner
/// and long arm and (i + 1) mod c on the short arm. With `unique3`, tile j
/// carries colors j, j+1, j+2 (mod c). Requires h*w/3 == 2c.
std::vector<LTile> build_ltile_set(const Params& params, bool unique3);

/// Lays tokens out row-major.
Grid lay_out_tokens(const Params& params, std::span<const Color> tokens);
/// Places tiles into the fixed sequence of 2x3 blocks: tiles 2k and 2k+1
/// interlock inside block k, blocks in row-major order.
Grid lay_out_tiles(const Params& params, std::span<const LTile> tiles);

Grid generate(const Params& params, Algorithm algorithm, std::uint64_t seed);

struct PairCounts {
    int equal = 0;
    int total = 0;
};

/// Orthogonally adjacent pairs and how many share a color. Throws
/// InvalidParams if the grid has empty cells.
PairCounts adjacent_pairs(const Grid& grid);
double pair_equality(const Grid& grid);

/// `boxoff h w c` header, then one row per line (A, B, ... or `.`).
std::string to_text(const Grid& grid);
Grid parse_text(std::string_view text);
std::string to_string(const Move& move);

/// Search adapter. States are occupancy bitmasks over the row-major cells.
class Problem {
public:
    using State = std::uint64_t;
    using Key = std::uint64_t;
    using Move = boxoff::Move;

    explicit Problem(const Grid& grid);

    State initial_state() const noexcept { return initial_; }
    void legal_moves(State state, std::vector<Move>& out) const;
    State apply(State state, const Move& move) const;
    bool is_goal(State state) const noexcept { return state == 0; }
    Key key(State state) const noexcept { return state; }

    /// Longest possible game; every move removes two tokens.
    int natural_move_bound() const noexcept { return cells_ / 2; }

private:
    struct Pair {
        std::uint64_t ends;
        std::uint64_t interior;
        Move move;
    };
    int width_;
    int cells_;
    State initial_;
    std::vector<Pair> pairs_;
};

}  // namespace solitaire::boxoff
