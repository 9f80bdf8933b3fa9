#include "solitaire/boxoff.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "solitaire/rng.hpp"

namespace solitaire::boxoff {

namespace {

std::uint64_t bit(int index) { return std::uint64_t{1} << index; }

// Mask of every cell in the bounding rectangle of a and b, minus a and b.
std::uint64_t box_interior(Cell a, Cell b, int width) {
    std::uint64_t mask = 0;
    for (int r = std::min(a.row, b.row); r <= std::max(a.row, b.row); ++r) {
        for (int c = std::min(a.col, b.col); c <= std::max(a.col, b.col); ++c) {
            mask |= bit(r * width + c);
        }
    }
    return mask & ~bit(a.row * width + a.col) & ~bit(b.row * width + b.col);
}

bool tiles_by_2x3(const Params& p) { return p.h % 2 == 0 && p.w % 3 == 0; }
bool tiles_by_3x2(const Params& p) { return p.h % 3 == 0 && p.w % 2 == 0; }

}  // namespace

void validate(const Params& p) {
    if (p.h < 1 || p.w < 1) throw InvalidParams("boxoff: grid dimensions must be positive");
    if (p.h * p.w > kMaxCells) throw InvalidParams("boxoff: grid exceeds 64 cells");
    if (p.c < 1 || p.c > 26) throw InvalidParams("boxoff: color count must be in [1, 26]");
    if ((p.h * p.w) % p.c != 0) throw InvalidParams("boxoff: h*w must be divisible by c");
}

void validate_for_ltiles(const Params& p) {
    validate(p);
    if (!tiles_by_2x3(p) && !tiles_by_3x2(p)) {
        throw InvalidParams("boxoff: l-tiles need a grid tiled by 2x3 or 3x2 blocks");
    }
    if (p.h * p.w / 3 != 2 * p.c) {
        throw InvalidParams("boxoff: l-tile sets need h*w/3 == 2c");
    }
}

Grid::Grid(Params params, std::vector<Color> cells) : params_(params), cells_(std::move(cells)) {
    validate(params_);
    if (static_cast<int>(cells_.size()) != params_.h * params_.w) {
        throw InvalidParams("boxoff: cell count does not match grid size");
    }
    for (Color color : cells_) {
        if (color != kEmpty && (color < 0 || color >= params_.c)) {
            throw InvalidParams("boxoff: color id out of range");
        }
    }
}

int Grid::occupied_count() const noexcept {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(),
                                          [](Color c) { return c != kEmpty; }));
}

std::vector<Move> legal_moves(const Grid& grid) {
    Problem problem(grid);
    std::vector<Move> out;
    problem.legal_moves(problem.initial_state(), out);
    return out;
}

Grid apply_move(const Grid& grid, const Move& move) {
    if (!grid.contains(move.a) || !grid.contains(move.b)) {
        throw IllegalMove("boxoff: cell outside the grid");
    }
    if (move.a == move.b) throw IllegalMove("boxoff: a move needs two distinct cells");
    const Color ca = grid.at(move.a);
    const Color cb = grid.at(move.b);
    if (ca == kEmpty || cb == kEmpty) throw IllegalMove("boxoff: cell already eliminated");
    if (ca != cb) throw IllegalMove("boxoff: cells differ in color");
    const Cell lo{std::min(move.a.row, move.b.row), std::min(move.a.col, move.b.col)};
    const Cell hi{std::max(move.a.row, move.b.row), std::max(move.a.col, move.b.col)};
    for (int r = lo.row; r <= hi.row; ++r) {
        for (int c = lo.col; c <= hi.col; ++c) {
            const Cell cell{r, c};
            if (cell != move.a && cell != move.b && grid.at(cell) != kEmpty) {
                throw IllegalMove("boxoff: circumscribing box is not clear (rule 2)");
            }
        }
    }
    Grid next = grid;
    next.cells_[grid.index(move.a)] = kEmpty;
    next.cells_[grid.index(move.b)] = kEmpty;
    return next;
}

bool is_solved(const Grid& grid) { return grid.occupied_count() == 0; }

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::shuffled: return "shuffled";
        case Algorithm::l_tiles: return "l-tiles";
        case Algorithm::l_tiles_3unique: return "l-tiles-3unique";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::shuffled, Algorithm::l_tiles, Algorithm::l_tiles_3unique}) {
        if (name == to_string(a)) return a;
    }
    throw InvalidParams("boxoff: unknown algorithm '" + std::string(name) + "'");
}

std::vector<LTile> build_ltile_set(const Params& params, bool unique3) {
    validate_for_ltiles(params);
    const int c = params.c;
    const int t = params.h * params.w / 3;
    std::vector<LTile> tiles;
    tiles.reserve(t);
    if (!unique3) {
        for (int i = 0; i < c; ++i) {
            const auto s = static_cast<Color>(i);
            const auto d = static_cast<Color>((i + 1) % c);
            tiles.push_back(LTile{s, s, d, false});
            tiles.push_back(LTile{s, s, d, false});
        }
    } else {
        if (c < 3) throw InvalidParams("boxoff: three distinct colors per tile need c >= 3");
        for (int j = 0; j < t; ++j) {
            tiles.push_back(LTile{static_cast<Color>(j % c), static_cast<Color>((j + 1) % c),
                                  static_cast<Color>((j + 2) % c), false});
        }
    }
    return tiles;
}

Grid lay_out_tokens(const Params& params, std::span<const Color> tokens) {
    validate(params);
    return Grid(params, std::vector<Color>(tokens.begin(), tokens.end()));
}

Grid lay_out_tiles(const Params& params, std::span<const LTile> tiles) {
    validate_for_ltiles(params);
    const int t = params.h * params.w / 3;
    if (static_cast<int>(tiles.size()) != t) {
        throw InvalidParams("boxoff: tile count does not cover the grid");
    }
    // Cell offsets inside a block: {corner, long arm, short arm} of the two
    // interlocked L-trominoes. The block's long edge runs along its rows for
    // 2x3 blocks and along its columns for 3x2 blocks.
    using Shape = std::array<Cell, 3>;
    const bool wide = tiles_by_2x3(params);
    const int block_h = wide ? 2 : 3;
    const int block_w = wide ? 3 : 2;
    const std::array<Shape, 2> shapes =
        wide ? std::array<Shape, 2>{Shape{Cell{0, 0}, Cell{0, 1}, Cell{1, 0}},
                                    Shape{Cell{1, 2}, Cell{1, 1}, Cell{0, 2}}}
             : std::array<Shape, 2>{Shape{Cell{0, 0}, Cell{1, 0}, Cell{0, 1}},
                                    Shape{Cell{2, 1}, Cell{1, 1}, Cell{2, 0}}};

    std::vector<Color> cells(static_cast<std::size_t>(params.h * params.w), kEmpty);
    std::size_t next_tile = 0;
    for (int br = 0; br < params.h; br += block_h) {
        for (int bc = 0; bc < params.w; bc += block_w) {
            for (const Shape& shape : shapes) {
                const LTile& tile = tiles[next_tile++];
                const Color long_color = tile.flipped ? tile.short_arm : tile.long_arm;
                const Color short_color = tile.flipped ? tile.long_arm : tile.short_arm;
                const std::array<Color, 3> colors{tile.corner, long_color, short_color};
                for (int k = 0; k < 3; ++k) {
                    const Cell at{br + shape[k].row, bc + shape[k].col};
                    cells[static_cast<std::size_t>(at.row * params.w + at.col)] = colors[k];
                }
            }
        }
    }
    return Grid(params, std::move(cells));
}

Grid generate(const Params& params, Algorithm algorithm, std::uint64_t seed) {
    Rng rng(seed);
    if (algorithm == Algorithm::shuffled) {
        validate(params);
        const int n = params.h * params.w;
        std::vector<Color> tokens(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) tokens[i] = static_cast<Color>(i / (n / params.c));
        rng.shuffle(std::span<Color>(tokens));
        return lay_out_tokens(params, tokens);
    }
    auto tiles = build_ltile_set(params, algorithm == Algorithm::l_tiles_3unique);
    rng.shuffle(std::span<LTile>(tiles));
    for (LTile& tile : tiles) tile.flipped = rng.coin();
    return lay_out_tiles(params, tiles);
}

PairCounts adjacent_pairs(const Grid& grid) {
    const Params& p = grid.params();
    PairCounts counts;
    for (int r = 0; r < p.h; ++r) {
        for (int c = 0; c < p.w; ++c) {
            const Color here = grid.at(r, c);
            if (here == kEmpty) throw InvalidParams("boxoff: pair equality needs a fresh grid");
            if (c + 1 < p.w) {
                ++counts.total;
                counts.equal += here == grid.at(r, c + 1);
            }
            if (r + 1 < p.h) {
                ++counts.total;
                counts.equal += here == grid.at(r + 1, c);
            }
        }
    }
    return counts;
}

double pair_equality(const Grid& grid) {
    const PairCounts counts = adjacent_pairs(grid);
    return counts.total == 0 ? 0.0 : static_cast<double>(counts.equal) / counts.total;
}

std::string to_text(const Grid& grid) {
    const Params& p = grid.params();
    std::ostringstream out;
    out << "boxoff " << p.h << ' ' << p.w << ' ' << p.c << '\n';
    for (int r = 0; r < p.h; ++r) {
        for (int c = 0; c < p.w; ++c) {
            const Color color = grid.at(r, c);
            out << (color == kEmpty ? '.' : static_cast<char>('A' + color));
        }
        out << '\n';
    }
    return out.str();
}

Grid parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    Params p;
    if (!(in >> tag >> p.h >> p.w >> p.c) || tag != "boxoff") {
        throw ParseError("boxoff: expected header 'boxoff h w c'");
    }
    try {
        validate(p);
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
    std::vector<Color> cells;
    for (int r = 0; r < p.h; ++r) {
        std::string row;
        if (!(in >> row) || static_cast<int>(row.size()) != p.w) {
            throw ParseError("boxoff: row " + std::to_string(r) + " malformed");
        }
        for (char ch : row) {
            if (ch == '.') {
                cells.push_back(kEmpty);
            } else if (ch >= 'A' && ch < 'A' + p.c) {
                cells.push_back(static_cast<Color>(ch - 'A'));
            } else {
                throw ParseError(std::string("boxoff: bad cell '") + ch + "'");
            }
        }
    }
    try {
        return Grid(p, std::move(cells));
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const Move& move) {
    return std::to_string(move.a.row) + "," + std::to_string(move.a.col) + "-" +
           std::to_string(move.b.row) + "," + std::to_string(move.b.col);
}

Problem::Problem(const Grid& grid)
    : width_(grid.params().w), cells_(grid.params().h * grid.params().w), initial_(0) {
    const auto& cells = grid.cells();
    for (int i = 0; i < cells_; ++i) {
        if (cells[i] != kEmpty) initial_ |= bit(i);
    }
    for (int i = 0; i < cells_; ++i) {
        for (int j = i + 1; j < cells_; ++j) {
            if (cells[i] == kEmpty || cells[i] != cells[j]) continue;
            const Cell a = grid.cell(i);
            const Cell b = grid.cell(j);
            pairs_.push_back(Pair{bit(i) | bit(j), box_interior(a, b, width_), Move{a, b}});
        }
    }
}

void Problem::legal_moves(State state, std::vector<Move>& out) const {
    out.clear();
    for (const Pair& pair : pairs_) {
        if ((state & pair.ends) == pair.ends && (state & pair.interior) == 0) {
            out.push_back(pair.move);
        }
    }
}

Problem::State Problem::apply(State state, const Move& move) const {
    return state & ~bit(move.a.row * width_ + move.a.col) & ~bit(move.b.row * width_ + move.b.col);
}

}  // namespace solitaire::boxoff
