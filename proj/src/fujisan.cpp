#include "solitaire/fujisan.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "solitaire/rng.hpp"

namespace solitaire::fujisan {

std::array<Spot, kPriests> start_spots() {
    return {Spot::ground(Side::left, 0), Spot::ground(Side::left, 1),
            Spot::ground(Side::right, 0), Spot::ground(Side::right, 1)};
}

Board::Board(const Values& values) : Board(values, start_spots()) {}

Board::Board(const Values& values, const std::array<Spot, kPriests>& priests)
    : values_(values), priests_(priests) {
    for (const auto& row : values_) {
        for (int v : row) {
            if (v < 0 || v > kMaxValue) throw InvalidParams("fujisan: values must lie in [0, 5]");
        }
    }
    for (int i = 0; i < kPriests; ++i) {
        if (priests_[i].index() < 0 || priests_[i].index() >= kSpots) {
            throw InvalidParams("fujisan: priest spot out of range");
        }
        for (int j = 0; j < i; ++j) {
            if (priests_[i] == priests_[j]) throw InvalidParams("fujisan: two priests share a spot");
        }
    }
}

bool Board::occupied(Spot spot) const noexcept {
    return std::find(priests_.begin(), priests_.end(), spot) != priests_.end();
}

std::vector<Move> legal_moves(const Board& board) {
    Problem problem(board);
    std::vector<Move> out;
    problem.legal_moves(problem.initial_state(), out);
    return out;
}

Board apply_move(const Board& board, const Move& move) {
    const auto& priests = board.priests();
    const auto it = std::find(priests.begin(), priests.end(), move.from);
    if (it == priests.end()) throw IllegalMove("fujisan: no priest at the source spot");
    const auto moves = legal_moves(board);
    if (std::find(moves.begin(), moves.end(), move) == moves.end()) {
        if (move.to.index() < 0 || move.to.index() >= kSpots) {
            throw IllegalMove("fujisan: destination off the board");
        }
        if (move.to.is_ground()) throw IllegalMove("fujisan: priests never return to the ground");
        if (board.occupied(move.to)) throw IllegalMove("fujisan: destination occupied (rule 1)");
        if (move.from.is_ground() && move.to.row() != move.from.row()) {
            throw IllegalMove("fujisan: first move must land on the mountain in its row (rule 3a)");
        }
        if (move.from.on_summit() && move.to.col() != move.from.col()) {
            throw IllegalMove("fujisan: summit priests cannot move left or right (rule 4)");
        }
        if (move.from.row() != move.to.row() && move.from.col() != move.to.col()) {
            throw IllegalMove("fujisan: moves are horizontal or vertical");
        }
        throw IllegalMove("fujisan: distance does not match the destination value (rule 2)");
    }
    auto next = priests;
    next[static_cast<std::size_t>(it - priests.begin())] = move.to;
    return Board(board.values(), next);
}

bool is_solved(const Board& board) {
    return std::all_of(board.priests().begin(), board.priests().end(),
                       [](Spot s) { return s.on_summit(); });
}

int summit_heuristic(const Board& board) {
    return kPriests - static_cast<int>(std::count_if(board.priests().begin(), board.priests().end(),
                                                     [](Spot s) { return s.on_summit(); }));
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::shuffled: return "shuffled";
        case Algorithm::shuffled_unique_steps: return "shuffled-unique-steps";
        case Algorithm::piecepack: return "piecepack";
        case Algorithm::engraved_tiles: return "engraved-tiles";
        case Algorithm::dominoes: return "dominoes";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto a : kAlgorithms) {
        if (name == to_string(a)) return a;
    }
    throw InvalidParams("fujisan: unknown algorithm '" + std::string(name) + "'");
}

std::vector<Tile> engraved_tile_set() {
    std::vector<Tile> tiles;
    for (int a = 0; a <= kMaxValue; ++a) {
        for (int b = a; b <= kMaxValue; ++b) {
            if (a == 0 && b == 0) continue;
            tiles.push_back(Tile{a, b});
        }
    }
    return tiles;
}

std::vector<Tile> domino_set() {
    std::vector<Tile> tiles;
    for (int a = 0; a <= kMaxValue; ++a) {
        for (int b = a + 1; b <= kMaxValue; ++b) tiles.push_back(Tile{a, b});
    }
    return tiles;
}

namespace {

Values shuffled_values(Rng& rng) {
    std::array<int, kSpaces> coins{};
    for (int i = 0; i < kSpaces; ++i) coins[i] = i % (kMaxValue + 1);
    rng.shuffle(std::span<int>(coins));
    Values values{};
    for (int i = 0; i < kSpaces; ++i) values[i / kCols][i % kCols] = coins[i];
    return values;
}

// Four suit decks of 0..5; columns filled right to left, two coins from one
// deck per column, decks taken in turn.
Values piecepack_values(Rng& rng) {
    std::array<std::array<int, kMaxValue + 1>, 4> decks{};
    for (auto& deck : decks) {
        for (int v = 0; v <= kMaxValue; ++v) deck[v] = v;
        rng.shuffle(std::span<int>(deck));
    }
    Values values{};
    for (int j = 0; j < kCols; ++j) {
        const int col = kCols - 1 - j;
        const auto& deck = decks[j % 4];
        const int drawn = 2 * (j / 4);
        values[0][col] = deck[drawn];
        values[1][col] = deck[drawn + 1];
    }
    return values;
}

Values engraved_values(Rng& rng) {
    auto tiles = engraved_tile_set();
    rng.shuffle(std::span<Tile>(tiles));
    // Visible positions: the outer column of each lower-layer tile, then the
    // two top tiles which each show both of their columns.
    constexpr std::array<int, 8> kSingle{0, 1, 2, 3, 8, 9, 10, 11};
    constexpr std::array<int, 2> kTop{4, 6};
    Values values{};
    std::size_t next = 0;
    auto oriented = [&rng](Tile t) {
        if (t.a != t.b && rng.coin()) std::swap(t.a, t.b);
        return t;
    };
    for (int col : kSingle) {
        const Tile t = oriented(tiles[next++]);
        values[0][col] = t.a;
        values[1][col] = t.b;
    }
    for (int col : kTop) {
        const Tile t = oriented(tiles[next++]);
        values[0][col] = t.a;
        values[1][col] = t.b;
        values[0][col + 1] = t.b;
        values[1][col + 1] = t.a;
    }
    return values;
}

Values domino_values(Rng& rng) {
    auto dominoes = domino_set();
    rng.shuffle(std::span<Tile>(dominoes));
    Values values{};
    for (int col = 0; col < kCols; ++col) {
        Tile t = dominoes[col];
        if (rng.coin()) std::swap(t.a, t.b);
        values[0][col] = t.a;
        values[1][col] = t.b;
    }
    return values;
}

}  // namespace

bool steps_unique(const Values& values) {
    std::array<bool, 36> seen{};
    for (int col = 0; col < kCols; ++col) {
        const int lo = std::min(values[0][col], values[1][col]);
        const int hi = std::max(values[0][col], values[1][col]);
        bool& slot = seen[lo * 6 + hi];
        if (slot) return false;
        slot = true;
    }
    return true;
}

Board generate(Algorithm algorithm, std::uint64_t seed) {
    Rng rng(seed);
    switch (algorithm) {
        case Algorithm::shuffled: return Board(shuffled_values(rng));
        case Algorithm::shuffled_unique_steps:
            for (int attempt = 0; attempt < kUniqueStepRetries; ++attempt) {
                const Values values = shuffled_values(rng);
                if (steps_unique(values)) return Board(values);
            }
            throw std::runtime_error("fujisan: unique-step rejection sampling exhausted its retries");
        case Algorithm::piecepack: return Board(piecepack_values(rng));
        case Algorithm::engraved_tiles: return Board(engraved_values(rng));
        case Algorithm::dominoes: return Board(domino_values(rng));
    }
    throw InvalidParams("fujisan: unknown algorithm");
}

double connectivity(const Values& values) {
    int connected = 0;
    for (int b = 0; b < kCols; ++b) {
        for (int a = 0; a < kCols; ++a) {
            if (a == b) continue;
            const int distance = std::abs(a - b);
            if (values[0][a] == distance || values[1][a] == distance) ++connected;
        }
    }
    return static_cast<double>(connected) / (kCols * (kCols - 1));
}

int summit_distance(Spot spot) {
    if (spot.is_ground()) return 6;
    const int col = spot.col();
    return std::min(std::abs(col - kSummitLo), std::abs(col - kSummitHi));
}

int count_counterintuitive(const Board& board, const std::vector<Move>& path) {
    Board current = board;
    int count = 0;
    for (const Move& move : path) {
        current = apply_move(current, move);
        if (move.from.col() != move.to.col() && summit_distance(move.to) > summit_distance(move.from)) {
            ++count;
        }
    }
    return count;
}

std::string to_string(Spot spot) {
    if (spot.is_ground()) {
        return std::string(spot.side() == Side::left ? "L " : "R ") + std::to_string(spot.row());
    }
    return std::to_string(spot.row()) + " " + std::to_string(spot.col());
}

std::string to_string(const Move& move) {
    auto compact = [](Spot s) {
        if (s.is_ground()) return std::string(s.side() == Side::left ? "L" : "R") + std::to_string(s.row());
        return std::to_string(s.row()) + "," + std::to_string(s.col());
    };
    return compact(move.from) + ">" + compact(move.to);
}

std::string to_text(const Board& board) {
    std::ostringstream out;
    out << "fujisan\n";
    for (int row = kRows - 1; row >= 0; --row) {
        for (int col = 0; col < kCols; ++col) out << board.value(row, col);
        out << '\n';
    }
    if (board.priests() != start_spots()) {
        out << "P";
        for (int i = 0; i < kPriests; ++i) out << (i == 0 ? " " : " | ") << to_string(board.priests()[i]);
        out << '\n';
    }
    return out.str();
}

Board parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    if (!(in >> tag) || tag != "fujisan") throw ParseError("fujisan: expected header 'fujisan'");
    Values values{};
    for (int row = kRows - 1; row >= 0; --row) {
        std::string digits;
        if (!(in >> digits) || digits.size() != kCols) {
            throw ParseError("fujisan: expected 12 digits for row " + std::to_string(row));
        }
        for (int col = 0; col < kCols; ++col) {
            const char ch = digits[col];
            if (ch < '0' || ch > '0' + kMaxValue) throw ParseError("fujisan: values must be 0-5");
            values[row][col] = ch - '0';
        }
    }
    std::string marker;
    if (!(in >> marker)) return Board(values);
    if (marker != "P") throw ParseError("fujisan: unexpected token '" + marker + "'");
    std::string rest;
    std::getline(in, rest);
    std::array<Spot, kPriests> priests{};
    std::istringstream groups(rest);
    std::string group;
    int count = 0;
    while (std::getline(groups, group, '|')) {
        if (count == kPriests) throw ParseError("fujisan: more than four priests");
        std::istringstream fields(group);
        std::string first;
        int second = -1;
        if (!(fields >> first >> second)) throw ParseError("fujisan: malformed priest '" + group + "'");
        if (first == "L" || first == "R") {
            if (second < 0 || second >= kRows) throw ParseError("fujisan: ground row must be 0 or 1");
            priests[count++] = Spot::ground(first == "L" ? Side::left : Side::right, second);
        } else {
            const int row = std::atoi(first.c_str());
            if (first.size() != 1 || row < 0 || row >= kRows || second < 0 || second >= kCols) {
                throw ParseError("fujisan: priest space out of range in '" + group + "'");
            }
            priests[count++] = Spot::board(row, second);
        }
    }
    if (count != kPriests) throw ParseError("fujisan: priest line needs four entries");
    try {
        return Board(values, priests);
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

Problem::Problem(const Board& board) : values_(board.values()), initial_(0) {
    for (Spot s : board.priests()) initial_ |= 1U << s.index();
}

void Problem::scan(State state, Spot from, int row, int start, int step,
                   std::vector<Move>& out) const {
    int travelled = 0;
    for (int col = start; col >= 0 && col < kCols; col += step) {
        const int index = row * kCols + col;
        if (state & (1U << index)) continue;  // occupied spaces are not counted
        if (++travelled > kMaxValue) return;
        if (values_[row][col] == travelled) out.push_back(Move{from, Spot::from_index(index)});
    }
}

void Problem::legal_moves(State state, std::vector<Move>& out) const {
    out.clear();
    for (int i = 0; i < kSpots; ++i) {
        if (!(state & (1U << i))) continue;
        const Spot from = Spot::from_index(i);
        if (from.is_ground()) {
            if (from.side() == Side::left) {
                scan(state, from, from.row(), 0, +1, out);
            } else {
                scan(state, from, from.row(), kCols - 1, -1, out);
            }
            continue;
        }
        const int row = from.row();
        const int col = from.col();
        if (!from.on_summit()) {
            scan(state, from, row, col - 1, -1, out);
            scan(state, from, row, col + 1, +1, out);
        }
        const int other = (1 - row) * kCols + col;
        if (!(state & (1U << other))) out.push_back(Move{from, Spot::from_index(other)});
    }
}

}  // namespace solitaire::fujisan
