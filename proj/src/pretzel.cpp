#include "solitaire/pretzel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "solitaire/rng.hpp"

namespace solitaire::pretzel {

namespace {

constexpr std::string_view kSuitLetters = "SHDCEFGIJKLMNOPQRTUV";

}  // namespace

void validate(const Params& p) {
    if (p.k < 1) throw InvalidParams("pretzel: need at least one suit");
    if (p.n < 2) throw InvalidParams("pretzel: need at least two ranks");
    if (p.k * p.n > kMaxCells) throw InvalidParams("pretzel: deck exceeds 40 cards");
    if (p.k > static_cast<int>(kSuitLetters.size())) throw InvalidParams("pretzel: too many suits");
}

Layout::Layout(Params params, std::vector<CardId> cells)
    : params_(params), cells_(std::move(cells)) {
    validate(params_);
    const int total = params_.k * params_.n;
    if (static_cast<int>(cells_.size()) != total) {
        throw InvalidParams("pretzel: cell count does not match k x n");
    }
    std::vector<int> seen(static_cast<std::size_t>(total), 0);
    int holes = 0;
    for (CardId id : cells_) {
        if (id == kHole) {
            ++holes;
            continue;
        }
        if (id >= total) throw InvalidParams("pretzel: card id out of range");
        if (card(id).rank == 1) throw InvalidParams("pretzel: aces belong to the ace column");
        if (seen[id]++ != 0) throw InvalidParams("pretzel: duplicate card");
    }
    if (holes != params_.k) throw InvalidParams("pretzel: layout must have exactly k holes");
}

std::optional<Card> Layout::at(int row, int col) const {
    const CardId id = id_at(row, col);
    if (id == kHole) return std::nullopt;
    return card(id);
}

std::optional<Pos> Layout::find(Card wanted) const {
    const CardId target = id(wanted);
    for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
        if (cells_[i] == target) {
            return Pos{static_cast<std::uint8_t>(i / params_.n),
                       static_cast<std::uint8_t>(i % params_.n)};
        }
    }
    return std::nullopt;
}

std::vector<Move> legal_moves(const Layout& layout) {
    Problem problem(layout);
    std::vector<Move> out;
    problem.legal_moves(problem.initial_state(), out);
    return out;
}

Layout apply_move(const Layout& layout, const Move& move) {
    const Params& p = layout.params();
    auto inside = [&](Pos pos) { return pos.row < p.k && pos.col < p.n; };
    if (!inside(move.from) || !inside(move.to)) throw IllegalMove("pretzel: cell outside the grid");
    if (move.from == move.to) throw IllegalMove("pretzel: source and target coincide");
    const CardId moving = layout.id_at(move.from.row, move.from.col);
    if (moving == kHole) throw IllegalMove("pretzel: no card at the source cell");
    if (layout.id_at(move.to.row, move.to.col) != kHole) {
        throw IllegalMove("pretzel: target cell is not a hole");
    }
    CardId wanted;
    if (move.to.col == 0) {
        wanted = layout.id(Card{layout.row_suit(move.to.row), 2});
    } else {
        const CardId left = layout.id_at(move.to.row, move.to.col - 1);
        if (left == kHole) throw IllegalMove("pretzel: hole has no card on its left");
        if (layout.card(left).rank == p.n) throw IllegalMove("pretzel: left card has no successor");
        wanted = static_cast<CardId>(left + 1);
    }
    if (moving != wanted) throw IllegalMove("pretzel: card is not the successor of the left card");
    Layout next = layout;
    next.cells_[move.to.row * p.n + move.to.col] = moving;
    next.cells_[move.from.row * p.n + move.from.col] = kHole;
    return next;
}

bool is_solved(const Layout& layout) {
    const Params& p = layout.params();
    for (int r = 0; r < p.k; ++r) {
        for (int c = 0; c + 1 < p.n; ++c) {
            if (layout.id_at(r, c) != layout.id(Card{layout.row_suit(r), c + 2})) return false;
        }
        if (layout.id_at(r, p.n - 1) != kHole) return false;
    }
    return true;
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::shuffled: return "shuffled";
        case Algorithm::sequential_suits: return "sequential-suits";
        case Algorithm::banded_suits: return "banded-suits";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (auto a : {Algorithm::shuffled, Algorithm::sequential_suits, Algorithm::banded_suits}) {
        if (name == to_string(a)) return a;
    }
    throw InvalidParams("pretzel: unknown algorithm '" + std::string(name) + "'");
}

Layout deal(const Params& params, std::span<const Card> row_major) {
    validate(params);
    const int total = params.k * params.n;
    if (static_cast<int>(row_major.size()) != total) {
        throw InvalidParams("pretzel: deal must cover the whole grid");
    }
    std::vector<CardId> cells(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
        const Card& card = row_major[i];
        if (card.suit < 0 || card.suit >= params.k || card.rank < 1 || card.rank > params.n) {
            throw InvalidParams("pretzel: card outside the deck");
        }
        cells[i] = card.rank == 1 ? kHole : static_cast<CardId>(card.suit * params.n + card.rank - 1);
    }
    return Layout(params, std::move(cells));
}

namespace {

void check_decks(const Params& params, std::span<const std::vector<int>> suit_decks) {
    validate(params);
    if (static_cast<int>(suit_decks.size()) != params.k) {
        throw InvalidParams("pretzel: need one deck per suit");
    }
    for (const auto& deck : suit_decks) {
        if (static_cast<int>(deck.size()) != params.n) {
            throw InvalidParams("pretzel: each suit deck holds n cards");
        }
    }
}

}  // namespace

std::vector<Card> sequential_order(const Params& params,
                                   std::span<const std::vector<int>> suit_decks) {
    check_decks(params, suit_decks);
    const int total = params.k * params.n;
    std::vector<Card> order;
    order.reserve(static_cast<std::size_t>(total));
    for (int i = 0; i < total; ++i) {
        const int suit = i % params.k;
        order.push_back(Card{suit, suit_decks[suit][i / params.k]});
    }
    return order;
}

std::vector<Card> banded_order(const Params& params,
                               std::span<const std::vector<int>> suit_decks) {
    check_decks(params, suit_decks);
    const int total = params.k * params.n;
    std::vector<Card> order(static_cast<std::size_t>(total));
    // Deal index i goes down the columns: row i % k, column i / k.
    for (int i = 0; i < total; ++i) {
        const int suit = i / params.n;
        const int row = i % params.k;
        const int col = i / params.k;
        order[row * params.n + col] = Card{suit, suit_decks[suit][i % params.n]};
    }
    return order;
}

Layout generate(const Params& params, Algorithm algorithm, std::uint64_t seed) {
    validate(params);
    Rng rng(seed);
    if (algorithm == Algorithm::shuffled) {
        std::vector<Card> deck;
        for (int s = 0; s < params.k; ++s) {
            for (int r = 1; r <= params.n; ++r) deck.push_back(Card{s, r});
        }
        rng.shuffle(std::span<Card>(deck));
        return deal(params, deck);
    }
    std::vector<std::vector<int>> decks(static_cast<std::size_t>(params.k));
    for (auto& deck : decks) {
        deck.resize(static_cast<std::size_t>(params.n));
        std::iota(deck.begin(), deck.end(), 1);
        rng.shuffle(std::span<int>(deck));
    }
    return deal(params, algorithm == Algorithm::sequential_suits ? sequential_order(params, decks)
                                                                 : banded_order(params, decks));
}

bool has_ducking_crab(const Layout& layout, int suit) {
    const Params& p = layout.params();
    if (p.n < 3) return false;
    const auto two = layout.find(Card{suit, 2});
    if (!two || two->col != p.n - 1) return false;
    return layout.id_at(suit, 0) == layout.id(Card{suit, 3});
}

bool has_duelling_deuces(const Layout& layout, int suit_a, int suit_b) {
    if (suit_a == suit_b) return false;
    return layout.id_at(suit_b, 0) == layout.id(Card{suit_a, 2}) &&
           layout.id_at(suit_a, 0) == layout.id(Card{suit_b, 2});
}

Blockades detect_blockades(const Layout& layout) {
    const int k = layout.params().k;
    Blockades found;
    for (int s = 0; s < k; ++s) {
        found.ducking_crab = found.ducking_crab || has_ducking_crab(layout, s);
        for (int u = s + 1; u < k; ++u) {
            found.duelling_deuces = found.duelling_deuces || has_duelling_deuces(layout, s, u);
        }
    }
    return found;
}

std::string card_token(Card card) {
    return std::to_string(card.rank) + kSuitLetters[static_cast<std::size_t>(card.suit)];
}

std::string to_text(const Layout& layout) {
    const Params& p = layout.params();
    std::ostringstream out;
    out << "pretzel " << p.k << ' ' << p.n << '\n';
    for (int r = 0; r < p.k; ++r) {
        for (int c = 0; c < p.n; ++c) {
            if (c != 0) out << ' ';
            const auto card = layout.at(r, c);
            out << (card ? card_token(*card) : "--");
        }
        out << '\n';
    }
    return out.str();
}

Layout parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string tag;
    Params p;
    if (!(in >> tag >> p.k >> p.n) || tag != "pretzel") {
        throw ParseError("pretzel: expected header 'pretzel k n'");
    }
    try {
        validate(p);
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
    std::vector<CardId> cells;
    for (int i = 0; i < p.k * p.n; ++i) {
        std::string token;
        if (!(in >> token)) throw ParseError("pretzel: grid truncated");
        if (token == "--") {
            cells.push_back(kHole);
            continue;
        }
        const auto suit = kSuitLetters.find(token.back());
        const std::string digits = token.substr(0, token.size() - 1);
        if (suit == std::string_view::npos || static_cast<int>(suit) >= p.k || digits.empty() ||
            !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
            throw ParseError("pretzel: bad card token '" + token + "'");
        }
        const int rank = std::stoi(digits);
        if (rank < 1 || rank > p.n) throw ParseError("pretzel: rank out of range in '" + token + "'");
        cells.push_back(static_cast<CardId>(static_cast<int>(suit) * p.n + rank - 1));
    }
    try {
        return Layout(p, std::move(cells));
    } catch (const InvalidParams& e) {
        throw ParseError(e.what());
    }
}

std::string to_string(const Move& move) {
    return std::to_string(move.from.row) + "," + std::to_string(move.from.col) + ">" +
           std::to_string(move.to.row) + "," + std::to_string(move.to.col);
}

Problem::Problem(const Layout& layout) : k_(layout.params().k), n_(layout.params().n) {
    initial_.fill(kHole);
    goal_.fill(kHole);
    const auto& cells = layout.cells();
    std::copy(cells.begin(), cells.end(), initial_.begin());
    for (int r = 0; r < k_; ++r) {
        for (int c = 0; c + 1 < n_; ++c) {
            goal_[r * n_ + c] = static_cast<CardId>(layout.row_suit(r) * n_ + c + 1);
        }
    }
}

void Problem::legal_moves(const State& state, std::vector<Move>& out) const {
    out.clear();
    const int total = k_ * n_;
    std::array<std::uint8_t, kMaxCells> where{};
    for (int i = 0; i < total; ++i) {
        if (state[i] != kHole) where[state[i]] = static_cast<std::uint8_t>(i);
    }
    for (int i = 0; i < total; ++i) {
        if (state[i] != kHole) continue;
        const int col = i % n_;
        CardId wanted;
        if (col == 0) {
            wanted = static_cast<CardId>((i / n_) * n_ + 1);  // the row suit's 2
        } else {
            const CardId left = state[i - 1];
            if (left == kHole || left % n_ == n_ - 1) continue;
            wanted = static_cast<CardId>(left + 1);
        }
        const int from = where[wanted];
        out.push_back(Move{Pos{static_cast<std::uint8_t>(from / n_), static_cast<std::uint8_t>(from % n_)},
                           Pos{static_cast<std::uint8_t>(i / n_), static_cast<std::uint8_t>(col)}});
    }
}

Problem::State Problem::apply(const State& state, const Move& move) const {
    State next = state;
    const int from = move.from.row * n_ + move.from.col;
    const int to = move.to.row * n_ + move.to.col;
    next[to] = next[from];
    next[from] = kHole;
    return next;
}

Problem::Key Problem::key(const State& state) const noexcept {
    Key key{};
    for (int i = 0; i < kMaxCells; ++i) {
        key[i / 10] |= static_cast<std::uint64_t>(state[i] & 0x3f) << (6 * (i % 10));
    }
    return key;
}

}  // namespace solitaire::pretzel
