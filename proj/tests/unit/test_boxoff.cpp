#include <doctest.h>

#include <algorithm>
#include <map>

#include "solitaire/boxoff.hpp"
#include "solitaire/rng.hpp"

using namespace solitaire;
using namespace solitaire::boxoff;

namespace {

std::map<Color, int> color_counts(const Grid& g) {
    std::map<Color, int> counts;
    for (Color c : g.cells()) ++counts[c];
    return counts;
}

Grid checkerboard(int h, int w) {
    std::vector<Color> cells;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) cells.push_back(static_cast<Color>((r + c) % 2));
    return Grid({h, w, 2}, cells);
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(validate({4, 6, 4}));
    CHECK_THROWS_AS(validate({4, 6, 5}), InvalidParams);
    CHECK_THROWS_AS(validate({0, 6, 2}), InvalidParams);
    CHECK_THROWS_AS(validate({9, 9, 3}), InvalidParams);
    CHECK_NOTHROW(validate_for_ltiles({4, 6, 4}));
    CHECK_NOTHROW(validate_for_ltiles({6, 6, 6}));
    CHECK_THROWS_AS(validate_for_ltiles({4, 4, 4}), InvalidParams);
    CHECK_THROWS_AS(validate_for_ltiles({4, 6, 3}), InvalidParams);
    CHECK_THROWS_AS(parse_algorithm("l_tiles"), InvalidParams);
    CHECK(parse_algorithm("l-tiles-3unique") == Algorithm::l_tiles_3unique);
}

TEST_CASE("legal moves on small grids") {
    const auto pair = parse_text("boxoff 1 2 1\nAA\n");
    CHECK(legal_moves(pair) == std::vector<Move>{{{0, 0}, {0, 1}}});
    CHECK(legal_moves(parse_text("boxoff 2 2 2\nAB\nBA\n")).empty());
    const auto column = parse_text("boxoff 3 1 1\nA\n.\nA\n");
    CHECK(legal_moves(column) == std::vector<Move>{{{0, 0}, {2, 0}}});
    CHECK(legal_moves(parse_text("boxoff 2 2 2\nAA\nBB\n")).size() == 2);
}

TEST_CASE("apply_move") {
    const auto pair = parse_text("boxoff 1 2 1\nAA\n");
    const auto after = apply_move(pair, {{0, 0}, {0, 1}});
    CHECK(after.cells() == std::vector<Color>{kEmpty, kEmpty});
    CHECK(is_solved(after));

    const auto diag = parse_text("boxoff 2 2 2\nAB\nBA\n");
    CHECK_THROWS_AS(apply_move(diag, {{0, 0}, {1, 1}}), IllegalMove);
    CHECK_THROWS_AS(apply_move(diag, {{0, 0}, {0, 1}}), IllegalMove);
    CHECK_THROWS_AS(apply_move(diag, {{0, 0}, {0, 0}}), IllegalMove);
    CHECK_THROWS_AS(apply_move(diag, {{0, 0}, {2, 0}}), IllegalMove);
    CHECK_THROWS_AS(apply_move(after, {{0, 0}, {0, 1}}), IllegalMove);
}

TEST_CASE("is_solved") {
    CHECK(is_solved(parse_text("boxoff 2 2 2\n..\n..\n")));
    CHECK_FALSE(is_solved(parse_text("boxoff 2 2 2\n..\nBB\n")));
    CHECK_FALSE(is_solved(generate({4, 6, 4}, Algorithm::shuffled, 1)));
}

TEST_CASE("every legal move removes exactly two tokens and keeps empties even") {
    Rng rng(5);
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto g = generate({4, 6, 4}, s % 2 ? Algorithm::l_tiles : Algorithm::shuffled, s);
        while (true) {
            const auto moves = legal_moves(g);
            if (moves.empty()) break;
            const int before = g.occupied_count();
            g = apply_move(g, moves[rng.below(moves.size())]);
            REQUIRE(g.occupied_count() == before - 2);
            REQUIRE((24 - g.occupied_count()) % 2 == 0);
        }
    }
}

TEST_CASE("generators: color multisets and determinism") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        for (auto alg : {Algorithm::shuffled, Algorithm::l_tiles, Algorithm::l_tiles_3unique}) {
            const auto g = generate({4, 6, 4}, alg, seed);
            const auto counts = color_counts(g);
            REQUIRE(counts.size() == 4);
            for (const auto& [color, n] : counts) REQUIRE(n == 6);
            REQUIRE(g == generate({4, 6, 4}, alg, seed));
        }
        const auto big = color_counts(generate({6, 6, 6}, Algorithm::l_tiles, seed));
        REQUIRE(big.size() == 6);
        for (const auto& [color, n] : big) REQUIRE(n == 6);
    }
    CHECK(generate({4, 6, 4}, Algorithm::shuffled, 1) != generate({4, 6, 4}, Algorithm::shuffled, 2));
}

TEST_CASE("l-tile sets") {
    const auto tiles = build_ltile_set({4, 6, 4}, false);
    REQUIRE(tiles.size() == 8);
    std::map<Color, int> s_count, d_count;
    for (const auto& t : tiles) {
        CHECK(t.corner == t.long_arm);
        CHECK(t.short_arm != t.corner);
        ++s_count[t.corner];
        ++d_count[t.short_arm];
    }
    for (Color c = 0; c < 4; ++c) {
        CHECK(s_count[c] == 2);
        CHECK(d_count[c] == 2);
    }
    CHECK(build_ltile_set({6, 6, 6}, false).size() == 12);

    const auto unique = build_ltile_set({4, 6, 4}, true);
    REQUIRE(unique.size() == 8);
    std::map<Color, int> cells;
    for (const auto& t : unique) {
        CHECK(t.corner != t.long_arm);
        CHECK(t.corner != t.short_arm);
        CHECK(t.long_arm != t.short_arm);
        ++cells[t.corner];
        ++cells[t.long_arm];
        ++cells[t.short_arm];
    }
    for (const auto& [c, n] : cells) CHECK(n == 6);
}

TEST_CASE("tile layout places interlocking pairs block by block") {
    const std::vector<LTile> tiles{{0, 0, 1, false}, {1, 1, 0, false}, {1, 1, 0, false}, {0, 0, 1, false}};
    CHECK(to_text(lay_out_tiles({2, 6, 2}, tiles)) == "boxoff 2 6 2\nAAABBB\nBBBAAA\n");
    CHECK(to_text(lay_out_tiles({6, 2, 2}, tiles)) == "boxoff 6 2 2\nAB\nAB\nAB\nBA\nBA\nBA\n");
    std::vector<LTile> flipped = tiles;
    for (auto& t : flipped) t.flipped = true;
    CHECK(to_text(lay_out_tiles({2, 6, 2}, flipped)) == "boxoff 2 6 2\nABBBAA\nAABBBA\n");
    CHECK_THROWS_AS(lay_out_tiles({2, 6, 2}, std::span(tiles).first(3)), InvalidParams);
}

TEST_CASE("pair equality") {
    const auto g = generate({4, 6, 4}, Algorithm::shuffled, 3);
    CHECK(adjacent_pairs(g).total == 38);
    CHECK(pair_equality(Grid({4, 6, 1}, std::vector<Color>(24, 0))) == 1.0);
    CHECK(pair_equality(checkerboard(4, 6)) == 0.0);
    CHECK_THROWS_AS(pair_equality(parse_text("boxoff 1 2 1\n..\n")), InvalidParams);
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        REQUIRE(adjacent_pairs(generate({4, 6, 4}, Algorithm::l_tiles, seed)).equal >= 8);
    }
}

TEST_CASE("text round trip and parse errors") {
    const auto g = generate({6, 6, 6}, Algorithm::l_tiles, 9);
    CHECK(parse_text(to_text(g)) == g);
    CHECK_THROWS_AS(parse_text("boxof 1 2 1\nAA\n"), ParseError);
    CHECK_THROWS_AS(parse_text("boxoff 1 2 1\nAB\n"), ParseError);
    CHECK_THROWS_AS(parse_text("boxoff 1 2 1\nA\n"), ParseError);
    CHECK_THROWS_AS(parse_text("boxoff 1 2 3\nAA\n"), ParseError);
    CHECK(to_string(Move{{0, 1}, {2, 3}}) == "0,1-2,3");
}

TEST_CASE("search adapter mirrors the grid rules") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = generate({4, 6, 4}, Algorithm::shuffled, seed);
        const Problem problem(g);
        std::vector<Move> moves;
        problem.legal_moves(problem.initial_state(), moves);
        auto expected = legal_moves(g);
        auto less = [](const Move& x, const Move& y) {
            return std::tie(x.a, x.b) < std::tie(y.a, y.b);
        };
        std::sort(moves.begin(), moves.end(), less);
        std::sort(expected.begin(), expected.end(), less);
        REQUIRE(moves == expected);
    }
    CHECK(Problem(generate({4, 6, 4}, Algorithm::shuffled, 1)).natural_move_bound() == 12);
}
