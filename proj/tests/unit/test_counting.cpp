#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "solitaire/boxoff.hpp"
#include "solitaire/counting.hpp"
#include "solitaire/pretzel.hpp"

using namespace solitaire;
using namespace solitaire::counting;

namespace {

std::vector<int> v(std::initializer_list<int> xs) { return xs; }

// Every ordering of each suit deck, fed through `order`, as distinct deals.
std::size_t distinct_suit_deals(const pretzel::Params& p,
                                const std::function<std::vector<pretzel::Card>(
                                    const pretzel::Params&, std::span<const std::vector<int>>)>& order) {
    std::vector<int> ranks(static_cast<std::size_t>(p.n));
    std::iota(ranks.begin(), ranks.end(), 1);
    std::vector<std::vector<int>> perms;
    do {
        perms.push_back(ranks);
    } while (std::next_permutation(ranks.begin(), ranks.end()));

    std::set<std::vector<pretzel::Card>> deals;
    std::vector<std::size_t> pick(static_cast<std::size_t>(p.k), 0);
    while (true) {
        std::vector<std::vector<int>> decks;
        for (auto i : pick) decks.push_back(perms[i]);
        deals.insert(order(p, decks));
        std::size_t d = 0;
        while (d < pick.size() && ++pick[d] == perms.size()) pick[d++] = 0;
        if (d == pick.size()) break;
    }
    return deals.size();
}

}  // namespace

TEST_CASE("arithmetic helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(15, 12) == 455);
    CHECK(binomial(3, 5) == 0);
    CHECK(multinomial(v({3, 3})) == 20);
    CHECK(power(2, 10) == 1024);
    CHECK(floor_log10(1) == 0);
    CHECK(floor_log10(999) == 2);
    CHECK(floor_log10(1000) == 3);
    CHECK_THROWS_AS(floor_log10(0), InvalidParams);
    CHECK_THROWS_AS(factorial(-1), InvalidParams);
}

TEST_CASE("BoxOff (2,3,2) shuffled matches exhaustive enumeration") {
    std::vector<boxoff::Color> tokens{0, 0, 0, 1, 1, 1};
    std::size_t grids = 0;
    do {
        ++grids;
    } while (std::next_permutation(tokens.begin(), tokens.end()));
    const auto params = v({2, 3, 2});
    CHECK(challenge_space_size(Game::boxoff, "shuffled", params).exact == grids);
    CHECK(grids == 20);

    std::set<std::vector<boxoff::Color>> seen;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        seen.insert(boxoff::generate({2, 3, 2}, boxoff::Algorithm::shuffled, seed).cells());
    }
    CHECK(seen.size() == 20);
}

TEST_CASE("BoxOff closed forms") {
    CHECK(challenge_space_size(Game::boxoff, "shuffled", v({4, 6, 4})).exact == factorial(24) / power(factorial(6), 4));
    const auto lt = challenge_space_size(Game::boxoff, "l-tiles", v({4, 6, 4}));
    CHECK(lt.exact == 10321920);
    CHECK(lt.order_of_magnitude == 7);
    CHECK(challenge_space_size(Game::boxoff, "l-tiles", v({6, 6, 6})).exact == power(2, 12) * factorial(12));
    CHECK(boxoff_printed_formula(4, 6, 4) == factorial(24) / power(factorial(4), 6));
    CHECK_THROWS_AS(challenge_space_size(Game::boxoff, "l-tiles", v({4, 4, 4})), InvalidParams);
    CHECK_THROWS_AS(challenge_space_size(Game::boxoff, "shuffled", v({4, 6})), InvalidParams);
}

TEST_CASE("Pretzel toy sizes match exhaustive enumeration") {
    for (const auto& p : {pretzel::Params{2, 2}, pretzel::Params{2, 3}}) {
        const auto params = v({p.k, p.n});
        std::vector<pretzel::Card> deck;
        for (int s = 0; s < p.k; ++s)
            for (int r = 1; r <= p.n; ++r) deck.push_back({s, r});
        std::size_t shuffled = 0;
        do {
            ++shuffled;
        } while (std::next_permutation(deck.begin(), deck.end()));
        CHECK(challenge_space_size(Game::pretzel, "shuffled", params).exact == shuffled);
        CHECK(challenge_space_size(Game::pretzel, "sequential-suits", params).exact ==
              distinct_suit_deals(p, pretzel::sequential_order));
        CHECK(challenge_space_size(Game::pretzel, "banded-suits", params).exact ==
              distinct_suit_deals(p, pretzel::banded_order));
    }
    CHECK(challenge_space_size(Game::pretzel, "shuffled", v({2, 3})).exact == 720);
    CHECK(challenge_space_size(Game::pretzel, "sequential-suits", v({2, 3})).exact == 36);
    CHECK(challenge_space_size(Game::pretzel, "banded-suits", v({2, 2})).exact == 4);
}

TEST_CASE("Pretzel (4,4) exact values") {
    const auto shuffled = challenge_space_size(Game::pretzel, "shuffled", v({4, 4}));
    CHECK(shuffled.exact == BigInt("20922789888000"));
    CHECK(shuffled.order_of_magnitude == 13);
    const auto sequential = challenge_space_size(Game::pretzel, "sequential-suits", v({4, 4}));
    CHECK(sequential.exact == 331776);
    CHECK(sequential.order_of_magnitude == 5);
}

TEST_CASE("Fujisan closed forms") {
    const std::vector<int> none;
    CHECK(challenge_space_size(Game::fujisan, "shuffled", none).exact == factorial(24) / power(factorial(4), 6));
    CHECK(challenge_space_size(Game::fujisan, "piecepack", none).exact == BigInt("268738560000"));
    // 12 ordered dominoes out of 15, each with two orientations
    CHECK(challenge_space_size(Game::fujisan, "dominoes", none).exact ==
          factorial(15) / factorial(3) * power(2, 12));
    CHECK(challenge_space_size(Game::fujisan, "dominoes", none).order_of_magnitude == 14);
    CHECK(challenge_space_size(Game::fujisan, "engraved-tiles", none).exact == BigInt("153483608678400"));
    CHECK_THROWS_AS(challenge_space_size(Game::fujisan, "shuffled-unique-steps", none), InvalidParams);
    CHECK_THROWS_AS(challenge_space_size(Game::fujisan, "shuffled", v({1})), InvalidParams);
}

TEST_CASE("order of magnitude brackets the exact count") {
    struct Case {
        Game game;
        const char* algorithm;
        std::vector<int> params;
    };
    const std::vector<Case> cases{{Game::boxoff, "shuffled", {4, 6, 4}},  {Game::boxoff, "l-tiles", {6, 6, 6}},
                                  {Game::pretzel, "shuffled", {4, 9}},    {Game::pretzel, "banded-suits", {4, 5}},
                                  {Game::fujisan, "shuffled", {}},         {Game::fujisan, "engraved-tiles", {}}};
    for (const auto& c : cases) {
        const auto r = challenge_space_size(c.game, c.algorithm, c.params);
        CHECK(power(10, r.order_of_magnitude) <= r.exact);
        CHECK(r.exact < power(10, r.order_of_magnitude + 1));
    }
}

TEST_CASE("published magnitudes are looked up, not computed") {
    CHECK(published_magnitude(Game::boxoff, "shuffled", v({4, 6, 4})) == 11);
    CHECK(published_magnitude(Game::pretzel, "shuffled", v({4, 4})) == 13);
    CHECK(published_magnitude(Game::fujisan, "piecepack", {}) == 10);
    CHECK_FALSE(published_magnitude(Game::boxoff, "shuffled", v({6, 6, 6})).has_value());
}
