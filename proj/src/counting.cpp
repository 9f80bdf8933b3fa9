#include "solitaire/counting.hpp"

#include "solitaire/boxoff.hpp"
#include "solitaire/fujisan.hpp"
#include "solitaire/pretzel.hpp"

namespace solitaire::counting {

BigInt factorial(int n) {
    if (n < 0) throw InvalidParams("factorial of a negative number");
    BigInt result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt multinomial(std::span<const int> parts) {
    int total = 0;
    BigInt denominator = 1;
    for (int part : parts) {
        if (part < 0) throw InvalidParams("multinomial part is negative");
        total += part;
        denominator *= factorial(part);
    }
    return factorial(total) / denominator;
}

BigInt power(const BigInt& base, int exponent) {
    BigInt result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

int floor_log10(const BigInt& x) {
    if (x < 1) throw InvalidParams("floor_log10 needs x >= 1");
    int digits = 0;
    BigInt rest = x;
    while (rest >= 10) {
        rest /= 10;
        ++digits;
    }
    return digits;
}

CountResult make_count(BigInt exact) {
    const int oom = floor_log10(exact);
    return CountResult{std::move(exact), oom};
}

namespace {

void expect_arity(std::span<const int> params, std::size_t n, std::string_view what) {
    if (params.size() != n) {
        throw InvalidParams(std::string(what) + " expects " + std::to_string(n) + " parameters");
    }
}

CountResult boxoff_count(std::string_view algorithm, std::span<const int> params) {
    expect_arity(params, 3, "boxoff");
    const boxoff::Params p{params[0], params[1], params[2]};
    switch (boxoff::parse_algorithm(algorithm)) {
        case boxoff::Algorithm::shuffled: {
            boxoff::validate(p);
            const int n = p.h * p.w;
            std::vector<int> parts(static_cast<std::size_t>(p.c), n / p.c);
            return make_count(multinomial(parts));
        }
        case boxoff::Algorithm::l_tiles:
        case boxoff::Algorithm::l_tiles_3unique: {
            boxoff::validate_for_ltiles(p);
            const int t = p.h * p.w / 3;
            return make_count(power(2, t) * factorial(t));
        }
    }
    throw InvalidParams("boxoff: unknown algorithm");
}

CountResult pretzel_count(std::string_view algorithm, std::span<const int> params) {
    expect_arity(params, 2, "pretzel");
    const pretzel::Params p{params[0], params[1]};
    pretzel::validate(p);
    if (pretzel::parse_algorithm(algorithm) == pretzel::Algorithm::shuffled) {
        return make_count(factorial(p.k * p.n));
    }
    return make_count(power(factorial(p.n), p.k));
}

CountResult fujisan_count(std::string_view algorithm, std::span<const int> params) {
    if (!params.empty()) throw InvalidParams("fujisan takes no parameters");
    switch (fujisan::parse_algorithm(algorithm)) {
        case fujisan::Algorithm::shuffled: {
            const std::vector<int> parts(6, 4);
            return make_count(multinomial(parts));
        }
        case fujisan::Algorithm::piecepack: return make_count(power(factorial(6), 4));
        case fujisan::Algorithm::engraved_tiles: {
            // i non-double tiles (two orientations each) among the 10 visible.
            BigInt total = 0;
            for (int i = 5; i <= 10; ++i) {
                total += binomial(15, i) * binomial(5, 10 - i) * power(2, i) * factorial(10);
            }
            return make_count(total);
        }
        case fujisan::Algorithm::dominoes:
            return make_count(binomial(15, 12) * power(2, 12) * factorial(12));
        case fujisan::Algorithm::shuffled_unique_steps:
            throw InvalidParams("fujisan: no closed-form count for shuffled-unique-steps");
    }
    throw InvalidParams("fujisan: unknown algorithm");
}

}  // namespace

CountResult challenge_space_size(Game game, std::string_view algorithm, std::span<const int> params) {
    switch (game) {
        case Game::boxoff: return boxoff_count(algorithm, params);
        case Game::pretzel: return pretzel_count(algorithm, params);
        case Game::fujisan: return fujisan_count(algorithm, params);
    }
    throw InvalidParams("unknown game");
}

std::optional<int> published_magnitude(Game game, std::string_view algorithm,
                                       std::span<const int> params) {
    const std::vector<int> p(params.begin(), params.end());
    switch (game) {
        case Game::boxoff:
            if (p == std::vector<int>{4, 6, 4}) {
                if (algorithm == "shuffled") return 11;
                if (algorithm == "l-tiles") return 6;
            }
            return std::nullopt;
        case Game::pretzel:
            if (p == std::vector<int>{4, 4}) {
                if (algorithm == "shuffled") return 13;
                if (algorithm == "sequential-suits") return 5;
            }
            return std::nullopt;
        case Game::fujisan:
            if (algorithm == "shuffled") return 14;
            if (algorithm == "piecepack") return 10;
            if (algorithm == "engraved-tiles") return 13;
            if (algorithm == "dominoes") return 14;
            return std::nullopt;
    }
    return std::nullopt;
}

BigInt boxoff_printed_formula(int h, int w, int c) {
    boxoff::validate(boxoff::Params{h, w, c});
    const int n = h * w;
    return factorial(n) / power(factorial(c), n / c);
}

}  // namespace solitaire::counting
