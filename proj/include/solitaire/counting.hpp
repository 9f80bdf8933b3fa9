#pragma once

// Exact challenge-space sizes for every generator.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "solitaire/errors.hpp"
#include "solitaire/game.hpp"

namespace solitaire::counting {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);
/// (sum parts)! / prod(parts!)
BigInt multinomial(std::span<const int> parts);
BigInt power(const BigInt& base, int exponent);
/// floor(log10(x)) for x >= 1.
int floor_log10(const BigInt& x);

struct CountResult {
    BigInt exact;
    int order_of_magnitude = 0;
};

CountResult make_count(BigInt exact);

/// Number of distinct raw generator outcomes, symmetry not reduced.
///   boxoff shuffled          (hw)! / ((hw/c)!)^c
///   boxoff l-tiles(-3unique) 2^t t!, t = hw/3
///   pretzel shuffled         (kn)!
///   pretzel sequential/banded (n!)^k
///   fujisan shuffled         24! / (4!)^6
///   fujisan piecepack        (6!)^4
///   fujisan engraved-tiles   sum_{i=5..10} C(15,i) C(5,10-i) 2^i 10!
///   fujisan dominoes         C(15,12) 2^12 12!
/// Throws InvalidParams for unknown algorithms, bad parameters, or
/// generators without a closed form (fujisan shuffled-unique-steps).
CountResult challenge_space_size(Game game, std::string_view algorithm, std::span<const int> params);

/// The published approximation for a generator, where one was given, as a
/// power of ten.
std::optional<int> published_magnitude(Game game, std::string_view algorithm,
                                       std::span<const int> params);

/// Alternative reading of the BoxOff shuffled count as printed,
/// (hw)! / (c!)^(hw/c). Reported next to the multinomial for comparison.
BigInt boxoff_printed_formula(int h, int w, int c);

}  // namespace solitaire::counting
