#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lsm {

/// Identifier of the randomness scheme, embedded in reports so results
/// declare how they were drawn.
inline constexpr std::string_view kRngAlgorithmId = "mt19937_64-fisher-yates";

/// Unbiased draw from {0 .. bound-1} via rejection on the raw engine output.
/// Written out (rather than std::uniform_int_distribution) so sequences are
/// identical across standard library implementations.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound);

/// splitmix64 mix of a base seed and a stream index; trials seeded this way
/// are reproducible independently of execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle_in_place(std::vector<T>& values, std::mt19937_64& engine) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[uniform_below(engine, i)]);
}

}  // namespace lsm
