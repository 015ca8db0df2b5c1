#pragma once

#include "bscale/group_params.hpp"
#include "bscale/word.hpp"

#include <cstddef>
#include <random>

namespace bscale {

/// Uniform random word of exactly `length` letters (no reduction).
Word random_word(std::mt19937_64& rng, std::size_t length);

/// Random word of length in [0, max_length].
Word random_word_upto(std::mt19937_64& rng, std::size_t max_length);

/// Random freely reduced, pinch-free word of length in [0, max_length],
/// by rejection sampling.
Word random_reduced_word(const GroupParams& p, std::mt19937_64& rng, std::size_t max_length);

}  // namespace bscale
