// Deterministic random elements for audits and property tests.

#ifndef SURFBRAID_SAMPLING_HPP_
#define SURFBRAID_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

#include "surfbraid/free_word.hpp"
#include "surfbraid/klein.hpp"
#include "surfbraid/presentation.hpp"
#include "surfbraid/torus.hpp"

namespace surfbraid::sampling {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'b0a5'0c1a'551cULL;

// Reduced word of length at most max_length (uniform length, then letters).
FreeWord random_word(Rng& rng, std::size_t max_length);
std::int64_t random_int(Rng& rng, std::int64_t bound);  // uniform in [-bound, bound]

torus::PureBraid random_torus_pure(Rng& rng, std::size_t max_length, std::int64_t bound);
torus::Braid random_torus_braid(Rng& rng, std::size_t max_length, std::int64_t bound);
klein::PureBraid random_klein_pure(Rng& rng, std::size_t max_length, std::int64_t bound);
klein::Braid random_klein_braid(Rng& rng, std::size_t max_length, std::int64_t bound);

// Random formal word with letters drawn from generators [0, generator_count).
FormalWord random_formal_word(Rng& rng, std::size_t generator_count, std::size_t max_length);

}  // namespace surfbraid::sampling

#endif  // SURFBRAID_SAMPLING_HPP_
