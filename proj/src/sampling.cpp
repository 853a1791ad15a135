#include "surfbraid/sampling.hpp"

#include <vector>

namespace surfbraid::sampling {

FreeWord random_word(Rng& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  std::uniform_int_distribution<int> rank_dist(0, 3);
  const std::size_t length = length_dist(rng);
  std::vector<Letter> letters;
  while (letters.size() < length) {
    Letter next = Letter::from_rank(rank_dist(rng));
    if (!letters.empty() && letters.back().cancels(next)) {
      continue;
    }
    letters.push_back(next);
  }
  return FreeWord::reduce(letters);
}

std::int64_t random_int(Rng& rng, std::int64_t bound) {
  return std::uniform_int_distribution<std::int64_t>(-bound, bound)(rng);
}

torus::PureBraid random_torus_pure(Rng& rng, std::size_t max_length, std::int64_t bound) {
  FreeWord w = random_word(rng, max_length);
  std::int64_t m = random_int(rng, bound);
  std::int64_t n = random_int(rng, bound);
  return {std::move(w), m, n};
}

torus::Braid random_torus_braid(Rng& rng, std::size_t max_length, std::int64_t bound) {
  torus::PureBraid p = random_torus_pure(rng, max_length, bound);
  bool s = std::bernoulli_distribution(0.5)(rng);
  return torus::Braid{std::move(p), s};
}

klein::PureBraid random_klein_pure(Rng& rng, std::size_t max_length, std::int64_t bound) {
  FreeWord w = random_word(rng, max_length);
  std::int64_t r = random_int(rng, bound);
  std::int64_t s = random_int(rng, bound);
  return {std::move(w), {r, s}};
}

klein::Braid random_klein_braid(Rng& rng, std::size_t max_length, std::int64_t bound) {
  klein::PureBraid p = random_klein_pure(rng, max_length, bound);
  bool s = std::bernoulli_distribution(0.5)(rng);
  return klein::Braid{std::move(p), s};
}

FormalWord random_formal_word(Rng& rng, std::size_t generator_count, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length_dist(0, max_length);
  std::uniform_int_distribution<std::size_t> gen_dist(0, generator_count - 1);
  FormalWord w(length_dist(rng));
  for (auto& l : w) {
    l.generator = gen_dist(rng);
    l.sign = std::bernoulli_distribution(0.5)(rng) ? 1 : -1;
  }
  return w;
}

}  // namespace surfbraid::sampling
