#include "bscale/random_words.hpp"

#include "bscale/group_core.hpp"

namespace bscale {

Word random_word(std::mt19937_64& rng, std::size_t length) {
  static constexpr Letter kLetters[] = {Letter::APos, Letter::ANeg, Letter::TPos, Letter::TNeg};
  Word w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(kLetters[rng() % 4]);
  return w;
}

Word random_word_upto(std::mt19937_64& rng, std::size_t max_length) {
  return random_word(rng, static_cast<std::size_t>(rng() % (max_length + 1)));
}

Word random_reduced_word(const GroupParams& p, std::mt19937_64& rng, std::size_t max_length) {
  while (true) {
    Word w = random_word_upto(rng, max_length);
    if (is_reduced(p, w)) return w;
  }
}

}  // namespace bscale
