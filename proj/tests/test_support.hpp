#pragma once

#include <random>
#include <vector>

#include "braidcode/braid_word.hpp"
#include "braidcode/symbols.hpp"

namespace braidcode::testing {

inline BraidWord random_word(std::mt19937_64& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> idx_dist(1, strands - 1);
  std::bernoulli_distribution negative(0.5);
  const int len = len_dist(rng);
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) letters.push_back(negative(rng) ? -idx_dist(rng) : idx_dist(rng));
  return make_word(strands, letters);
}

inline SymbolString random_string(std::mt19937_64& rng, int alphabet, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> sym_dist(0, alphabet - 1);
  std::vector<int> symbols(static_cast<std::size_t>(len_dist(rng)));
  for (int& s : symbols) s = sym_dist(rng);
  return SymbolString(alphabet, std::move(symbols));
}

inline SymbolString digits(int alphabet, const char* text) {
  std::vector<int> symbols;
  for (const char* c = text; *c; ++c) symbols.push_back(*c - '0');
  return SymbolString(alphabet, std::move(symbols));
}

}  // namespace braidcode::testing
