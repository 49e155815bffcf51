#pragma once

#include <random>
#include <vector>

#include "sigma_braid/models.hpp"
#include "sigma_braid/word.hpp"

namespace support {

using sbraid::Letter;
using sbraid::Word;

inline std::vector<Letter> model_alphabet(sbraid::ModelId id) {
  std::vector<Letter> out;
  for (auto l : sbraid::model_letters(id)) {
    out.push_back(sbraid::m(l));
    out.push_back(sbraid::m(l, -1));
  }
  return out;
}

inline std::vector<Letter> raw_word(const std::vector<Letter>& alphabet, std::size_t max_len, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, alphabet.size() - 1);
  std::vector<Letter> out(len(rng));
  for (auto& l : out) l = alphabet[pick(rng)];
  return out;
}

inline Word random_word(const std::vector<Letter>& alphabet, std::size_t max_len, std::mt19937& rng) {
  return Word(raw_word(alphabet, max_len, rng));
}

inline Word mw(std::string_view s, sbraid::ModelId id = sbraid::ModelId::G4T) { return sbraid::parse_word(s, id); }

}  // namespace support
