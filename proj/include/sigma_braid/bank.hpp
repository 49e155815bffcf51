#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigma_braid/word.hpp"

namespace sbraid {

struct BankEntry {
  std::string name;
  ModelId model = ModelId::G3T;
  Word lhs;
  Word rhs;
  // false for entries kept as printed although they do not hold.
  bool expected = true;
  std::string cite;
  std::string note;
};

std::vector<BankEntry> load_bank(std::string_view json_text);
// The bank compiled into the library.
const std::vector<BankEntry>& equation_bank();
const BankEntry& bank_entry(std::string_view name);

struct BankVerdict {
  std::string name;
  bool holds = false;
  bool expected = true;
  std::string cite;
  bool ok() const { return holds == expected; }
};

struct BankReport {
  ModelId model = ModelId::G3T;
  std::vector<BankVerdict> entries;
  // G2K only: rewrite rules against the action on random words.
  std::size_t random_words = 0;
  std::size_t rule_mismatches = 0;
  // G4T only: defects of the action table.
  std::size_t action_defects = 0;
  bool passed() const;
};

BankReport verify_equation_bank(ModelId model, std::size_t random_words = 10000,
                                std::uint32_t seed = 1);

}  // namespace sbraid
