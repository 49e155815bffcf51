#include "sigma_braid/bank.hpp"

#include <random>

#include "json.hpp"

#include "sigma_braid/models.hpp"

namespace sbraid {

namespace detail {
extern const std::string_view kBankJson;
}

std::vector<BankEntry> load_bank(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("equation bank is not valid JSON: ") + e.what());
  }
  std::vector<BankEntry> out;
  for (const auto& e : doc.at("entries")) {
    BankEntry b;
    b.name = e.at("name").get<std::string>();
    b.model = parse_model(e.at("model").get<std::string>());
    b.lhs = parse_word(e.at("lhs").get<std::string>(), b.model);
    b.rhs = parse_word(e.at("rhs").get<std::string>(), b.model);
    b.expected = e.value("expected", true);
    b.cite = e.value("cite", "");
    b.note = e.value("note", "");
    out.push_back(std::move(b));
  }
  return out;
}

const std::vector<BankEntry>& equation_bank() {
  static const std::vector<BankEntry> bank = load_bank(detail::kBankJson);
  return bank;
}

const BankEntry& bank_entry(std::string_view name) {
  for (const auto& e : equation_bank())
    if (e.name == name) return e;
  throw DomainError("no bank entry named '" + std::string(name) + "'");
}

bool BankReport::passed() const {
  for (const auto& e : entries)
    if (!e.ok()) return false;
  return rule_mismatches == 0 && action_defects == 0;
}

BankReport verify_equation_bank(ModelId model, std::size_t random_words, std::uint32_t seed) {
  BankReport r;
  r.model = model;
  for (const auto& e : equation_bank()) {
    if (e.model != model) continue;
    r.entries.push_back({e.name, words_equal(model, e.lhs, e.rhs), e.expected, e.cite});
  }
  if (model == ModelId::G2K) {
    std::mt19937 rng(seed);
    const auto letters = model_letters(ModelId::G2K);
    std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (std::size_t k = 0; k < random_words; ++k) {
      std::vector<Letter> raw;
      for (std::size_t i = len(rng); i > 0; --i) raw.push_back(m(letters[pick(rng)], coin(rng) ? 1 : -1));
      Word w(raw);
      if (!(normalize(ModelId::G2K, w) == normalize_g2k_by_action(w))) ++r.rule_mismatches;
    }
    r.random_words = random_words;
  }
  if (model == ModelId::G3T || model == ModelId::G4T)
    r.action_defects = action_defects(model, ActionVariant::Derived).size();
  return r;
}

}  // namespace sbraid
