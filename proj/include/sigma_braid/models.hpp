#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigma_braid/word.hpp"

namespace sbraid {

// omega a^n b^m at the bottom; mu in F(u,v,w) for G3T and above; kappa in F(ub,vb,w2,w3) for G4T.
// The element is kappa * mu * omega * a^n * b^m.
struct NormalForm {
  ModelId model = ModelId::G2T;
  Word kappa;
  Word mu;
  Word omega;
  std::int64_t n = 0;
  std::int64_t m = 0;
  bool operator==(const NormalForm&) const = default;

  Word to_word() const;
};

NormalForm identity_form(ModelId model);
// Right multiplication by one letter, in place.
void multiply(NormalForm& g, const Letter& l);
NormalForm normalize(ModelId model, const Word& w);
bool words_equal(ModelId model, const Word& w1, const Word& w2);

// Same group computed from the action of Z x| Z on F(x,y), without the eight rewrite rules.
NormalForm normalize_g2k_by_action(const Word& w);

enum class ActionVariant { Derived, AsDisplayed };

// images[{g, -1}][z] = g^-1 z g, images[{g, +1}][z] = g z g^-1. Missing z are fixed.
struct ActionTable {
  std::vector<ModelLetter> fiber;
  std::vector<ModelLetter> acting;
  std::map<std::pair<ModelLetter, int>, std::map<ModelLetter, Word>> images;

  Word apply(ModelLetter g, int sign, const Word& z) const;
  // w z w^-1, for w a word in acting letters.
  Word conjugate(const Word& w, const Word& z) const;
};

// layer is G3T (F(u,v,w) under G2T) or G4T (F(ub,vb,w2,w3) under G3T).
const ActionTable& action_table(ModelId layer, ActionVariant variant = ActionVariant::Derived);

struct ActionDefect {
  std::string relation;
  ModelLetter letter;
  Word lhs_image;
  Word rhs_image;
};
// Checks that the table is an action: inverse images compose to the identity and the defining
// relations of the acting group act identically on every fiber letter.
std::vector<ActionDefect> action_defects(ModelId layer, ActionVariant variant);

struct IsoDictionary {
  ModelId model = ModelId::G2T;
  Surface surface = Surface::Torus;
  int n = 2;
  std::map<ModelLetter, Word> to_braid;
  std::map<Gen, Word> to_model;
};

ModelId model_for(Surface surface, int n);
const IsoDictionary& dictionary(Surface surface, int n);

enum class Direction { BraidToModel, ModelToBraid };
Word translate(const IsoDictionary& dict, const Word& w, Direction dir);

// Word problem in P_n(M) for the (surface, n) pairs that have a model.
bool pure_words_equal(Surface surface, int n, const Word& w1, const Word& w2);

std::vector<ModelLetter> model_letters(ModelId model);

}  // namespace sbraid
