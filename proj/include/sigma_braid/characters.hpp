#pragma once

#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sigma_braid/word.hpp"

namespace sbraid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(std::string_view text);
// "p" or "p/q" in lowest terms.
std::string rational_string(const Rational& r);

struct AbelianizationSpec {
  GroupSpec group;
  int free_rank = 0;
  std::vector<std::string> basis;    // labels of the free coordinates
  std::vector<std::string> torsion;  // labels of the order-2 coordinates that words can reach
  std::string torsion_description;
};

AbelianizationSpec abelianization_spec(const GroupSpec& group);

// Free part as integers, torsion part reduced mod 2, in the label order of the spec.
struct Abelianized {
  std::vector<Integer> free;
  std::vector<int> torsion;
};

Abelianized abelianize(const GroupSpec& group, const Word& w);

// Coordinates of the free part for P_n(S^2): pairs (i,j), 1 <= i < j <= n-1, without (1,2).
std::vector<std::pair<int, int>> sphere_coordinates(int n);

struct Character {
  GroupSpec group;
  std::vector<Rational> coords;

  bool is_zero() const;
  Character operator-() const;
  Character scaled(const Rational& r) const;
};

Character make_character(const GroupSpec& group, std::vector<Rational> coords);
// P_n(T): a-block then b-block.
Character torus_character(const std::vector<Rational>& a, const std::vector<Rational>& b);
Character klein_character(const std::vector<Rational>& b);

Rational evaluate(const Character& chi, const Word& w);

// Weights on single letters; words are valued additively.
struct LetterWeights {
  std::map<Gen, Rational> weight;
  Rational operator()(const Letter& l) const;
  Rational of(const Word& w) const;
};

// Minimum of the valuation over start, start z1, ..., start z1...zk.
template <class Valuation>
Rational nu(const Valuation& value, const Word& start, const Word& steps) {
  Rational cur = 0;
  for (const auto& l : start) cur += value(l);
  Rational best = cur;
  for (const auto& l : steps) {
    cur += value(l);
    if (cur < best) best = cur;
  }
  return best;
}

Rational nu(const Character& chi, const Word& start, const Word& steps);

// chi pulled back through the model isomorphism of its group.
LetterWeights model_weights(const Character& chi);
// Weights given directly on model letters; throws unless they vanish on every relation the
// model is known to satisfy (so that they define a homomorphism).
LetterWeights model_weights(ModelId model, const std::map<ModelLetter, Rational>& values);
ModelId model_of(const Character& chi);

// Exact positive-scaling class: integer vector divided by its positive gcd. Signs are kept.
struct SpherePoint {
  GroupSpec group;
  std::vector<Integer> coords;
  bool operator==(const SpherePoint&) const = default;
  auto operator<=>(const SpherePoint& o) const { return coords <=> o.coords; }

  Character character() const;
};

SpherePoint sphere_point(const Character& chi);

// strands[k] is the position in 1..n of strand k+1 of the source group.
Character strand_pullback(const Character& chi, int n, const std::vector<int>& strands);
// Keeps the listed strands, in the given order.
Character strand_pushforward(const Character& chi, const std::vector<int>& keep);

}  // namespace sbraid
