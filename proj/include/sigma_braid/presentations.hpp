#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigma_braid/word.hpp"

namespace sbraid {

struct Relation {
  std::string name;
  Word lhs;
  Word rhs;
  std::string cite;
  // Non-empty for relations stored verbatim although the oracle refutes them, and for their repairs.
  std::string erratum;
};

struct RelationTable {
  GroupSpec group;
  std::string family;
  std::vector<Relation> relations;
};

// P: the pure presentation of the torus / Klein bottle. B: the pure relations together with
// the Artin relations, conjugation of a_j, b_j by sigma_i, and C_{j,k} written in sigma letters.
RelationTable instantiate_presentation(GroupKind kind, Surface surface, int n);

// name is one of S1..S5, R1..R7, P1..P4. Tables keep the displayed relations verbatim.
RelationTable instantiate_family(std::string_view name, Surface surface, int n);

// Repaired versions of displayed relations the normal-form oracle refutes.
RelationTable corrected_relations(Surface surface, int n);

const std::vector<std::string>& family_names();

}  // namespace sbraid
