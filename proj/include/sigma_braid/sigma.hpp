#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigma_braid/characters.hpp"

namespace sbraid {

enum class Membership { InSigma1, InComplement, EmptySphere };
std::string_view to_string(Membership m);

enum class CircleKind { TorusCircle, KleinPoint, P3Circle, P4Circle, WholeSphere };
std::string_view to_string(CircleKind k);

// TorusCircle(i,j) with i<j; KleinPoint(i,j) is the point with b_i = 1 = -b_j (i != j);
// P3Circle(i,j,k), P4Circle(i,j,k,l) on the sphere coordinates.
struct CircleDescriptor {
  CircleKind kind = CircleKind::TorusCircle;
  std::vector<int> indices;
  auto operator<=>(const CircleDescriptor&) const = default;
};

struct SigmaVerdict {
  Membership membership = Membership::InSigma1;
  std::optional<CircleDescriptor> witness;
  // (p, q) on the circle, in the canonical integer scaling of the point. Empty for points.
  std::vector<Integer> params;
  std::string cite;
};

// True when S(G) is empty (finite abelianization).
bool sphere_empty(const GroupSpec& group);
// Throws UnsupportedError outside the families computed here.
void require_sigma_support(const GroupSpec& group);

SigmaVerdict decide_sigma(const GroupSpec& group, const SpherePoint& pt);
// For groups whose sphere is empty.
SigmaVerdict decide_sigma(const GroupSpec& group);

struct ComplementEnumeration {
  GroupSpec group;
  std::vector<CircleDescriptor> descriptors;
  std::size_t count() const { return descriptors.size(); }
};

ComplementEnumeration enumerate_complement(const GroupSpec& group);

// A point on the descriptor. p, q are ignored for KleinPoint; (p, q) != (0, 0) otherwise.
SpherePoint complement_point(const GroupSpec& group, const CircleDescriptor& d, const Rational& p,
                             const Rational& q);

// tau lists tau(1), ..., tau(n). Coordinate i of the image is coordinate tau(i) of pt.
SpherePoint act_permutation(const GroupSpec& group, const std::vector<int>& tau, const SpherePoint& pt);

using IntMatrix = std::vector<std::vector<Integer>>;

// Permutation given directly as images of the enumerated Klein complement points (0-based),
// or the matrix of an automorphism on the free part Z^n (column j = image of b_j).
using RInfinityInput = std::variant<std::vector<int>, IntMatrix>;

struct RInfinityCertificate {
  int n = 2;
  bool certified = false;
  Integer index_bound;
  std::vector<int> permutation;  // induced on enumerate_complement(P, K, n) order
};

RInfinityCertificate r_infinity_certificate(int n, const RInfinityInput& input);
Integer determinant(const IntMatrix& m);

bool commutator_fg_flag(const GroupSpec& group);

}  // namespace sbraid
