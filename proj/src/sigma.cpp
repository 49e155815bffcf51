#include "sigma_braid/sigma.hpp"

#include <algorithm>
#include <map>

namespace sbraid {

namespace {

const char* kTorusCite = "torus: complement is the union of the circles [chi_{i,j,p,q}], a_i = -a_j = p, b_i = -b_j = q";
const char* kKleinCite = "Klein bottle: complement is the set of points [chi_{i,j}], b_i = -b_j = 1";
const char* kSphereCite = "sphere: complement is the union of the P3- and P4-circles on the coordinates A[i,j]";
const char* kSphereEmptyCite = "sphere with four strands: the kernel is free of rank two, so Sigma^1 is empty";
const char* kFullCite = "full braid groups: Sigma^1 is the whole character sphere";
const char* kCenterCite = "no complement pattern matches; the point lies in Sigma^1";
const char* kEmptyCite = "finite abelianization: the character sphere is empty";

int strands(const GroupSpec& g) { return g.n; }

struct SphereCoords {
  int m;
  std::map<std::pair<int, int>, int> index;
  explicit SphereCoords(int n) : m(n - 1) {
    const auto c = sphere_coordinates(n);
    for (std::size_t k = 0; k < c.size(); ++k) index[c[k]] = static_cast<int>(k);
  }
  int at(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = index.find({i, j});
    return it == index.end() ? -1 : it->second;
  }
};

// Pattern of one circle: coordinates that must equal p, q, -(p+q); the rest vanish.
struct CirclePattern {
  std::vector<int> p_at, q_at, s_at;
};

CirclePattern pattern(const SphereCoords& sc, const CircleDescriptor& d) {
  CirclePattern pat;
  const auto& x = d.indices;
  const bool one_two = x[0] == 1 && x[1] == 2;
  auto add = [&](std::vector<int>& v, int i, int j) {
    int k = sc.at(i, j);
    if (k >= 0) v.push_back(k);
  };
  if (d.kind == CircleKind::P3Circle) {
    add(pat.p_at, x[0], x[2]);
    add(pat.q_at, x[1], x[2]);
    if (!one_two) add(pat.s_at, x[0], x[1]);
  } else {
    add(pat.p_at, x[0], x[2]);
    add(pat.p_at, x[1], x[3]);
    add(pat.q_at, x[0], x[3]);
    add(pat.q_at, x[1], x[2]);
    add(pat.s_at, x[2], x[3]);
    if (!one_two) add(pat.s_at, x[0], x[1]);
  }
  return pat;
}

std::optional<std::vector<Integer>> match(const CirclePattern& pat, const std::vector<Integer>& c) {
  const Integer p = c[pat.p_at[0]];
  const Integer q = c[pat.q_at[0]];
  if (p == 0 && q == 0) return std::nullopt;
  std::vector<bool> used(c.size(), false);
  auto want = [&](const std::vector<int>& at, const Integer& v) {
    for (int k : at) {
      if (c[k] != v) return false;
      used[k] = true;
    }
    return true;
  };
  if (!want(pat.p_at, p) || !want(pat.q_at, q) || !want(pat.s_at, -(p + q))) return std::nullopt;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!used[k] && c[k] != 0) return std::nullopt;
  return std::vector<Integer>{p, q};
}

void check_point(const GroupSpec& g, const SpherePoint& pt) {
  if (!(pt.group == g)) throw DomainError("point lives on the sphere of " + describe(pt.group) + ", not " + describe(g));
  if (static_cast<int>(pt.coords.size()) != abelianization_spec(g).free_rank)
    throw DomainError("point has the wrong number of coordinates for " + describe(g));
}

Integer factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

std::string_view to_string(Membership m) {
  switch (m) {
    case Membership::InSigma1: return "InSigma1";
    case Membership::InComplement: return "InComplement";
    case Membership::EmptySphere: return "EmptySphere";
  }
  return "?";
}

std::string_view to_string(CircleKind k) {
  switch (k) {
    case CircleKind::TorusCircle: return "TorusCircle";
    case CircleKind::KleinPoint: return "KleinPoint";
    case CircleKind::P3Circle: return "P3Circle";
    case CircleKind::P4Circle: return "P4Circle";
    case CircleKind::WholeSphere: return "WholeSphere";
  }
  return "?";
}

void require_sigma_support(const GroupSpec& g) {
  if (g.n < 1) throw DomainError("n must be at least 1");
  if (g.kind == GroupKind::Pure && g.surface == Surface::Disc)
    throw UnsupportedError("Sigma^1 of the pure braid groups of the disc is not computed here");
}

bool sphere_empty(const GroupSpec& g) {
  require_sigma_support(g);
  return abelianization_spec(g).free_rank == 0;
}

SigmaVerdict decide_sigma(const GroupSpec& g) {
  if (!sphere_empty(g)) throw DomainError("a point is required: the sphere of " + describe(g) + " is not empty");
  return {Membership::EmptySphere, std::nullopt, {}, kEmptyCite};
}

SigmaVerdict decide_sigma(const GroupSpec& g, const SpherePoint& pt) {
  if (sphere_empty(g)) return decide_sigma(g);
  check_point(g, pt);
  const auto& c = pt.coords;
  const int n = strands(g);
  if (g.kind == GroupKind::Full) return {Membership::InSigma1, std::nullopt, {}, kFullCite};
  if (g.surface == Surface::Torus) {
    std::vector<int> support;
    for (int i = 1; i <= n; ++i)
      if (c[i - 1] != 0 || c[n + i - 1] != 0) support.push_back(i);
    if (support.size() == 2) {
      const int i = support[0], j = support[1];
      if (c[i - 1] == -c[j - 1] && c[n + i - 1] == -c[n + j - 1])
        return {Membership::InComplement, CircleDescriptor{CircleKind::TorusCircle, {i, j}},
                {c[i - 1], c[n + i - 1]}, kTorusCite};
    }
    return {Membership::InSigma1, std::nullopt, {}, kCenterCite};
  }
  if (g.surface == Surface::Klein) {
    std::vector<int> support;
    for (int i = 1; i <= n; ++i)
      if (c[i - 1] != 0) support.push_back(i);
    if (support.size() == 2) {
      int i = support[0], j = support[1];
      if (c[i - 1] == -c[j - 1]) {
        if (c[i - 1] < 0) std::swap(i, j);
        return {Membership::InComplement, CircleDescriptor{CircleKind::KleinPoint, {i, j}}, {}, kKleinCite};
      }
    }
    return {Membership::InSigma1, std::nullopt, {}, kCenterCite};
  }
  // Sphere.
  if (n == 4)
    return {Membership::InComplement, CircleDescriptor{CircleKind::WholeSphere, {}}, {c[0], c[1]}, kSphereEmptyCite};
  const SphereCoords sc(n);
  for (const auto& d : enumerate_complement(g).descriptors)
    if (auto pq = match(pattern(sc, d), c)) return {Membership::InComplement, d, *pq, kSphereCite};
  return {Membership::InSigma1, std::nullopt, {}, kCenterCite};
}

ComplementEnumeration enumerate_complement(const GroupSpec& g) {
  require_sigma_support(g);
  ComplementEnumeration e{g, {}};
  if (g.kind == GroupKind::Full || sphere_empty(g)) return e;
  const int n = strands(g);
  if (g.surface == Surface::Torus) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) e.descriptors.push_back({CircleKind::TorusCircle, {i, j}});
  } else if (g.surface == Surface::Klein) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) e.descriptors.push_back({CircleKind::KleinPoint, {i, j}});
  } else if (g.surface == Surface::Sphere) {
    const int m = n - 1;
    if (n == 4) {
      e.descriptors.push_back({CircleKind::WholeSphere, {}});
      return e;
    }
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) e.descriptors.push_back({CircleKind::P3Circle, {i, j, k}});
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k)
          for (int l = k + 1; l <= m; ++l) e.descriptors.push_back({CircleKind::P4Circle, {i, j, k, l}});
  }
  return e;
}

SpherePoint complement_point(const GroupSpec& g, const CircleDescriptor& d, const Rational& p, const Rational& q) {
  const auto spec = abelianization_spec(g);
  std::vector<Rational> c(spec.basis.size(), 0);
  const int n = strands(g);
  if (d.kind != CircleKind::KleinPoint && p == 0 && q == 0) throw DomainError("(p, q) must be nonzero");
  switch (d.kind) {
    case CircleKind::TorusCircle: {
      const int i = d.indices.at(0), j = d.indices.at(1);
      c.at(i - 1) = p;
      c.at(j - 1) = -p;
      c.at(n + i - 1) = q;
      c.at(n + j - 1) = -q;
      break;
    }
    case CircleKind::KleinPoint:
      c.at(d.indices.at(0) - 1) = 1;
      c.at(d.indices.at(1) - 1) = -1;
      break;
    case CircleKind::WholeSphere:
      c.at(0) = p;
      c.at(1) = q;
      break;
    case CircleKind::P3Circle:
    case CircleKind::P4Circle: {
      const auto pat = pattern(SphereCoords(n), d);
      for (int k : pat.p_at) c[k] = p;
      for (int k : pat.q_at) c[k] = q;
      for (int k : pat.s_at) c[k] = -(p + q);
      break;
    }
  }
  return sphere_point(make_character(g, std::move(c)));
}

SpherePoint act_permutation(const GroupSpec& g, const std::vector<int>& tau, const SpherePoint& pt) {
  if (g.kind != GroupKind::Pure || (g.surface != Surface::Torus && g.surface != Surface::Klein))
    throw UnsupportedError("the permutation action is implemented for P_n(T) and P_n(K)");
  check_point(g, pt);
  const int n = strands(g);
  if (static_cast<int>(tau.size()) != n) throw DomainError("permutation must list " + std::to_string(n) + " images");
  std::vector<bool> seen(n + 1, false);
  for (int t : tau) {
    if (t < 1 || t > n || seen[t]) throw DomainError("not a permutation of 1.." + std::to_string(n));
    seen[t] = true;
  }
  const int nb = g.surface == Surface::Torus ? 2 : 1;
  SpherePoint out = pt;
  for (int bl = 0; bl < nb; ++bl)
    for (int i = 0; i < n; ++i) out.coords[bl * n + i] = pt.coords[bl * n + tau[i] - 1];
  return out;
}

Integer determinant(const IntMatrix& a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("matrix is not square");
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RInfinityCertificate r_infinity_certificate(int n, const RInfinityInput& input) {
  if (n < 2) throw DomainError("n must be at least 2");
  const GroupSpec g{GroupKind::Pure, Surface::Klein, n};
  const auto pts = enumerate_complement(g).descriptors;
  const int k = static_cast<int>(pts.size());
  RInfinityCertificate cert;
  cert.n = n;
  cert.index_bound = factorial(k);
  if (const auto* perm = std::get_if<std::vector<int>>(&input)) {
    if (static_cast<int>(perm->size()) != k) throw DomainError("permutation must list " + std::to_string(k) + " images");
    std::vector<bool> seen(k, false);
    for (int t : *perm) {
      if (t < 0 || t >= k || seen[t]) throw DomainError("not a permutation of the complement points");
      seen[t] = true;
    }
    cert.permutation = *perm;
  } else {
    const auto& mat = std::get<IntMatrix>(input);
    if (static_cast<int>(mat.size()) != n) throw DomainError("matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    const Integer det = determinant(mat);
    if (det != 1 && det != -1) throw DomainError("matrix is not invertible over the integers (determinant " + det.str() + ")");
    std::map<std::vector<Integer>, int> where;
    std::vector<SpherePoint> points;
    for (int t = 0; t < k; ++t) {
      points.push_back(complement_point(g, pts[t], 0, 0));
      where[points.back().coords] = t;
    }
    for (int t = 0; t < k; ++t) {
      // chi o phi: coordinate j is chi(phi(b_j)) = sum_i M[i][j] chi(b_i).
      std::vector<Rational> c(n, 0);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) c[j] += Rational(mat[i][j] * points[t].coords[i]);
      auto it = where.find(sphere_point(make_character(g, c)).coords);
      if (it == where.end())
        throw DomainError("the induced map does not preserve the complement, so the matrix is not induced by an automorphism");
      cert.permutation.push_back(it->second);
    }
  }
  cert.certified = true;
  for (int t = 0; t < k; ++t)
    if (cert.permutation[t] != t) cert.certified = false;
  return cert;
}

bool commutator_fg_flag(const GroupSpec& g) {
  if (g.kind != GroupKind::Pure ||
      (g.surface != Surface::Torus && g.surface != Surface::Klein && g.surface != Surface::Sphere))
    throw UnsupportedError("the commutator table covers P_n(T), P_n(K) and P_n(S2)");
  if (g.n < 1) throw DomainError("n must be at least 1");
  if (g.surface == Surface::Sphere) return g.n <= 3;
  return g.n == 1;
}

}  // namespace sbraid
