#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "sigma_braid/sigma.hpp"

using namespace sbraid;

namespace {

GroupSpec P(Surface s, int n) { return {GroupKind::Pure, s, n}; }
std::vector<Rational> R(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

SpherePoint point(const GroupSpec& g, std::vector<Rational> c) { return sphere_point(make_character(g, std::move(c))); }

std::vector<Rational> random_coords(std::size_t k, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<Rational> c(k);
  do {
    for (auto& x : c) x = val(rng);
  } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }));
  return c;
}

std::vector<Rational> as_rationals(const SpherePoint& p) {
  std::vector<Rational> c;
  for (const auto& x : p.coords) c.emplace_back(x);
  return c;
}

}  // namespace

TEST_CASE("decide_sigma examples") {
  auto v = decide_sigma(P(Surface::Klein, 2), point(P(Surface::Klein, 2), R({1, -1})));
  CHECK(v.membership == Membership::InComplement);
  REQUIRE(v.witness);
  CHECK(v.witness->indices == std::vector<int>{1, 2});

  auto t = decide_sigma(P(Surface::Torus, 3), point(P(Surface::Torus, 3), R({1, -1, 0, 2, -2, 0})));
  CHECK(t.membership == Membership::InComplement);
  REQUIRE(t.witness);
  CHECK(t.witness->indices == std::vector<int>{1, 2});
  CHECK(t.params == std::vector<Integer>{1, 2});

  CHECK(decide_sigma(P(Surface::Klein, 2), point(P(Surface::Klein, 2), R({1, 1}))).membership == Membership::InSigma1);

  const auto s5 = P(Surface::Sphere, 5);
  std::vector<Rational> c(sphere_coordinates(5).size(), 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sphere_coordinates(5)[k] == std::pair{1, 3}) c[k] = 1;
  auto s = decide_sigma(s5, point(s5, c));
  CHECK(s.membership == Membership::InComplement);
  REQUIRE(s.witness);
  CHECK(s.witness->kind == CircleKind::P3Circle);
  CHECK(s.witness->indices == std::vector<int>{1, 2, 3});
}

TEST_CASE("empty spheres") {
  CHECK(decide_sigma(P(Surface::Sphere, 3)).membership == Membership::EmptySphere);
  CHECK(decide_sigma(P(Surface::ProjectivePlane, 4)).membership == Membership::EmptySphere);
  CHECK(decide_sigma({GroupKind::Full, Surface::Sphere, 5}).membership == Membership::EmptySphere);
  CHECK(sphere_empty(P(Surface::Sphere, 3)));
  CHECK_FALSE(sphere_empty(P(Surface::Sphere, 5)));
  CHECK_THROWS_AS(decide_sigma(P(Surface::Torus, 2)), DomainError);
  CHECK_THROWS_AS(require_sigma_support(P(Surface::Disc, 3)), UnsupportedError);
}

TEST_CASE("complement counts") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(enumerate_complement(P(Surface::Torus, n)).count() == static_cast<std::size_t>(oracle::binomial(n, 2)));
    CHECK(enumerate_complement(P(Surface::Klein, n)).count() == static_cast<std::size_t>(2 * oracle::binomial(n, 2)));
  }
  for (int n = 4; n <= 7; ++n)
    CHECK(enumerate_complement(P(Surface::Sphere, n + 1)).count() ==
          static_cast<std::size_t>(oracle::binomial(n, 3) + oracle::binomial(n, 4)));
  CHECK(enumerate_complement(P(Surface::Sphere, 6)).count() == 15);
  CHECK(enumerate_complement(P(Surface::Sphere, 4)).descriptors.at(0).kind == CircleKind::WholeSphere);
  CHECK(enumerate_complement(P(Surface::Sphere, 3)).count() == 0);
  CHECK(enumerate_complement(P(Surface::Torus, 1)).count() == 0);
}

TEST_CASE("every complement point is matched by exactly its own descriptor") {
  const std::vector<std::pair<int, int>> params = {{1, 0}, {0, 1}, {1, 1}, {2, -3}, {-1, -1}, {5, 2}};
  for (Surface s : {Surface::Torus, Surface::Klein, Surface::Sphere})
    for (int n = 2; n <= 7; ++n) {
      if (s == Surface::Sphere && n < 5) continue;
      if (s != Surface::Sphere && n > 6) continue;
      const GroupSpec g = P(s, n);
      for (const auto& d : enumerate_complement(g).descriptors)
        for (auto [p, q] : params) {
          SpherePoint pt = complement_point(g, d, p, q);
          auto v = decide_sigma(g, pt);
          CAPTURE(describe(g));
          CHECK(v.membership == Membership::InComplement);
          REQUIRE(v.witness);
          CHECK(*v.witness == d);
          auto bf = oracle::brute_force_witness(g, as_rationals(pt));
          REQUIRE(bf);
          CHECK(*bf == d);
        }
    }
}

TEST_CASE("pattern matcher agrees with brute force on random points") {
  std::mt19937 rng(31);
  for (Surface s : {Surface::Torus, Surface::Klein, Surface::Sphere})
    for (int n = 2; n <= 6; ++n) {
      if (s == Surface::Sphere && n < 4) continue;
      const GroupSpec g = P(s, n);
      const auto k = static_cast<std::size_t>(abelianization_spec(g).free_rank);
      for (int trial = 0; trial < 300; ++trial) {
        SpherePoint pt = point(g, random_coords(k, rng));
        auto v = decide_sigma(g, pt);
        auto bf = oracle::brute_force_witness(g, as_rationals(pt));
        CHECK((v.membership == Membership::InComplement) == bf.has_value());
        if (bf && v.witness) CHECK(v.witness->kind == bf->kind);
        if (bf && s != Surface::Sphere) CHECK(*v.witness == *bf);
      }
    }
}

TEST_CASE("antipodal symmetry") {
  std::mt19937 rng(37);
  for (Surface s : {Surface::Torus, Surface::Klein, Surface::Sphere})
    for (int n = 2; n <= 6; ++n) {
      if (s == Surface::Sphere && n < 5) continue;
      const GroupSpec g = P(s, n);
      const auto k = static_cast<std::size_t>(abelianization_spec(g).free_rank);
      auto descs = enumerate_complement(g).descriptors;
      for (int trial = 0; trial < 100; ++trial) {
        SpherePoint pt = trial % 2 ? point(g, random_coords(k, rng))
                                   : complement_point(g, descs[static_cast<std::size_t>(trial) % descs.size()], 1 + trial % 3, trial % 4 - 1);
        Character neg = -pt.character();
        CHECK(decide_sigma(g, pt).membership == decide_sigma(g, sphere_point(neg)).membership);
      }
    }
}

TEST_CASE("nonzero block sums force Sigma^1") {
  std::mt19937 rng(41);
  for (int n = 2; n <= 6; ++n) {
    for (Surface s : {Surface::Torus, Surface::Klein}) {
      const GroupSpec g = P(s, n);
      const auto k = static_cast<std::size_t>(abelianization_spec(g).free_rank);
      for (int trial = 0; trial < 200; ++trial) {
        auto c = random_coords(k, rng);
        Rational sum_a = 0, sum_b = 0;
        for (int i = 0; i < n; ++i) {
          if (s == Surface::Torus) {
            sum_a += c[i];
            sum_b += c[n + i];
          } else {
            sum_b += c[i];
          }
        }
        if (sum_a != 0 || sum_b != 0) CHECK(decide_sigma(g, point(g, c)).membership == Membership::InSigma1);
      }
    }
  }
}

TEST_CASE("pushforward of a complement point lands in the two-strand complement") {
  for (Surface s : {Surface::Torus, Surface::Klein})
    for (int n = 2; n <= 6; ++n) {
      const GroupSpec g = P(s, n);
      for (const auto& d : enumerate_complement(g).descriptors) {
        SpherePoint pt = complement_point(g, d, 2, 3);
        auto v = decide_sigma(g, pt);
        REQUIRE(v.witness);
        auto keep = v.witness->indices;
        if (s == Surface::Torus) std::sort(keep.begin(), keep.end());
        Character down = strand_pushforward(pt.character(), keep);
        CHECK(decide_sigma(down.group, sphere_point(down)).membership == Membership::InComplement);
      }
    }
}

TEST_CASE("permutation action") {
  const auto k3 = P(Surface::Klein, 3);
  CHECK(act_permutation(k3, {2, 1, 3}, point(k3, R({1, -1, 0}))).coords == std::vector<Integer>{-1, 1, 0});
  const auto t2 = P(Surface::Torus, 2);
  CHECK(act_permutation(t2, {2, 1}, point(t2, R({1, -1, 2, -2}))).coords == std::vector<Integer>{-1, 1, -2, 2});
  auto pt = point(P(Surface::Torus, 3), R({1, 2, 3, 0, 1, -1}));
  CHECK(act_permutation(P(Surface::Torus, 3), {1, 2, 3}, pt) == pt);
  CHECK_THROWS_AS(act_permutation(k3, {1, 1, 2}, point(k3, R({1, -1, 0}))), DomainError);
}

TEST_CASE("permutations preserve verdicts") {
  std::mt19937 rng(43);
  for (Surface s : {Surface::Torus, Surface::Klein})
    for (int n = 2; n <= 5; ++n) {
      const GroupSpec g = P(s, n);
      const auto descs = enumerate_complement(g).descriptors;
      std::vector<int> tau(static_cast<std::size_t>(n));
      std::iota(tau.begin(), tau.end(), 1);
      std::uniform_int_distribution<std::size_t> pick(0, descs.size() - 1);
      std::uniform_int_distribution<int> val(-3, 3);
      std::vector<SpherePoint> pts;
      for (int k = 0; k < 20; ++k) {
        int p = val(rng), q = val(rng);
        if (p == 0 && q == 0) p = 1;
        pts.push_back(complement_point(g, descs[pick(rng)], p, q));
      }
      do {
        for (const auto& pt : pts) {
          auto img = act_permutation(g, tau, pt);
          CHECK(decide_sigma(g, img).membership == Membership::InComplement);
        }
      } while (std::next_permutation(tau.begin(), tau.end()));
    }
}

TEST_CASE("twisted conjugacy certificates") {
  auto id2 = r_infinity_certificate(2, IntMatrix{{1, 0}, {0, 1}});
  CHECK(id2.certified);
  CHECK(id2.index_bound == 2);
  auto swap = r_infinity_certificate(3, IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  CHECK_FALSE(swap.certified);
  CHECK(swap.index_bound == 720);
  auto neg = r_infinity_certificate(2, IntMatrix{{-1, 0}, {0, -1}});
  CHECK_FALSE(neg.certified);
  CHECK(neg.permutation == std::vector<int>{1, 0});
  CHECK_THROWS_AS(r_infinity_certificate(2, IntMatrix{{2, 0}, {0, 1}}), DomainError);
  CHECK(r_infinity_certificate(2, std::vector<int>{0, 1}).certified);
  CHECK_FALSE(r_infinity_certificate(2, std::vector<int>{1, 0}).certified);
  CHECK(determinant(IntMatrix{{2, 1}, {1, 1}}) == 1);
}

TEST_CASE("finitely generated commutator subgroups") {
  int count = 0;
  for (Surface s : {Surface::Torus, Surface::Klein, Surface::Sphere})
    for (int n = 1; n <= 8; ++n) count += commutator_fg_flag(P(s, n));
  CHECK(count == 5);
  CHECK(commutator_fg_flag(P(Surface::Torus, 1)));
  CHECK(commutator_fg_flag(P(Surface::Klein, 1)));
  CHECK(commutator_fg_flag(P(Surface::Sphere, 3)));
  CHECK_FALSE(commutator_fg_flag(P(Surface::Klein, 2)));
  CHECK_FALSE(commutator_fg_flag(P(Surface::Sphere, 4)));
}
