// One line per acceptance criterion. Exit status is nonzero if any line says FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "oracle.hpp"
#include "sigma_braid/bank.hpp"
#include "sigma_braid/criterion.hpp"
#include "sigma_braid/presentations.hpp"
#include "sigma_braid/sigma.hpp"

using namespace sbraid;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

GroupSpec P(Surface s, int n) { return {GroupKind::Pure, s, n}; }

Outcome counts() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    if (enumerate_complement(P(Surface::Torus, n)).count() != static_cast<std::size_t>(oracle::binomial(n, 2)))
      o.fail("torus n=" + std::to_string(n));
    if (enumerate_complement(P(Surface::Klein, n)).count() != static_cast<std::size_t>(2 * oracle::binomial(n, 2)))
      o.fail("Klein n=" + std::to_string(n));
  }
  for (int n = 4; n <= 7; ++n)
    if (enumerate_complement(P(Surface::Sphere, n + 1)).count() !=
        static_cast<std::size_t>(oracle::binomial(n, 3) + oracle::binomial(n, 4)))
      o.fail("sphere n+1=" + std::to_string(n + 1));
  o.detail = o.ok ? "T, K for n=2..6 and S2 for n+1=5..8 match the binomial counts" : o.detail;
  return o;
}

Outcome presentation() {
  Outcome o;
  std::size_t checked = 0;
  for (auto [s, n] : std::vector<std::pair<Surface, int>>{
           {Surface::Torus, 2}, {Surface::Torus, 3}, {Surface::Torus, 4}, {Surface::Klein, 2}}) {
    const auto& d = dictionary(s, n);
    oracle::Semidirect orc(d.model);
    for (const auto& r : instantiate_presentation(GroupKind::Pure, s, n).relations) {
      ++checked;
      const bool lib = pure_words_equal(s, n, r.lhs, r.rhs);
      const bool test = orc.equal(translate(d, r.lhs, Direction::BraidToModel), translate(d, r.rhs, Direction::BraidToModel));
      if (!lib || !test) o.fail(describe(P(s, n)) + " relation " + r.name);
    }
  }
  if (o.ok) o.detail = std::to_string(checked) + " relations hold in the models (library and test oracle)";
  return o;
}

Outcome bank() {
  Outcome o;
  std::size_t eq = 0, words = 0;
  for (ModelId id : {ModelId::G2T, ModelId::G2K, ModelId::G3T, ModelId::G4T}) {
    BankReport r = verify_equation_bank(id, 10000);
    if (!r.passed()) o.fail("bank of " + std::string(to_string(id)));
    eq += r.entries.size();
    words += r.random_words;
    if (id == ModelId::G2K && r.random_words < 10000) o.fail("fewer than 10^4 random words");
  }
  for (const auto& e : equation_bank()) {
    oracle::Semidirect orc(e.model);
    if (orc.equal(e.lhs, e.rhs) != e.expected) o.fail("test oracle disagrees on " + e.name);
  }
  if (o.ok)
    o.detail = std::to_string(eq) + " banked equations as expected; G2K rules agree with the action on " +
               std::to_string(words) + " random words";
  return o;
}

Outcome certificates() {
  Outcome o;
  std::size_t n = 0;
  const std::vector<int> grid = {1, 2, 3, 5};
  for (auto c : lemma_cases())
    for (int p : grid)
      for (int q : grid) {
        const std::string tag = std::string(to_string(c)) + " p=" + std::to_string(p) + " q=" + std::to_string(q);
        try {
          auto g = generate_lemma_certificate(c, p, q);
          auto rep = verify_certificate(g.cert, g.weights);
          if (!rep.passed || !rep.endpoints_checked) o.fail(tag + " does not pass");
          for (const auto& m : rep.margins)
            if (m.margin <= 0) o.fail(tag + " has a nonpositive margin");
          if (decide_sigma(g.chi.group, sphere_point(g.chi)).membership != Membership::InSigma1)
            o.fail(tag + " is not in Sigma^1 per decide_sigma");
          ++n;
        } catch (const DomainError& e) {
          o.fail(tag + ": " + e.what());
        }
      }
  if (o.ok) o.detail = std::to_string(n) + " certificates pass with positive margins and agree with decide_sigma";
  return o;
}

Outcome invariance() {
  Outcome o;
  std::mt19937 rng(2024);
  std::size_t checks = 0;
  for (Surface s : {Surface::Torus, Surface::Klein})
    for (int n = 2; n <= 5; ++n) {
      const GroupSpec g = P(s, n);
      const auto descs = enumerate_complement(g).descriptors;
      std::uniform_int_distribution<std::size_t> pick(0, descs.size() - 1);
      std::uniform_int_distribution<int> val(-5, 5);
      std::vector<SpherePoint> pts;
      for (int k = 0; k < 100; ++k) {
        int p = val(rng), q = val(rng);
        if (p == 0 && q == 0) q = 1;
        pts.push_back(complement_point(g, descs[pick(rng)], p, q));
      }
      // Points off the complement too, so that both verdicts are exercised.
      const auto rank = static_cast<std::size_t>(abelianization_spec(g).free_rank);
      for (int k = 0; k < 100; ++k) {
        std::vector<Rational> c(rank);
        for (auto& x : c) x = val(rng);
        c[0] += 11;
        pts.push_back(sphere_point(make_character(g, c)));
      }
      std::vector<int> tau(static_cast<std::size_t>(n));
      std::iota(tau.begin(), tau.end(), 1);
      do {
        for (const auto& pt : pts) {
          ++checks;
          auto before = decide_sigma(g, pt).membership;
          auto img = act_permutation(g, tau, pt);
          auto after = decide_sigma(g, img).membership;
          std::vector<Rational> c;
          for (const auto& x : img.coords) c.emplace_back(x);
          const bool brute = oracle::brute_force_witness(g, c).has_value();
          if (before != after || brute != (after == Membership::InComplement))
            o.fail(describe(g) + " verdict changed under a permutation");
        }
      } while (std::next_permutation(tau.begin(), tau.end()));
    }
  if (o.ok) o.detail = std::to_string(checks) + " permuted points keep their verdicts";
  return o;
}

Outcome ball() {
  Outcome o;
  auto neg_y = model_weights(ModelId::G2K, {{ModelLetter::y, -1}});
  const Word target = parse_word("y x y^-1", ModelId::G2K);
  auto r = explore_ball(ModelId::G2K, neg_y, 6, {target});
  if (r.truncated) o.fail("radius-6 ball truncated");
  if (!r.targets[0].in_ball || r.targets[0].reachable) o.fail("y x y^-1 should lie in the ball and be unreached");
  auto pos_b = model_weights(ModelId::G2K, {{ModelLetter::b, 1}});
  auto c = explore_ball(ModelId::G2K, pos_b, 4, {});
  if (c.truncated || c.reachable != c.nonnegative) o.fail("chi(b)=1 ball is not connected to the base");
  if (r.note.find("not a proof") == std::string::npos) o.fail("report does not say the search is bounded");
  if (o.ok)
    o.detail = "chi(y)=-1: target unreached among " + std::to_string(r.vertices) + " vertices; chi(b)=1: " +
               std::to_string(c.reachable) + "/" + std::to_string(c.nonnegative) +
               " reached (bounded search, not a disconnection proof)";
  return o;
}

Outcome application() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    IntMatrix id(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
    for (int k = 0; k < n; ++k) id[k][k] = 1;
    auto cert = r_infinity_certificate(n, id);
    Integer bound = 1;
    for (long long k = 2; k <= 2 * oracle::binomial(n, 2); ++k) bound *= k;
    if (!cert.certified || cert.index_bound != bound) o.fail("identity at n=" + std::to_string(n));
  }
  const std::vector<std::pair<Surface, int>> expected = {
      {Surface::Torus, 1}, {Surface::Klein, 1}, {Surface::Sphere, 1}, {Surface::Sphere, 2}, {Surface::Sphere, 3}};
  for (Surface s : {Surface::Torus, Surface::Klein, Surface::Sphere})
    for (int n = 1; n <= 10; ++n) {
      const bool want = std::find(expected.begin(), expected.end(), std::pair{s, n}) != expected.end();
      if (commutator_fg_flag(P(s, n)) != want) o.fail("fg flag for " + describe(P(s, n)));
    }
  if (o.ok) o.detail = "identity certified for n=2..6 with bound (2*C(n,2))!; fg flags match the five exceptions";
  return o;
}

Outcome abelianization() {
  Outcome o;
  std::size_t count = 0;
  for (Surface s : {Surface::Torus, Surface::Klein})
    for (int n = 1; n <= 6; ++n) {
      std::vector<RelationTable> tables{instantiate_presentation(GroupKind::Pure, s, n),
                                        instantiate_presentation(GroupKind::Full, s, n), corrected_relations(s, n)};
      for (const auto& name : family_names()) {
        try {
          tables.push_back(instantiate_family(name, s, n));
        } catch (const UnsupportedError&) {
        }
      }
      for (const auto& t : tables)
        for (const auto& r : t.relations) {
          ++count;
          auto l = abelianize(t.group, r.lhs), rr = abelianize(t.group, r.rhs);
          if (l.free != rr.free || l.torsion != rr.torsion)
            o.fail(describe(t.group) + " " + t.family + " " + r.name + " does not abelianize to zero");
        }
    }
  if (o.ok) o.detail = std::to_string(count) + " relations abelianize to zero";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "complement counts", 1, counts},         {2, "presentation vs model oracle", 30, presentation},
      {3, "equation bank", 5, bank},               {4, "certificate suite", 60, certificates},
      {5, "invariance sweep", 60, invariance},     {6, "negative controls", 60, ball},
      {7, "application layer", 1, application},    {8, "abelianization net", 10, abelianization}};
  bool all_ok = true;
  for (const auto& c : all) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget) + " s");
    all_ok = all_ok && o.ok;
    std::printf("%s criterion %d (%s, %.2f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
