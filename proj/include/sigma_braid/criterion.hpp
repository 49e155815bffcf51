#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sigma_braid/characters.hpp"
#include "sigma_braid/models.hpp"

namespace sbraid {

struct CertificateEntry {
  Letter z;
  Word path;  // t * path = z * t
  std::string cite;
};

struct PathCertificate {
  std::string name;
  // A model, or a pure braid group of the torus / Klein bottle.
  Alphabet context = ModelId::G3T;
  Letter t;
  std::vector<CertificateEntry> entries;
};

struct EntryMargin {
  Letter z;
  Rational path_nu;
  Rational edge_nu;
  Rational margin;
  std::string cite;
};

struct CertificateReport {
  Rational chi_t;
  std::vector<EntryMargin> margins;
  // False when no word-problem oracle covers the context; endpoints were then only checked
  // in the abelianization.
  bool endpoints_checked = false;
  bool passed = false;
};

// Throws DomainError when chi(t) <= 0, an endpoint fails (naming z), or a generator is missing.
CertificateReport verify_certificate(const PathCertificate& cert, const LetterWeights& chi);

// Adds z^-1 entries by inverting each path, for the z^-1 that are not present.
void add_inverse_entries(PathCertificate& cert);

enum class LemmaCase { Torus3A, Torus3B, Torus3C, Torus3D, Torus4A, Torus4B };
std::string_view to_string(LemmaCase c);
LemmaCase parse_lemma_case(std::string_view s);
const std::vector<LemmaCase>& lemma_cases();

struct GeneratedCertificate {
  PathCertificate cert;
  Character chi;        // on P_3(T) or P_4(T)
  LetterWeights weights;  // chi pulled back to the model
};

GeneratedCertificate generate_lemma_certificate(LemmaCase c, const Rational& p, const Rational& q);

// General-n paths on P_n(T) / P_n(K): t = b1^-1 when |chi(b1)| > |chi(bn)|, t = bn when
// |chi(b1)| < |chi(bn)|, with chi(b1) <= ... <= chi(bn).
enum class TheoremCase { DescendB1, AscendBn };
std::string_view to_string(TheoremCase c);
TheoremCase parse_theorem_case(std::string_view s);
PathCertificate generate_theorem_certificate(TheoremCase c, Surface surface, int n);

// Letter weights of a character of P_n(T) or P_n(K) on a_i, b_i, C_{i,j}.
LetterWeights braid_weights(const Character& chi);

struct BallTarget {
  Word word;
  bool in_ball = false;
  bool reachable = false;
};

struct BallReport {
  ModelId model = ModelId::G2T;
  int radius = 0;
  Word base;
  std::size_t vertices = 0;
  std::size_t nonnegative = 0;
  std::size_t reachable = 0;
  bool truncated = false;
  std::size_t budget = 0;
  std::vector<BallTarget> targets;
  std::vector<Word> unreached_sample;
  std::string note;
};

inline constexpr std::size_t kDefaultBallBudget = 1000000;
// SIGMA_BRAID_BALL_BUDGET when set to a positive integer, else the default.
std::size_t ball_budget_from_env();

BallReport explore_ball(ModelId model, const LetterWeights& chi, int radius,
                        const std::vector<Word>& targets,
                        std::optional<std::size_t> budget = std::nullopt);

// Free-group shadow of a walk in G2K: the F(x,y) letters appended to omega at each step.
// Vertices of the returned walk are the omega parts of the walk's vertices, with the letter
// runs in between.
std::vector<Word> free_projection(const Word& start, const Word& steps);

}  // namespace sbraid
