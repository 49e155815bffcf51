#include "sigma_braid/criterion.hpp"

#include <set>

#include "sigma_braid/bank.hpp"

namespace sbraid {

namespace {

using ML = ModelLetter;

std::vector<Letter> generators(const Alphabet& ctx) {
  std::vector<Letter> out;
  if (const auto* id = std::get_if<ModelId>(&ctx)) {
    for (ML l : model_letters(*id)) out.push_back(m(l));
    return out;
  }
  const auto& g = std::get<GroupSpec>(ctx);
  for (int i = 1; i <= g.n; ++i) out.push_back(a(i));
  for (int i = 1; i <= g.n; ++i) out.push_back(b(i));
  for (int j = 2; j <= g.n; ++j)
    for (int i = 1; i < j; ++i) out.push_back(C(i, j));
  return out;
}

bool endpoint_holds(const Alphabet& ctx, const Word& lhs, const Word& rhs, bool& checked) {
  if (const auto* id = std::get_if<ModelId>(&ctx)) {
    checked = true;
    return words_equal(*id, lhs, rhs);
  }
  const auto& g = std::get<GroupSpec>(ctx);
  const bool oracle = (g.surface == Surface::Torus && g.n >= 2 && g.n <= 4) ||
                      (g.surface == Surface::Klein && g.n == 2);
  if (oracle) {
    checked = true;
    return pure_words_equal(g.surface, g.n, lhs, rhs);
  }
  checked = false;
  const Abelianized l = abelianize(g, lhs), r = abelianize(g, rhs);
  return l.free == r.free && l.torsion == r.torsion;
}

std::string context_name(const Alphabet& ctx) {
  if (const auto* id = std::get_if<ModelId>(&ctx)) return std::string(to_string(*id));
  return describe(std::get<GroupSpec>(ctx));
}

}  // namespace

CertificateReport verify_certificate(const PathCertificate& cert, const LetterWeights& chi) {
  CertificateReport rep;
  check_letter(cert.context, cert.t);
  rep.chi_t = chi(cert.t);
  if (rep.chi_t <= 0)
    throw DomainError("chi(t) = " + rational_string(rep.chi_t) + " for t = " + to_string(cert.t) + "; it must be positive");
  std::set<Letter> covered;
  bool all_checked = true;
  rep.passed = true;
  for (const auto& e : cert.entries) {
    check_letter(cert.context, e.z);
    for (const auto& l : e.path) check_letter(cert.context, l);
    bool checked = false;
    if (!endpoint_holds(cert.context, Word{cert.t} * e.path, Word{e.z, cert.t}, checked))
      throw DomainError("endpoint condition fails for z = " + to_string(e.z) + ": t * path != z * t in " +
                        context_name(cert.context));
    all_checked = all_checked && checked;
    covered.insert(e.z);
    EntryMargin mg{e.z, nu(chi, Word{cert.t}, e.path), nu(chi, Word{}, Word{e.z}), 0, e.cite};
    mg.margin = mg.path_nu - mg.edge_nu;
    if (mg.margin <= 0) rep.passed = false;
    rep.margins.push_back(std::move(mg));
  }
  for (const auto& g : generators(cert.context))
    for (const auto& z : {g, g.inverse()})
      if (!covered.count(z)) throw DomainError("certificate has no entry for z = " + to_string(z));
  rep.endpoints_checked = all_checked;
  return rep;
}

void add_inverse_entries(PathCertificate& cert) {
  std::set<Letter> have;
  for (const auto& e : cert.entries) have.insert(e.z);
  const std::size_t count = cert.entries.size();
  for (std::size_t k = 0; k < count; ++k) {
    const auto e = cert.entries[k];
    if (have.count(e.z.inverse())) continue;
    cert.entries.push_back({e.z.inverse(), e.path.inverse(), "inverse of the path for " + to_string(e.z)});
    have.insert(e.z.inverse());
  }
}

std::string_view to_string(LemmaCase c) {
  switch (c) {
    case LemmaCase::Torus3A: return "torus3-a";
    case LemmaCase::Torus3B: return "torus3-b";
    case LemmaCase::Torus3C: return "torus3-c";
    case LemmaCase::Torus3D: return "torus3-d";
    case LemmaCase::Torus4A: return "torus4-a";
    case LemmaCase::Torus4B: return "torus4-b";
  }
  return "?";
}

const std::vector<LemmaCase>& lemma_cases() {
  static const std::vector<LemmaCase> all = {LemmaCase::Torus3A, LemmaCase::Torus3B, LemmaCase::Torus3C,
                                             LemmaCase::Torus3D, LemmaCase::Torus4A, LemmaCase::Torus4B};
  return all;
}

LemmaCase parse_lemma_case(std::string_view s) {
  for (auto c : lemma_cases())
    if (to_string(c) == s) return c;
  throw DomainError("unknown certificate case '" + std::string(s) + "'");
}

std::string_view to_string(TheoremCase c) { return c == TheoremCase::DescendB1 ? "descend-b1" : "ascend-bn"; }

TheoremCase parse_theorem_case(std::string_view s) {
  if (s == "descend-b1") return TheoremCase::DescendB1;
  if (s == "ascend-bn") return TheoremCase::AscendBn;
  throw DomainError("unknown certificate case '" + std::string(s) + "'");
}

LetterWeights braid_weights(const Character& chi) {
  const GroupSpec& g = chi.group;
  if (g.kind != GroupKind::Pure || (g.surface != Surface::Torus && g.surface != Surface::Klein))
    throw UnsupportedError("letter weights are defined for P_n(T) and P_n(K)");
  LetterWeights w;
  for (int i = 1; i <= g.n; ++i) {
    if (g.surface == Surface::Torus) {
      w.weight[a(i).gen] = chi.coords[i - 1];
      w.weight[b(i).gen] = chi.coords[g.n + i - 1];
    } else {
      w.weight[b(i).gen] = chi.coords[i - 1];
    }
  }
  return w;
}

GeneratedCertificate generate_lemma_certificate(LemmaCase c, const Rational& p, const Rational& q) {
  if (p <= 0 || q <= 0) throw DomainError("p and q must be positive");
  const bool four = c == LemmaCase::Torus4A || c == LemmaCase::Torus4B;
  const ModelId model = four ? ModelId::G4T : ModelId::G3T;
  std::vector<Rational> av, bv;
  std::string prefix;  // bank entries for the G3T letters
  Letter t = m(ML::x);
  switch (c) {
    case LemmaCase::Torus3A: av = {-p, 0, p}; bv = {-q, q, 0}; prefix = "torus3-a"; break;
    case LemmaCase::Torus3B: av = {-p, 0, p}; bv = {q, -q, 0}; prefix = "torus3-b"; break;
    case LemmaCase::Torus3C: av = {-p, 0, p}; bv = {0, -q, q}; prefix = "torus3-c"; t = m(ML::v); break;
    case LemmaCase::Torus3D: av = {-p, 0, p}; bv = {0, q, -q}; prefix = "torus3-d"; t = m(ML::v, -1); break;
    case LemmaCase::Torus4A: av = {-p, 0, 0, p}; bv = {0, -q, q, 0}; prefix = "torus3-c"; t = m(ML::v); break;
    case LemmaCase::Torus4B: av = {-p, 0, 0, p}; bv = {0, q, -q, 0}; prefix = "torus3-d"; t = m(ML::v, -1); break;
  }
  GeneratedCertificate out{{std::string(to_string(c)), model, t, {}}, torus_character(av, bv), {}};
  out.weights = model_weights(out.chi);
  const auto& table = action_table(ModelId::G4T);
  for (ML z : model_letters(model)) {
    const std::string name = prefix + "-" + std::string(model_letter_name(z));
    bool banked = false;
    for (const auto& e : equation_bank())
      if (e.name == name) {
        out.cert.entries.push_back({m(z), e.rhs, e.cite});
        banked = true;
      }
    if (banked) continue;
    if (four && (z == ML::ub || z == ML::vb || z == ML::w2 || z == ML::w3)) {
      // t^-1 z t with t = v^(+-1).
      out.cert.entries.push_back({m(z), table.apply(ML::v, -t.sign, Word{m(z)}), "G4T action of v"});
      continue;
    }
    out.cert.entries.push_back({m(z), Word{m(z)}, "trivial path: z commutes with t"});
  }
  add_inverse_entries(out.cert);
  return out;
}

PathCertificate generate_theorem_certificate(TheoremCase c, Surface surface, int n) {
  if (surface != Surface::Torus && surface != Surface::Klein)
    throw UnsupportedError("theorem certificates exist for the torus and the Klein bottle");
  if (n < 2) throw DomainError("n must be at least 2");
  const bool T = surface == Surface::Torus;
  PathCertificate cert;
  cert.name = std::string(to_string(c));
  cert.context = GroupSpec{GroupKind::Pure, surface, n};
  auto add = [&](Letter z, Word w, std::string cite) { cert.entries.push_back({z, std::move(w), std::move(cite)}); };
  if (c == TheoremCase::DescendB1) {
    cert.t = b(1, -1);
    for (int j = 2; j <= n; ++j) {
      add(a(j), a(j) * Cw(1, j, -1) * Cw(2, j), "b_1 a_j b_1^-1");
      if (T)
        add(C(1, j), b(j, -1) * Cw(2, j, -1) * Cw(1, j) * b(j) * Cw(2, j), "b_1 C_{1,j} b_1^-1, torus");
      else
        add(C(1, j), b(j, -1) * (Cw(2, j, -1) * Cw(1, j)).inverse() * b(j) * Cw(1, j) * Cw(1, j, -1) * Cw(2, j),
            "b_1 C_{1,j} b_1^-1, Klein bottle");
      add(b(j), T ? Word{b(j)} : Cw(2, j, -1) * Cw(1, j) * b(j), T ? "b_1 and b_j commute" : "b_1 b_j b_1^-1, Klein bottle");
      for (int k = j + 1; k <= n; ++k) add(C(j, k), Cw(j, k), "b_1 and C_{j,k} commute");
    }
    Word prod;
    for (int j = 2; j <= n; ++j) prod *= T ? Cw(1, j, -1) * Cw(2, j) : Cw(1, j) * Cw(2, j, -1);
    add(a(1, -1), T ? a(1, -1) * prod : prod * a(1), "b_1 a_1^-1 b_1^-1 from the surface relation");
    add(b(1), Word{b(1)}, "trivial path");
  } else {
    cert.t = b(n);
    for (int i = 1; i < n; ++i) {
      add(a(i), Cw(i, n) * Cw(i + 1, n, -1) * a(i), "b_n^-1 a_i b_n");
      add(b(i), T ? Word{b(i)} : b(i) * Cw(i + 1, n) * Cw(i, n, -1), T ? "b_i and b_n commute" : "b_n^-1 b_i b_n, Klein bottle");
      for (int j = i + 1; j < n; ++j) add(C(i, j), Cw(i, j), "b_n and C_{i,j} commute");
      Word prod;
      for (int j = 1; j <= n - i; ++j) {
        Word X = Cw(n - j, n) * Cw(n - j + 1, n, -1);
        prod *= b(n - j) * (T ? X : X.inverse()) * b(n - j, -1);
      }
      add(C(i, n), prod, "b_n^-1 C_{i,n} b_n as a product of conjugates");
    }
    add(a(n), T ? a(n) * Cw(1, n, -1) : Cw(1, n) * a(n, -1), "b_n^-1 a_n b_n");
    add(b(n), Word{b(n)}, "trivial path");
  }
  add_inverse_entries(cert);
  return cert;
}

}  // namespace sbraid
