#include "sigma_braid/word.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>

namespace sbraid {

namespace {

constexpr std::array<std::string_view, kModelLetterCount> kModelNames = {
    "x", "y", "a", "b", "u", "v", "w", "ub", "vb", "w2", "w3"};

bool model_has(ModelId id, ModelLetter l) {
  int k = static_cast<int>(l);
  switch (id) {
    case ModelId::G2T:
    case ModelId::G2K: return k <= static_cast<int>(ModelLetter::b);
    case ModelId::G3T: return k <= static_cast<int>(ModelLetter::w);
    case ModelId::G4T: return true;
  }
  return false;
}

int parse_int(std::string_view s, std::size_t pos) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError("bad index '" + std::string(s) + "'", pos);
  return v;
}

}  // namespace

std::string_view model_letter_name(ModelLetter l) {
  return kModelNames[static_cast<std::size_t>(l)];
}

Letter sigma(int i, int sign) { return {{Family::Artin, i, 0}, sign}; }
Letter a(int i, int sign) { return {{Family::PureA, i, 0}, sign}; }
Letter b(int i, int sign) { return {{Family::PureB, i, 0}, sign}; }
Letter C(int i, int j, int sign) { return {{Family::PureC, i, j}, sign}; }
Letter At(int i, int j, int sign) { return {{Family::SphereA, i, j}, sign}; }
Letter delta(int sign) { return {{Family::Delta, 0, 0}, sign}; }
Letter m(ModelLetter l, int sign) { return {{Family::Model, static_cast<int>(l), 0}, sign}; }

Word reduce(std::span<const Letter> raw) {
  Word w;
  for (const auto& l : raw) w *= l;
  return w;
}

Word::Word(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) *this *= l;
}

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto& l : letters) *this *= l;
}

Word& Word::operator*=(const Letter& l) {
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
    letters_.pop_back();
  else
    letters_.push_back(l);
  return *this;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& l : rhs.letters_) *this *= l;
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

Word Word::pow(long long e) const {
  Word base = e < 0 ? inverse() : *this;
  Word out;
  for (long long k = 0; k < (e < 0 ? -e : e); ++k) out *= base;
  return out;
}

Word Cw(int i, int j, int sign) {
  if (i == j) return {};
  return Word{C(i, j, sign)};
}

std::string_view to_string(GroupKind k) { return k == GroupKind::Pure ? "P" : "B"; }

std::string_view to_string(Surface s) {
  switch (s) {
    case Surface::Torus: return "T";
    case Surface::Klein: return "K";
    case Surface::Sphere: return "S2";
    case Surface::ProjectivePlane: return "RP2";
    case Surface::Disc: return "D";
  }
  return "?";
}

std::string_view to_string(ModelId id) {
  switch (id) {
    case ModelId::G2T: return "G2T";
    case ModelId::G2K: return "G2K";
    case ModelId::G3T: return "G3T";
    case ModelId::G4T: return "G4T";
  }
  return "?";
}

GroupKind parse_group_kind(std::string_view s) {
  if (s == "P") return GroupKind::Pure;
  if (s == "B") return GroupKind::Full;
  throw DomainError("unknown group family '" + std::string(s) + "' (expected P or B)");
}

Surface parse_surface(std::string_view s) {
  if (s == "T") return Surface::Torus;
  if (s == "K") return Surface::Klein;
  if (s == "S2") return Surface::Sphere;
  if (s == "RP2") return Surface::ProjectivePlane;
  if (s == "D") return Surface::Disc;
  throw DomainError("unknown surface '" + std::string(s) + "' (expected T, K, S2, RP2 or D)");
}

ModelId parse_model(std::string_view s) {
  for (auto id : {ModelId::G2T, ModelId::G2K, ModelId::G3T, ModelId::G4T})
    if (to_string(id) == s) return id;
  throw DomainError("unknown model '" + std::string(s) + "'");
}

std::string describe(const GroupSpec& g) {
  return std::string(to_string(g.kind)) + "_" + std::to_string(g.n) + "(" +
         std::string(to_string(g.surface)) + ")";
}

bool admits(const Alphabet& alphabet, const Gen& g) {
  if (const auto* id = std::get_if<ModelId>(&alphabet)) {
    return g.family == Family::Model && g.i >= 0 && g.i < kModelLetterCount &&
           model_has(*id, static_cast<ModelLetter>(g.i));
  }
  const auto& spec = std::get<GroupSpec>(alphabet);
  const int n = spec.n;
  const bool handle = spec.surface == Surface::Torus || spec.surface == Surface::Klein;
  switch (g.family) {
    case Family::PureA:
    case Family::PureB: return handle && g.i >= 1 && g.i <= n;
    case Family::PureC: return handle && g.i >= 1 && g.i < g.j && g.j <= n;
    case Family::Artin: return spec.kind == GroupKind::Full && g.i >= 1 && g.i <= n - 1;
    case Family::SphereA:
      return spec.kind == GroupKind::Pure && spec.surface == Surface::Sphere && g.i >= 1 &&
             g.i < g.j && g.j <= n - 1 && !(g.i == 1 && g.j == 2);
    case Family::Delta: return spec.kind == GroupKind::Full && spec.surface == Surface::Disc;
    case Family::Model: return false;
  }
  return false;
}

void check_letter(const Alphabet& alphabet, const Letter& l) {
  if (admits(alphabet, l.gen)) return;
  const bool family_ok = [&] {
    Gen probe = l.gen;
    if (std::holds_alternative<ModelId>(alphabet)) return probe.family == Family::Model;
    // Same family with small indices tells "wrong index" apart from "wrong alphabet".
    probe.i = 1;
    probe.j = probe.family == Family::SphereA ? 3 : 2;
    if (probe.family == Family::Artin || probe.family == Family::PureA || probe.family == Family::PureB)
      probe.j = 0;
    if (probe.family == Family::Delta) probe.i = 0;
    return admits(alphabet, probe);
  }();
  std::string where = std::holds_alternative<ModelId>(alphabet)
                          ? std::string(to_string(std::get<ModelId>(alphabet)))
                          : describe(std::get<GroupSpec>(alphabet));
  if (family_ok)
    throw IndexError("index out of range: " + to_string(l) + " in " + where);
  throw DomainError("symbol " + to_string(l) + " is not in the alphabet of " + where);
}

std::string to_string(const Letter& l) {
  std::string s;
  const Gen& g = l.gen;
  switch (g.family) {
    case Family::Artin: s = "s" + std::to_string(g.i); break;
    case Family::PureA: s = "a" + std::to_string(g.i); break;
    case Family::PureB: s = "b" + std::to_string(g.i); break;
    case Family::PureC: s = "C[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]"; break;
    case Family::SphereA: s = "A[" + std::to_string(g.i) + "," + std::to_string(g.j) + "]"; break;
    case Family::Delta: s = "D"; break;
    case Family::Model:
      s = g.i >= 0 && g.i < kModelLetterCount ? std::string(kModelNames[g.i]) : "?";
      break;
  }
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string serialize_word(const Word& w) {
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

namespace {

Letter parse_token(std::string_view tok, std::size_t pos, bool model_context) {
  int sign = 1;
  if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
    sign = -1;
    tok.remove_suffix(3);
  }
  if (tok.empty()) throw ParseError("empty symbol", pos);
  if (model_context) {
    for (int k = 0; k < kModelLetterCount; ++k)
      if (kModelNames[k] == tok) return m(static_cast<ModelLetter>(k), sign);
    throw ParseError("unknown model letter '" + std::string(tok) + "'", pos);
  }
  if (tok == "D") return delta(sign);
  char head = tok[0];
  if ((head == 'C' || head == 'A') && tok.size() >= 2 && tok[1] == '[') {
    if (tok.back() != ']') throw ParseError("missing ']'", pos + tok.size());
    auto inner = tok.substr(2, tok.size() - 3);
    auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw ParseError("missing ',' in pair index", pos + 2);
    int i = parse_int(inner.substr(0, comma), pos + 2);
    int j = parse_int(inner.substr(comma + 1), pos + 3 + comma);
    return head == 'C' ? C(i, j, sign) : At(i, j, sign);
  }
  if (head == 's' || head == 'a' || head == 'b') {
    int i = parse_int(tok.substr(1), pos + 1);
    if (head == 's') return sigma(i, sign);
    return head == 'a' ? a(i, sign) : b(i, sign);
  }
  throw ParseError("unknown symbol '" + std::string(tok) + "'", pos);
}

}  // namespace

Letter parse_letter(std::string_view token, const Alphabet& alphabet) {
  Letter l = parse_token(token, 0, std::holds_alternative<ModelId>(alphabet));
  check_letter(alphabet, l);
  return l;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  const bool model_context = std::holds_alternative<ModelId>(alphabet);
  Word w;
  std::size_t k = 0;
  while (k < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[k]))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    while (k < text.size() && !std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    Letter l = parse_token(text.substr(start, k - start), start, model_context);
    check_letter(alphabet, l);
    w *= l;
  }
  return w;
}

Word build_alpha_beta(Product kind, int j, int i, int n) {
  if (i < 1 || j < 1 || i > n || j > n)
    throw IndexError("product indices must lie in 1.." + std::to_string(n));
  Word w;
  for (int k = i; k <= j; ++k) w *= kind == Product::Alpha ? a(j + i - k) : b(j + i - k);
  return w;
}

Word build_A(int i, int j, int n) {
  if (!(1 <= i && i < j && j <= n))
    throw IndexError("A[" + std::to_string(i) + "," + std::to_string(j) + "] needs 1 <= i < j <= " +
                     std::to_string(n));
  Word w;
  for (int k = j - 1; k > i; --k) w *= sigma(k);
  w *= sigma(i);
  w *= sigma(i);
  for (int k = i + 1; k <= j - 1; ++k) w *= sigma(k, -1);
  return w;
}

Word build_Delta(int n) {
  if (n < 2) throw IndexError("full twist needs n >= 2");
  Word w;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) w *= build_A(i, j, n);
  return w;
}

}  // namespace sbraid
