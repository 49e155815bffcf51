#include "sigma_braid/characters.hpp"

#include <charconv>

#include "sigma_braid/bank.hpp"
#include "sigma_braid/models.hpp"

namespace sbraid {

namespace {

bool handle(Surface s) { return s == Surface::Torus || s == Surface::Klein; }

int sphere_index(int n, int i, int j) {
  const auto coords = sphere_coordinates(n);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] == std::pair{i, j}) return static_cast<int>(k);
  return -1;
}

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw DomainError("empty number");
  std::size_t k = s[0] == '-' || s[0] == '+' ? 1 : 0;
  if (k == s.size()) throw DomainError("bad number '" + std::string(s) + "'");
  for (std::size_t i = k; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw DomainError("bad number '" + std::string(s) + "'");
  Integer v(std::string(s.substr(k)));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), q);
}

std::string rational_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::vector<std::pair<int, int>> sphere_coordinates(int n) {
  std::vector<std::pair<int, int>> out;
  for (int j = 2; j <= n - 1; ++j)
    for (int i = 1; i < j; ++i)
      if (!(i == 1 && j == 2)) out.push_back({i, j});
  return out;
}

AbelianizationSpec abelianization_spec(const GroupSpec& g) {
  AbelianizationSpec s;
  s.group = g;
  const int n = g.n;
  auto idx = [](char c, int i) { return std::string(1, c) + std::to_string(i); };
  if (g.kind == GroupKind::Pure) {
    switch (g.surface) {
      case Surface::Torus:
        for (int i = 1; i <= n; ++i) s.basis.push_back(idx('a', i));
        for (int i = 1; i <= n; ++i) s.basis.push_back(idx('b', i));
        s.torsion_description = "none";
        break;
      case Surface::Klein:
        for (int i = 1; i <= n; ++i) s.basis.push_back(idx('b', i));
        for (int i = 1; i <= n; ++i) s.torsion.push_back(idx('a', i));
        s.torsion_description = "Z2 on each a_i";
        break;
      case Surface::Sphere:
        for (auto [i, j] : sphere_coordinates(n))
          s.basis.push_back("A[" + std::to_string(i) + "," + std::to_string(j) + "]");
        s.torsion_description = n >= 3 ? "Z2" : "trivial group";
        break;
      case Surface::ProjectivePlane:
        s.torsion_description = "finite";
        break;
      case Surface::Disc:
        throw UnsupportedError("pure braid groups of the disc are not among the computed families");
    }
  } else {
    switch (g.surface) {
      case Surface::Torus:
        s.basis = {"a", "b"};
        s.torsion = {"sigma"};
        s.torsion_description = "Z2 generated by sigma";
        break;
      case Surface::Klein:
        s.basis = {"b"};
        s.torsion = {"a", "sigma"};
        s.torsion_description = "Z2 x Z2 generated by a and sigma";
        break;
      case Surface::Disc:
        s.basis = {"sigma"};
        s.torsion_description = "none";
        break;
      case Surface::Sphere:
        s.torsion_description = "Z" + std::to_string(n >= 2 ? 2 * (n - 1) : 1) + " generated by sigma";
        break;
      case Surface::ProjectivePlane:
        s.torsion_description = "finite";
        break;
    }
  }
  s.free_rank = static_cast<int>(s.basis.size());
  return s;
}

Abelianized abelianize(const GroupSpec& g, const Word& w) {
  const AbelianizationSpec spec = abelianization_spec(g);
  Abelianized out;
  out.free.assign(spec.basis.size(), 0);
  out.torsion.assign(spec.torsion.size(), 0);
  const int n = g.n;
  auto flip = [&](std::size_t k) { out.torsion[k] ^= 1; };
  for (const auto& l : w) {
    check_letter(g, l);
    const Gen& x = l.gen;
    if (g.kind == GroupKind::Pure) {
      if (g.surface == Surface::Torus) {
        if (x.family == Family::PureA) out.free[x.i - 1] += l.sign;
        if (x.family == Family::PureB) out.free[n + x.i - 1] += l.sign;
      } else if (g.surface == Surface::Klein) {
        if (x.family == Family::PureB) out.free[x.i - 1] += l.sign;
        if (x.family == Family::PureA) flip(x.i - 1);
      } else if (g.surface == Surface::Sphere && x.family == Family::SphereA) {
        out.free[sphere_index(n, x.i, x.j)] += l.sign;
      }
      continue;
    }
    switch (g.surface) {
      case Surface::Torus:
        if (x.family == Family::PureA) out.free[0] += l.sign;
        if (x.family == Family::PureB) out.free[1] += l.sign;
        if (x.family == Family::Artin) flip(0);
        break;
      case Surface::Klein:
        if (x.family == Family::PureB) out.free[0] += l.sign;
        if (x.family == Family::PureA) flip(0);
        if (x.family == Family::Artin) flip(1);
        break;
      case Surface::Disc:
        if (x.family == Family::Artin) out.free[0] += l.sign;
        if (x.family == Family::Delta) out.free[0] += l.sign * n * (n - 1);
        break;
      default: break;
    }
  }
  return out;
}

bool Character::is_zero() const {
  for (const auto& c : coords)
    if (c != 0) return false;
  return true;
}

Character Character::operator-() const { return scaled(-1); }

Character Character::scaled(const Rational& r) const {
  Character c = *this;
  for (auto& x : c.coords) x *= r;
  return c;
}

Character make_character(const GroupSpec& group, std::vector<Rational> coords) {
  const auto spec = abelianization_spec(group);
  if (static_cast<int>(coords.size()) != spec.free_rank)
    throw DomainError("character for " + describe(group) + " needs " + std::to_string(spec.free_rank) +
                      " coordinates, got " + std::to_string(coords.size()));
  return {group, std::move(coords)};
}

Character torus_character(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw DomainError("a and b blocks differ in length");
  std::vector<Rational> c = a;
  c.insert(c.end(), b.begin(), b.end());
  return make_character({GroupKind::Pure, Surface::Torus, static_cast<int>(a.size())}, std::move(c));
}

Character klein_character(const std::vector<Rational>& b) {
  return make_character({GroupKind::Pure, Surface::Klein, static_cast<int>(b.size())}, b);
}

Rational evaluate(const Character& chi, const Word& w) {
  const Abelianized ab = abelianize(chi.group, w);
  Rational r = 0;
  for (std::size_t k = 0; k < ab.free.size(); ++k) r += chi.coords[k] * Rational(ab.free[k]);
  return r;
}

Rational LetterWeights::operator()(const Letter& l) const {
  auto it = weight.find(l.gen);
  if (it == weight.end()) return 0;
  return l.sign > 0 ? it->second : Rational(-it->second);
}

Rational LetterWeights::of(const Word& w) const {
  Rational r = 0;
  for (const auto& l : w) r += (*this)(l);
  return r;
}

Rational nu(const Character& chi, const Word& start, const Word& steps) {
  return nu([&](const Letter& l) { return evaluate(chi, Word{l}); }, start, steps);
}

ModelId model_of(const Character& chi) {
  if (chi.group.kind != GroupKind::Pure) throw UnsupportedError("models exist only for pure braid groups");
  return model_for(chi.group.surface, chi.group.n);
}

LetterWeights model_weights(const Character& chi) {
  const IsoDictionary& d = dictionary(chi.group.surface, chi.group.n);
  LetterWeights lw;
  for (const auto& [letter, img] : d.to_braid) lw.weight[Gen{Family::Model, static_cast<int>(letter), 0}] = evaluate(chi, img);
  return lw;
}

LetterWeights model_weights(ModelId model, const std::map<ModelLetter, Rational>& values) {
  LetterWeights lw;
  for (const auto& [letter, v] : values) {
    Gen g{Family::Model, static_cast<int>(letter), 0};
    if (!admits(model, g))
      throw DomainError("letter " + std::string(model_letter_name(letter)) + " is not in " +
                        std::string(to_string(model)));
    lw.weight[g] = v;
  }
  for (const auto& e : equation_bank()) {
    if (e.model != model || !e.expected) continue;
    if (lw.of(e.lhs) != lw.of(e.rhs))
      throw DomainError("weights do not define a character of " + std::string(to_string(model)) +
                        " (they separate the two sides of " + serialize_word(e.lhs) + " = " +
                        serialize_word(e.rhs) + ")");
  }
  return lw;
}

Character SpherePoint::character() const {
  std::vector<Rational> c;
  for (const auto& x : coords) c.emplace_back(x);
  return {group, std::move(c)};
}

SpherePoint sphere_point(const Character& chi) {
  if (chi.is_zero()) throw DomainError("the zero character has no sphere point");
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer l = 1;
  for (const auto& c : chi.coords) l = boost::multiprecision::lcm(l, Integer(denominator(c)));
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& c : chi.coords) {
    Integer x = numerator(c) * (l / denominator(c));
    g = boost::multiprecision::gcd(g, x);
    v.push_back(x);
  }
  if (g < 0) g = -g;
  for (auto& x : v) x /= g;
  return {chi.group, std::move(v)};
}

namespace {

int blocks(const GroupSpec& g) {
  if (g.kind != GroupKind::Pure || !handle(g.surface))
    throw UnsupportedError("strand maps are defined for pure braid groups of the torus and Klein bottle");
  return g.surface == Surface::Torus ? 2 : 1;
}

}  // namespace

Character strand_pullback(const Character& chi, int n, const std::vector<int>& strands) {
  const int nb = blocks(chi.group);
  const int k = chi.group.n;
  if (static_cast<int>(strands.size()) != k) throw IndexError("strand list must name every source strand");
  std::vector<bool> used(n + 1, false);
  for (int s : strands) {
    if (s < 1 || s > n || used[s]) throw IndexError("strand positions must be distinct and lie in 1.." + std::to_string(n));
    used[s] = true;
  }
  std::vector<Rational> c(static_cast<std::size_t>(nb * n), 0);
  for (int bl = 0; bl < nb; ++bl)
    for (int t = 0; t < k; ++t) c[bl * n + strands[t] - 1] = chi.coords[bl * k + t];
  return make_character({GroupKind::Pure, chi.group.surface, n}, std::move(c));
}

Character strand_pushforward(const Character& chi, const std::vector<int>& keep) {
  const int nb = blocks(chi.group);
  const int n = chi.group.n;
  std::vector<bool> kept(n + 1, false);
  for (int s : keep) {
    if (s < 1 || s > n || kept[s]) throw IndexError("kept strands must be distinct and lie in 1.." + std::to_string(n));
    kept[s] = true;
  }
  for (int bl = 0; bl < nb; ++bl)
    for (int s = 1; s <= n; ++s)
      if (!kept[s] && chi.coords[bl * n + s - 1] != 0)
        throw DomainError("character does not factor through the projection: strand " + std::to_string(s) +
                          " carries a nonzero coordinate");
  const int k = static_cast<int>(keep.size());
  std::vector<Rational> c(static_cast<std::size_t>(nb * k), 0);
  for (int bl = 0; bl < nb; ++bl)
    for (int t = 0; t < k; ++t) c[bl * k + t] = chi.coords[bl * n + keep[t] - 1];
  return make_character({GroupKind::Pure, chi.group.surface, k}, std::move(c));
}

}  // namespace sbraid
