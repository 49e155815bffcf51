#include "oracle.hpp"

#include <stdexcept>

namespace oracle {

using sbraid::CircleDescriptor;
using sbraid::CircleKind;
using sbraid::ModelLetter;
using ML = sbraid::ModelLetter;

namespace {

int idx(ML l) { return static_cast<int>(l); }

Word w(std::string_view text) { return sbraid::parse_word(text, ModelId::G4T); }

bool in_f3(int l) { return l == idx(ML::u) || l == idx(ML::v) || l == idx(ML::w); }
bool in_f4(int l) { return l == idx(ML::ub) || l == idx(ML::vb) || l == idx(ML::w2) || l == idx(ML::w3); }

}  // namespace

Semidirect::Semidirect(ModelId model) : model_(model) {
  auto set = [&](ML h, int sign, ML z, std::string_view img) { down_[{idx(h), sign}][idx(z)] = w(img); };
  if (model == ModelId::G2K) {
    set(ML::a, 1, ML::y, "x^-1 x^-1 y");
    set(ML::a, -1, ML::y, "x x y");
    for (int s : {1, -1}) {
      set(ML::b, s, ML::x, "x^-1");
      set(ML::b, s, ML::y, "x y x");
    }
  }
  if (model == ModelId::G3T || model == ModelId::G4T) {
    set(ML::x, 1, ML::v, "u^-1 v u w^-1");
    set(ML::x, -1, ML::v, "u v w u^-1");
    set(ML::y, 1, ML::u, "v^-1 u v w");
    set(ML::y, -1, ML::u, "v u w^-1 v^-1");
  }
  if (model == ModelId::G4T) {
    set(ML::x, 1, ML::vb, "ub^-1 vb ub w2^-1");
    set(ML::x, -1, ML::vb, "ub vb w2 ub^-1");
    set(ML::y, 1, ML::ub, "vb^-1 ub vb w2");
    set(ML::y, -1, ML::ub, "vb ub w2^-1 vb^-1");
    set(ML::u, 1, ML::w2, "w3 ub^-1 w2 w3^-1 ub");
    set(ML::u, -1, ML::w2, "ub w3^-1 w2 ub^-1 w3");
    set(ML::u, 1, ML::vb, "ub^-1 vb ub w3^-1");
    set(ML::u, -1, ML::vb, "ub vb w3 ub^-1");
    set(ML::v, 1, ML::w2, "vb^-1 w3^-1 w2 vb w3");
    set(ML::v, -1, ML::w2, "w3 vb w2 w3^-1 vb^-1");
    set(ML::v, 1, ML::ub, "vb^-1 ub vb w3");
    set(ML::v, -1, ML::ub, "vb ub w3^-1 vb^-1");
    set(ML::w, 1, ML::ub, "w3 w2^-1 ub w2 w3^-1");
    set(ML::w, 1, ML::vb, "w3 w2^-1 vb w2 w3^-1");
    set(ML::w, 1, ML::w2, "w3 w2 w3^-1");
    set(ML::w, -1, ML::ub, "w3^-1 w2 ub w2^-1 w3");
    set(ML::w, -1, ML::vb, "w3^-1 w2 vb w2^-1 w3");
    set(ML::w, -1, ML::w2, "w3^-1 w2 w3");
  }
}

Word Semidirect::down(const Letter& h, const Word& z) const {
  auto it = down_.find({h.gen.i, h.sign});
  if (it == down_.end()) return z;
  std::vector<Letter> raw;
  for (const auto& l : z) {
    auto img = it->second.find(l.gen.i);
    if (img == it->second.end()) {
      raw.push_back(l);
      continue;
    }
    Word piece = l.sign > 0 ? img->second : img->second.inverse();
    raw.insert(raw.end(), piece.begin(), piece.end());
  }
  return Word(raw);
}

Element Semidirect::normalize(const Word& word) const {
  Element g;
  const bool klein = model_ == ModelId::G2K;
  for (const auto& l : word) {
    sbraid::check_letter(model_, l);
    const int k = l.gen.i;
    if (in_f4(k)) {
      g.kappa *= l;
    } else if (in_f3(k)) {
      g.mu *= l;
      g.kappa = down(l, g.kappa);
    } else {
      if (k == idx(ML::x) || k == idx(ML::y)) {
        g.omega *= l;
      } else {
        if (k == idx(ML::a)) g.n += (klein && (g.m % 2 != 0)) ? -l.sign : l.sign;
        if (k == idx(ML::b)) g.m += l.sign;
        g.omega = down(l, g.omega);
      }
      g.mu = down(l, g.mu);
      g.kappa = down(l, g.kappa);
    }
  }
  return g;
}

std::vector<Letter> naive_reduce(std::vector<Letter> v) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (v[k].gen == v[k + 1].gen && v[k].sign == -v[k + 1].sign) {
        v.erase(v.begin() + static_cast<long>(k), v.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  return v;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::optional<CircleDescriptor> brute_force_witness(const sbraid::GroupSpec& g, const std::vector<Rational>& c) {
  using sbraid::Surface;
  const int n = g.n;
  bool zero = true;
  for (const auto& x : c) zero = zero && x == 0;
  if (zero) throw std::invalid_argument("zero character");
  if (g.surface == Surface::Torus) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<Rational> cand(2 * n, 0);
        cand[i] = c[i];
        cand[j] = -c[i];
        cand[n + i] = c[n + i];
        cand[n + j] = -c[n + i];
        if (cand == c) return CircleDescriptor{CircleKind::TorusCircle, {i + 1, j + 1}};
      }
    return std::nullopt;
  }
  if (g.surface == Surface::Klein) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || c[i] <= 0) continue;
        std::vector<Rational> cand(n, 0);
        cand[i] = c[i];
        cand[j] = -c[i];
        if (cand == c) return CircleDescriptor{CircleKind::KleinPoint, {i + 1, j + 1}};
      }
    return std::nullopt;
  }
  if (g.surface == Surface::Sphere) {
    if (n == 4) return CircleDescriptor{CircleKind::WholeSphere, {}};
    const auto coords = sbraid::sphere_coordinates(n);
    std::map<std::pair<int, int>, Rational> at;
    for (std::size_t k = 0; k < coords.size(); ++k) at[coords[k]] = c[k];
    auto value = [&](int i, int j) { return at.count({i, j}) ? at[{i, j}] : Rational(0); };
    auto matches = [&](const std::map<std::pair<int, int>, Rational>& pattern) {
      for (const auto& [key, v] : at) {
        auto it = pattern.find(key);
        if ((it == pattern.end() ? Rational(0) : it->second) != v) return false;
      }
      return true;
    };
    const int m = n - 1;
    std::optional<CircleDescriptor> found;
    auto note = [&](CircleDescriptor d) {
      if (found) throw std::logic_error("two witnesses for one point");
      found = std::move(d);
    };
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        for (int k = j + 1; k <= m; ++k) {
          const Rational p = value(i, k), q = value(j, k);
          if (p == 0 && q == 0) continue;
          std::map<std::pair<int, int>, Rational> pat{{{i, k}, p}, {{j, k}, q}};
          if (!(i == 1 && j == 2)) pat[{i, j}] = -(p + q);
          if (matches(pat)) note({CircleKind::P3Circle, {i, j, k}});
          for (int l = k + 1; l <= m; ++l) {
            const Rational p4 = value(i, k), q4 = value(i, l);
            if (p4 == 0 && q4 == 0) continue;
            std::map<std::pair<int, int>, Rational> pat4{
                {{i, k}, p4}, {{j, l}, p4}, {{i, l}, q4}, {{j, k}, q4}, {{k, l}, -(p4 + q4)}};
            if (!(i == 1 && j == 2)) pat4[{i, j}] = -(p4 + q4);
            if (matches(pat4)) note({CircleKind::P4Circle, {i, j, k, l}});
          }
        }
    return found;
  }
  throw std::invalid_argument("no brute-force patterns for this surface");
}

}  // namespace oracle
