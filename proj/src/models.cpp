#include "sigma_braid/models.hpp"

#include <array>

namespace sbraid {

namespace {

using ML = ModelLetter;

Word mw(std::string_view text) { return parse_word(text, ModelId::G4T); }

Letter ml(ML l, int sign = 1) { return m(l, sign); }

ML letter_of(const Letter& l) { return static_cast<ML>(l.gen.i); }

bool in_f3(ML l) { return l == ML::u || l == ML::v || l == ML::w; }
bool in_f4(ML l) { return l == ML::ub || l == ML::vb || l == ML::w2 || l == ML::w3; }

Word power(ML l, std::int64_t e) {
  Word w;
  for (std::int64_t k = 0; k < (e < 0 ? -e : e); ++k) w *= ml(l, e < 0 ? -1 : 1);
  return w;
}

bool odd(std::int64_t v) { return (v % 2) != 0; }

// Bottom layer, omega a^n b^m.
void multiply_g2(Word& omega, std::int64_t& n, std::int64_t& m, bool klein, const Letter& l) {
  const int e = l.sign;
  switch (letter_of(l)) {
    case ML::a: n += klein && odd(m) ? -e : e; return;
    case ML::b: m += e; return;
    case ML::x: omega *= ml(ML::x, klein && odd(m) ? -e : e); return;
    case ML::y:
      if (!klein) {
        omega *= l;
      } else if (e == 1) {
        if (!odd(m)) {
          omega *= power(ML::x, 2 * n);
          omega *= ml(ML::y);
        } else {
          omega *= power(ML::x, 2 * n + 1);
          omega *= Word{ml(ML::y), ml(ML::x)};
        }
      } else {
        if (!odd(m)) {
          omega *= ml(ML::y, -1);
          omega *= power(ML::x, -2 * n);
        } else {
          omega *= Word{ml(ML::x, -1), ml(ML::y, -1)};
          omega *= power(ML::x, -2 * n - 1);
        }
      }
      return;
    default: break;
  }
  throw DomainError("letter " + to_string(l) + " does not act at the bottom layer");
}

Word g2_word(const Word& omega, std::int64_t n, std::int64_t m) {
  return omega * power(ML::a, n) * power(ML::b, m);
}

ActionTable make_table(ModelId layer, ActionVariant variant) {
  ActionTable t;
  auto set = [&](ML g, int sign, ML z, std::string_view img) { t.images[{g, sign}][z] = mw(img); };
  if (layer == ModelId::G3T) {
    t.fiber = {ML::u, ML::v, ML::w};
    t.acting = {ML::x, ML::y, ML::a, ML::b};
    set(ML::x, -1, ML::v, "u^-1 v u w^-1");
    set(ML::x, +1, ML::v, "u v w u^-1");
    set(ML::y, -1, ML::u, "v^-1 u v w");
    set(ML::y, +1, ML::u, "v u w^-1 v^-1");
  } else if (layer == ModelId::G4T) {
    t.fiber = {ML::ub, ML::vb, ML::w2, ML::w3};
    t.acting = {ML::x, ML::y, ML::a, ML::b, ML::u, ML::v, ML::w};
    set(ML::x, -1, ML::vb, "ub^-1 vb ub w2^-1");
    set(ML::x, +1, ML::vb, "ub vb w2 ub^-1");
    set(ML::y, -1, ML::ub, "vb^-1 ub vb w2");
    set(ML::y, +1, ML::ub, "vb ub w2^-1 vb^-1");
    set(ML::u, -1, ML::w2, "w3 ub^-1 w2 w3^-1 ub");
    set(ML::u, +1, ML::w2, "ub w3^-1 w2 ub^-1 w3");
    set(ML::v, -1, ML::w2, "vb^-1 w3^-1 w2 vb w3");
    set(ML::v, +1, ML::w2, "w3 vb w2 w3^-1 vb^-1");
    if (variant == ActionVariant::Derived) {
      set(ML::u, -1, ML::vb, "ub^-1 vb ub w3^-1");
      set(ML::u, +1, ML::vb, "ub vb w3 ub^-1");
      set(ML::v, -1, ML::ub, "vb^-1 ub vb w3");
      set(ML::v, +1, ML::ub, "vb ub w3^-1 vb^-1");
    } else {
      set(ML::u, -1, ML::vb, "vb ub w2^-1 ub^-1");
      set(ML::u, +1, ML::vb, "vb ub ub w3^-1 w2 ub^-1 w3 ub^-1");
      set(ML::v, -1, ML::ub, "ub vb w2 vb^-1");
      set(ML::v, +1, ML::ub, "ub vb vb w3 w2^-1 vb^-1 w3^-1 vb^-1");
    }
    set(ML::w, -1, ML::ub, "w3 w2^-1 ub w2 w3^-1");
    set(ML::w, -1, ML::vb, "w3 w2^-1 vb w2 w3^-1");
    set(ML::w, -1, ML::w2, "w3 w2 w3^-1");
    set(ML::w, +1, ML::ub, "w3^-1 w2 ub w2^-1 w3");
    set(ML::w, +1, ML::vb, "w3^-1 w2 vb w2^-1 w3");
    set(ML::w, +1, ML::w2, "w3^-1 w2 w3");
  } else {
    throw UnsupportedError("no action layer for " + std::string(to_string(layer)));
  }
  return t;
}

}  // namespace

Word ActionTable::apply(ModelLetter g, int sign, const Word& z) const {
  auto it = images.find({g, sign});
  if (it == images.end()) return z;
  Word out;
  for (const auto& l : z) {
    auto img = it->second.find(letter_of(l));
    if (img == it->second.end())
      out *= l;
    else
      out *= l.sign > 0 ? img->second : img->second.inverse();
  }
  return out;
}

Word ActionTable::conjugate(const Word& w, const Word& z) const {
  Word res = z;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    res = apply(letter_of(*it), it->sign, res);
  return res;
}

const ActionTable& action_table(ModelId layer, ActionVariant variant) {
  static const ActionTable g3 = make_table(ModelId::G3T, ActionVariant::Derived);
  static const ActionTable g4 = make_table(ModelId::G4T, ActionVariant::Derived);
  static const ActionTable g4_displayed = make_table(ModelId::G4T, ActionVariant::AsDisplayed);
  if (layer == ModelId::G3T) return g3;
  if (layer == ModelId::G4T) return variant == ActionVariant::Derived ? g4 : g4_displayed;
  throw UnsupportedError("no action layer for " + std::string(to_string(layer)));
}

std::vector<ActionDefect> action_defects(ModelId layer, ActionVariant variant) {
  const ActionTable& t = action_table(layer, variant);
  std::vector<ActionDefect> out;
  for (ML g : t.acting) {
    for (int s : {-1, 1}) {
      for (ML z : t.fiber) {
        Word back = t.apply(g, -s, t.apply(g, s, Word{ml(z)}));
        if (back != Word{ml(z)})
          out.push_back({"inverse of " + to_string(ml(g, s)), z, back, Word{ml(z)}});
      }
    }
  }
  std::vector<std::pair<Word, Word>> rels;
  const std::array<ML, 4> bottom = {ML::x, ML::y, ML::a, ML::b};
  for (ML g : bottom)
    for (ML h : {ML::a, ML::b})
      if (g != h && !(g == ML::b && h == ML::a)) rels.push_back({Word{ml(g), ml(h)}, Word{ml(h), ml(g)}});
  if (layer == ModelId::G4T) {
    const ActionTable& lower = action_table(ModelId::G3T);
    for (ML g : bottom)
      for (ML z : lower.fiber)
        rels.push_back({Word{ml(g, -1), ml(z), ml(g)}, lower.apply(g, -1, Word{ml(z)})});
  }
  for (const auto& [lhs, rhs] : rels) {
    for (ML f : t.fiber) {
      Word li = t.conjugate(lhs, Word{ml(f)});
      Word ri = t.conjugate(rhs, Word{ml(f)});
      if (li != ri) out.push_back({serialize_word(lhs) + " = " + serialize_word(rhs), f, li, ri});
    }
  }
  return out;
}

Word NormalForm::to_word() const { return kappa * mu * g2_word(omega, n, m); }

NormalForm identity_form(ModelId model) {
  NormalForm g;
  g.model = model;
  return g;
}

void multiply(NormalForm& g, const Letter& l) {
  check_letter(g.model, l);
  const ML x = letter_of(l);
  if (in_f4(x)) {
    const Word tail = g.mu * g2_word(g.omega, g.n, g.m);
    g.kappa *= action_table(ModelId::G4T).conjugate(tail, Word{l});
  } else if (in_f3(x)) {
    g.mu *= action_table(ModelId::G3T).conjugate(g2_word(g.omega, g.n, g.m), Word{l});
  } else {
    multiply_g2(g.omega, g.n, g.m, g.model == ModelId::G2K, l);
  }
}

NormalForm normalize(ModelId model, const Word& w) {
  NormalForm g = identity_form(model);
  for (const auto& l : w) multiply(g, l);
  return g;
}

bool words_equal(ModelId model, const Word& w1, const Word& w2) {
  return normalize(model, w1) == normalize(model, w2);
}

NormalForm normalize_g2k_by_action(const Word& w) {
  // a z a^-1 and b z b^-1 on F(x,y); b acts as an involution.
  const Word up_a_y = mw("x x y");
  const Word up_b_y = mw("x y x");
  auto conj = [&](ML g, int sign, const Word& z) {
    Word out;
    for (const auto& l : z) {
      Word img{l};
      if (g == ML::a && letter_of(l) == ML::y) {
        img = sign > 0 ? up_a_y : mw("x^-1 x^-1 y");
        if (l.sign < 0) img = img.inverse();
      } else if (g == ML::b) {
        img = letter_of(l) == ML::x ? Word{ml(ML::x, -l.sign)} : (l.sign > 0 ? up_b_y : up_b_y.inverse());
      }
      out *= img;
    }
    return out;
  };
  NormalForm g = identity_form(ModelId::G2K);
  for (const auto& l : w) {
    check_letter(ModelId::G2K, l);
    const ML x = letter_of(l);
    if (x == ML::a) {
      g.n += odd(g.m) ? -l.sign : l.sign;
    } else if (x == ML::b) {
      g.m += l.sign;
    } else {
      Word z{l};
      for (std::int64_t k = 0; k < (g.m < 0 ? -g.m : g.m); ++k) z = conj(ML::b, g.m > 0 ? 1 : -1, z);
      for (std::int64_t k = 0; k < (g.n < 0 ? -g.n : g.n); ++k) z = conj(ML::a, g.n > 0 ? 1 : -1, z);
      g.omega *= z;
    }
  }
  return g;
}

std::vector<ModelLetter> model_letters(ModelId model) {
  std::vector<ModelLetter> out;
  for (int k = 0; k < kModelLetterCount; ++k)
    if (admits(model, Gen{Family::Model, k, 0})) out.push_back(static_cast<ML>(k));
  return out;
}

ModelId model_for(Surface surface, int n) {
  if (surface == Surface::Torus && n >= 2 && n <= 4)
    return n == 2 ? ModelId::G2T : n == 3 ? ModelId::G3T : ModelId::G4T;
  if (surface == Surface::Klein && n == 2) return ModelId::G2K;
  throw UnsupportedError("no normal form is available for " +
                         describe({GroupKind::Pure, surface, n}));
}

namespace {

IsoDictionary build_dictionary(Surface surface, int n) {
  IsoDictionary d;
  d.model = model_for(surface, n);
  d.surface = surface;
  d.n = n;
  auto put = [&](const Letter& braid, std::string_view img) { d.to_model[braid.gen] = mw(img); };
  auto back = [&](ML l, Word img) { d.to_braid[l] = std::move(img); };
  if (n == 2) {
    put(a(2), "x");
    put(b(2), "y");
    put(a(1), "a x^-1");
    put(b(1), "y^-1 b");
    back(ML::x, Word{a(2)});
    back(ML::y, Word{b(2)});
    back(ML::a, Word{a(1), a(2)});
    back(ML::b, Word{b(2), b(1)});
  } else if (n == 3) {
    put(a(3), "u");
    put(b(3), "v");
    put(C(2, 3), "w");
    put(a(2), "x u^-1");
    put(b(2), "y v^-1");
    put(a(1), "a x^-1");
    put(b(1), "b y^-1");
    back(ML::u, Word{a(3)});
    back(ML::v, Word{b(3)});
    back(ML::w, Word{C(2, 3)});
    back(ML::x, Word{a(2), a(3)});
    back(ML::y, Word{b(2), b(3)});
    back(ML::a, Word{a(1), a(2), a(3)});
    back(ML::b, Word{b(1), b(2), b(3)});
  } else {
    put(a(4), "ub");
    put(b(4), "vb");
    put(C(2, 4), "w2");
    put(C(3, 4), "w3");
    put(a(3), "u ub^-1");
    put(b(3), "v vb^-1");
    put(C(2, 3), "w w3 w2^-1");
    put(a(2), "x u^-1");
    put(b(2), "y v^-1");
    put(a(1), "a x^-1");
    put(b(1), "b y^-1");
    back(ML::ub, Word{a(4)});
    back(ML::vb, Word{b(4)});
    back(ML::w2, Word{C(2, 4)});
    back(ML::w3, Word{C(3, 4)});
    back(ML::u, Word{a(3), a(4)});
    back(ML::v, Word{b(3), b(4)});
    back(ML::w, Word{C(2, 3), C(2, 4), C(3, 4, -1)});
    back(ML::x, Word{a(2), a(3), a(4)});
    back(ML::y, Word{b(2), b(3), b(4)});
    back(ML::a, Word{a(1), a(2), a(3), a(4)});
    back(ML::b, Word{b(1), b(2), b(3), b(4)});
  }
  // C_{1,i} from the surface relation at index i.
  for (int i = n; i >= 2; --i) {
    Word prod;
    for (int j = i + 1; j <= n; ++j)
      prod *= surface == Surface::Torus ? Cw(i, j, -1) * Cw(i + 1, j) : Cw(i, j) * Cw(i + 1, j, -1);
    Word P = translate(d, prod, Direction::BraidToModel);
    const Word& ai = d.to_model.at(a(i).gen);
    const Word& bi = d.to_model.at(b(i).gen);
    d.to_model[C(1, i).gen] = surface == Surface::Torus ? bi.inverse() * ai.inverse() * P * bi * ai
                                                        : bi.inverse() * P * ai * bi * ai;
  }
  return d;
}

}  // namespace

const IsoDictionary& dictionary(Surface surface, int n) {
  static const std::array<IsoDictionary, 4> dicts = {
      build_dictionary(Surface::Torus, 2), build_dictionary(Surface::Klein, 2),
      build_dictionary(Surface::Torus, 3), build_dictionary(Surface::Torus, 4)};
  switch (model_for(surface, n)) {
    case ModelId::G2T: return dicts[0];
    case ModelId::G2K: return dicts[1];
    case ModelId::G3T: return dicts[2];
    case ModelId::G4T: return dicts[3];
  }
  throw UnsupportedError("no dictionary");
}

Word translate(const IsoDictionary& dict, const Word& w, Direction dir) {
  Word out;
  for (const auto& l : w) {
    const Word* img = nullptr;
    if (dir == Direction::BraidToModel) {
      if (auto it = dict.to_model.find(l.gen); it != dict.to_model.end()) img = &it->second;
    } else if (l.gen.family == Family::Model) {
      if (auto it = dict.to_braid.find(letter_of(l)); it != dict.to_braid.end()) img = &it->second;
    }
    if (!img)
      throw DomainError("symbol " + to_string(l) + " cannot be translated by the " +
                        std::string(to_string(dict.model)) + " dictionary");
    out *= l.sign > 0 ? *img : img->inverse();
  }
  return out;
}

bool pure_words_equal(Surface surface, int n, const Word& w1, const Word& w2) {
  const IsoDictionary& d = dictionary(surface, n);
  const GroupSpec spec{GroupKind::Pure, surface, n};
  for (const Word* w : {&w1, &w2})
    for (const auto& l : *w) check_letter(spec, l);
  return words_equal(d.model, translate(d, w1, Direction::BraidToModel),
                     translate(d, w2, Direction::BraidToModel));
}

}  // namespace sbraid
