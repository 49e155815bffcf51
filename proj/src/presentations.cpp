#include "sigma_braid/presentations.hpp"

namespace sbraid {

namespace {

bool is_torus(Surface s) { return s == Surface::Torus; }

void require_handle_surface(Surface s) {
  if (s != Surface::Torus && s != Surface::Klein)
    throw UnsupportedError("relation tables exist only for the torus and the Klein bottle");
}

Word alpha(int j, int i) {
  Word w;
  for (int k = i; k <= j; ++k) w *= a(j + i - k);
  return w;
}

Word beta(int j, int i) {
  Word w;
  for (int k = i; k <= j; ++k) w *= b(j + i - k);
  return w;
}

// C_{i,j} C^{-1}_{i+1,j}
Word CC(int i, int j) { return Cw(i, j) * Cw(i + 1, j, -1); }

Word surface_product(Surface s, int i, int n) {
  Word prod;
  for (int j = i + 1; j <= n; ++j)
    prod *= is_torus(s) ? Cw(i, j, -1) * Cw(i + 1, j) : Cw(i, j) * Cw(i + 1, j, -1);
  return prod;
}

void add(RelationTable& t, std::string name, Word lhs, Word rhs, std::string cite,
         std::string erratum = {}) {
  t.relations.push_back({std::move(name), std::move(lhs), std::move(rhs), std::move(cite),
                         std::move(erratum)});
}

void pure_relations(RelationTable& t, Surface s, int n) {
  const bool T = is_torus(s);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      add(t, "a-commute", Word{a(i), a(j)}, Word{a(j), a(i)}, "pure presentation: a_i a_j = a_j a_i");
      add(t, "a-conj-b", Word{a(i, -1), b(j), a(i)},
          Word{b(j), a(j)} * Cw(i, j, -1) * Cw(i + 1, j) * a(j, -1),
          "pure presentation: b_j conjugated by a_i");
      if (T) {
        add(t, "b-commute", Word{b(j), b(i)}, Word{b(i), b(j)}, "pure presentation: b_j b_i, torus");
        add(t, "b-conj-a", Word{b(i, -1), a(j), b(i)}, Word{a(j), b(j)} * CC(i, j) * b(j, -1),
            "pure presentation: a_j conjugated by b_i, torus");
      } else {
        add(t, "b-commute", Word{b(j), b(i)}, Word{b(i), b(j)} * CC(i, j),
            "pure presentation: b_j b_i, Klein bottle");
        add(t, "b-conj-a", Word{b(i, -1), a(j), b(i)},
            Word{a(j), b(j)} * CC(i, j).inverse() * b(j, -1),
            "pure presentation: a_j conjugated by b_i, Klein bottle");
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        Word Cjk = Cw(j, k);
        if (i < j || k < i) {
          add(t, "a-conj-C", a(i, -1) * Cjk * a(i), Cjk, "pure presentation: C_{j,k} conjugated by a_i");
          add(t, "b-conj-C", b(i, -1) * Cjk * b(i), Cjk, "pure presentation: C_{j,k} conjugated by b_i");
        } else if (j <= i && i < k) {
          add(t, "a-conj-C", a(i, -1) * Cjk * a(i),
              a(k) * Cw(i + 1, k, -1) * Cw(i, k) * a(k, -1) * Cjk * Cw(i, k, -1) * Cw(i + 1, k),
              "pure presentation: C_{j,k} conjugated by a_i");
          Word mid = T ? CC(i, k) : CC(i, k).inverse();
          add(t, "b-conj-C", b(i, -1) * Cjk * b(i),
              Cw(i + 1, k) * Cw(i, k, -1) * Cjk * b(k) * mid * b(k, -1),
              T ? "pure presentation: C_{j,k} conjugated by b_i, torus"
                : "pure presentation: C_{j,k} conjugated by b_i, Klein bottle");
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int l = i + 1; l <= n; ++l) {
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          Word lhs = Cw(i, l, -1) * Cw(j, k) * Cw(i, l);
          if ((i < l && l < j && j < k) || (j <= i && i < l && l < k)) {
            add(t, "C-conj-C", lhs, Cw(j, k), "pure presentation: C_{j,k} conjugated by C_{i,l}");
          } else if (i < j && j <= l && l < k) {
            add(t, "C-conj-C", lhs,
                Cw(i, k) * Cw(l + 1, k, -1) * Cw(l, k) * Cw(i, k, -1) * Cw(j, k) * Cw(l, k, -1) *
                    Cw(l + 1, k),
                "pure presentation: C_{j,k} conjugated by C_{i,l}");
          }
        }
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    Word prod = surface_product(s, i, n);
    if (T)
      add(t, "surface", prod, Word{a(i), b(i)} * Cw(1, i) * Word{a(i, -1), b(i, -1)},
          "pure presentation: surface relation, torus");
    else
      add(t, "surface", prod, b(i) * Cw(1, i) * Word{a(i, -1), b(i, -1), a(i, -1)},
          "pure presentation: surface relation, Klein bottle");
  }
}

void full_relations(RelationTable& t, int n) {
  for (int i = 1; i + 1 <= n - 1; ++i)
    add(t, "artin-braid", Word{sigma(i), sigma(i + 1), sigma(i)},
        Word{sigma(i + 1), sigma(i), sigma(i + 1)}, "Artin relation");
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      add(t, "artin-commute", Word{sigma(i), sigma(j)}, Word{sigma(j), sigma(i)}, "Artin relation");
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n; ++j) {
      Word ra, rb;
      if (j == i) {
        ra = Word{sigma(i, -1), sigma(i, -1), a(i + 1)};
        rb = Word{b(i + 1), sigma(i), sigma(i)};
      } else if (j == i + 1) {
        ra = Word{a(i), sigma(i), sigma(i)};
        rb = Word{sigma(i, -1), sigma(i, -1), b(i)};
      } else {
        ra = Word{a(j)};
        rb = Word{b(j)};
      }
      add(t, "sigma-conj-a", Word{sigma(i, -1), a(j), sigma(i)}, ra,
          "a_j conjugated by an Artin generator");
      add(t, "sigma-conj-b", Word{sigma(i, -1), b(j), sigma(i)}, rb,
          "b_j conjugated by an Artin generator");
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      Word w;
      for (int r = k - 1; r > j; --r) w *= sigma(r);
      w *= sigma(j);
      w *= sigma(j);
      for (int r = j + 1; r <= k - 1; ++r) w *= sigma(r);
      add(t, "C-as-sigma", Cw(j, k), w, "C_{j,k} in Artin generators");
    }
  }
}

void family_S(RelationTable& t, int which, Surface s, int n) {
  const bool T = is_torus(s);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (which == 1)
        add(t, "S1", Word{a(i), b(j), a(i, -1)}, b(j) * CC(i, j), "a_i b_j a_i^-1");
      if (which == 2)
        add(t, "S2", Word{b(i), a(j), b(i, -1)}, a(j) * Cw(i + 1, j) * Cw(i, j, -1),
            "b_i a_j b_i^-1, as displayed",
            j >= i + 2 ? "refuted by the normal-form oracle when j >= i+2; see S2'" : "");
      if (which == 5) {
        if (T)
          add(t, "S5", Word{b(i), b(j), b(i, -1)}, Word{b(j)}, "b_i b_j b_i^-1, torus");
        else
          add(t, "S5", Word{b(i), b(j), b(i, -1)}, Cw(i + 1, j, -1) * Cw(i, j) * b(j),
              "b_i b_j b_i^-1, Klein bottle");
      }
    }
  }
  if (which != 3 && which != 4) return;
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      for (int j = 1; j <= i; ++j) {
        if (which == 3)
          add(t, "S3", a(i) * Cw(j, k) * a(i, -1),
              Cw(i + 1, k) * Cw(i, k, -1) * Cw(j, k) * a(k, -1) * Cw(i, k) * Cw(i + 1, k, -1) * a(k),
              "a_i C_{j,k} a_i^-1");
        else {
          Word mid = Cw(i + 1, k, -1) * Cw(i, k);
          add(t, "S4", b(i) * Cw(j, k) * b(i, -1),
              b(k, -1) * (T ? mid : mid.inverse()) * b(k) * Cw(j, k) * Cw(i, k, -1) * Cw(i + 1, k),
              T ? "b_i C_{j,k} b_i^-1, torus" : "b_i C_{j,k} b_i^-1, Klein bottle");
        }
      }
    }
  }
}

void family_R(RelationTable& t, int which, Surface s, int n) {
  const bool T = is_torus(s);
  if (which == 1 || which == 4) {
    for (int i = 1; i < n; ++i) {
      if (which == 1)
        add(t, "R1", Word{a(i + 1), a(i), sigma(i)}, Word{sigma(i), a(i + 1), a(i)},
            "a_{i+1} a_i commutes with sigma_i");
      else
        add(t, "R4", Word{b(i + 1), b(i), sigma(i)},
            Word{sigma(i, T ? 1 : -1), b(i + 1), b(i)},
            T ? "b_{i+1} b_i against sigma_i, torus" : "b_{i+1} b_i against sigma_i, Klein bottle");
    }
    return;
  }
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= j; ++i) {
      if (which == 2 || which == 5) {
        for (int k = i; k < j; ++k) {
          if (which == 2)
            add(t, "R2", alpha(j, i) * sigma(k), sigma(k) * alpha(j, i), "alpha_{j,i} against sigma_k");
          else
            add(t, "R5", beta(j, i) * sigma(k), sigma(k, T ? 1 : -1) * beta(j, i),
                T ? "beta_{j,i} against sigma_k, torus" : "beta_{j,i} against sigma_k, Klein bottle");
        }
      }
      if (which == 3 || which == 6) {
        for (int k = i; k <= j; ++k) {
          for (int tt = k + 1; tt <= j; ++tt) {
            if (which == 3)
              add(t, "R3", alpha(j, i) * Cw(k, tt), Cw(k, tt) * alpha(j, i), "alpha_{j,i} against C_{k,t}");
            else
              add(t, "R6", beta(j, i) * Cw(k, tt), Cw(k, tt, T ? 1 : -1) * beta(j, i),
                  T ? "beta_{j,i} against C_{k,t}, torus" : "beta_{j,i} against C_{k,t}, Klein bottle");
          }
        }
      }
      if (which == 7 && i < j) {
        if (T)
          add(t, "R7", beta(j, i) * b(j), b(j) * beta(j, i), "beta_{j,i} against b_j, torus");
        else
          add(t, "R7", beta(j, i) * b(j) * Cw(i, j), b(j) * beta(j, i), "beta_{j,i} against b_j, Klein bottle");
      }
    }
  }
}

void family_P(RelationTable& t, int which, Surface s, int n) {
  const bool T = is_torus(s);
  Word dlt = Cw(1, n) * Cw(2, n, -1) * Cw(3, n);
  Word dbar = Cw(3, n) * Cw(2, n, -1) * Cw(1, n);
  switch (which) {
    case 1:
      for (int i = 1; i < n; ++i)
        add(t, "P1", Word{b(n, -1), a(i), b(n)}, CC(i, n) * a(i), "a_i conjugated by b_n");
      add(t, "P1", Word{b(n, -1), a(n), b(n)},
          T ? a(n) * Cw(1, n, -1) : Cw(1, n) * a(n, -1),
          T ? "a_n conjugated by b_n, torus" : "a_n conjugated by b_n, Klein bottle");
      break;
    case 2:
      for (int i = 2; i < n; ++i)
        add(t, "P2", b(n, -1) * Cw(i, n) * b(n),
            beta(n - 1, i) * Cw(i, n, T ? 1 : -1) * beta(n - 1, i).inverse(),
            "C_{i,n} conjugated by b_n");
      if (T)
        add(t, "P2", b(n, -1) * Cw(1, n) * b(n),
            beta(n - 1, 3) * b(1) * beta(n - 1, 2) * Cw(2, n, -1) * Cw(3, n) *
                beta(n - 1, 2).inverse() * dlt * b(n) * b(1, -1) * beta(n, 3).inverse(),
            "C_{1,n} conjugated by b_n, torus, as displayed",
            "refuted by the normal-form oracle; see P2'");
      else
        add(t, "P2", b(n, -1) * Cw(1, n) * b(n),
            beta(n - 1, 3) * b(1) * dlt.inverse() * beta(n - 1, 2) * Cw(3, n) * Cw(2, n, -1) *
                beta(n - 1, 2).inverse() * b(n) * dlt * b(1, -1) * beta(n, 3).inverse(),
            "C_{1,n} conjugated by b_n, Klein bottle");
      break;
    case 3:
      for (int i = 1; i < n; ++i)
        add(t, "P3", Word{a(n, -1), b(i), a(n)}, Cw(i, n, -1) * Cw(i + 1, n) * b(i),
            "b_i conjugated by a_n");
      add(t, "P3", Word{a(n, -1), b(n), a(n)}, b(n) * Cw(1, n), "b_n conjugated by a_n");
      break;
    case 4:
      for (int i = 2; i < n; ++i)
        add(t, "P4", a(n, -1) * Cw(i, n) * a(n), alpha(n - 1, i) * Cw(i, n) * alpha(n - 1, i).inverse(),
            "C_{i,n} conjugated by a_n");
      add(t, "P4", a(n, -1) * Cw(1, n) * a(n),
          alpha(n - 1, 3) * a(1) * dbar * alpha(n - 1, 2) * Cw(2, n) * Cw(3, n, -1) *
              alpha(n - 1, 2).inverse() * a(n) * a(1, -1) * alpha(n, 3).inverse(),
          "C_{1,n} conjugated by a_n");
      break;
  }
}

}  // namespace

RelationTable instantiate_presentation(GroupKind kind, Surface surface, int n) {
  require_handle_surface(surface);
  if (n < 1) throw DomainError("n must be at least 1");
  RelationTable t{{kind, surface, n}, kind == GroupKind::Pure ? "presentation" : "full-presentation", {}};
  pure_relations(t, surface, n);
  if (kind == GroupKind::Full) full_relations(t, n);
  return t;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"S1", "S2", "S3", "S4", "S5", "R1", "R2", "R3",
                                                 "R4", "R5", "R6", "R7", "P1", "P2", "P3", "P4"};
  return names;
}

RelationTable instantiate_family(std::string_view name, Surface surface, int n) {
  require_handle_surface(surface);
  if (n < 1) throw DomainError("n must be at least 1");
  if (name.size() != 2 || name[1] < '1' || name[1] > '7')
    throw UnsupportedError("unknown relation family '" + std::string(name) + "'");
  const int which = name[1] - '0';
  const char head = name[0];
  RelationTable t{{GroupKind::Pure, surface, n}, std::string(name), {}};
  if (head == 'S' && which <= 5) {
    family_S(t, which, surface, n);
  } else if (head == 'R' && which <= 7) {
    t.group.kind = GroupKind::Full;
    family_R(t, which, surface, n);
  } else if (head == 'P' && which <= 4) {
    if (which >= 3 && surface != Surface::Torus)
      throw UnsupportedError("family " + std::string(name) + " is stated only for the torus");
    if (n < 3) throw UnsupportedError("family " + std::string(name) + " needs n >= 3");
    family_P(t, which, surface, n);
  } else {
    throw UnsupportedError("unknown relation family '" + std::string(name) + "'");
  }
  return t;
}

RelationTable corrected_relations(Surface surface, int n) {
  require_handle_surface(surface);
  RelationTable t{{GroupKind::Pure, surface, n}, "corrected", {}};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add(t, "S2'", Word{b(i), a(j), b(i, -1)}, a(j) * Cw(i, j, -1) * Cw(i + 1, j),
          "b_i a_j b_i^-1, as obtained in the derivation of S2", "repair of S2");
  if (surface == Surface::Torus && n >= 3) {
    Word dlt = Cw(1, n) * Cw(2, n, -1) * Cw(3, n);
    add(t, "P2'", b(n, -1) * Cw(1, n) * b(n),
        beta(n - 1, 3) * b(1) * beta(n - 1, 2) * Cw(3, n, -1) * Cw(2, n) * beta(n - 1, 2).inverse() *
            dlt * b(n) * b(1, -1) * beta(n, 3).inverse(),
        "C_{1,n} conjugated by b_n, torus, as obtained at the end of its derivation", "repair of P2");
  }
  return t;
}

}  // namespace sbraid
