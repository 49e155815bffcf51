#include <charconv>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "sigma_braid/criterion.hpp"

namespace sbraid {

namespace {

std::string key_of(const NormalForm& g) {
  std::string k;
  auto put = [&](const Word& w) {
    for (const auto& l : w) k.push_back(static_cast<char>(2 * l.gen.i + (l.sign > 0 ? 1 : 0) + 1));
    k.push_back('|');
  };
  put(g.kappa);
  put(g.mu);
  put(g.omega);
  k += std::to_string(g.n);
  k.push_back(',');
  k += std::to_string(g.m);
  return k;
}

struct Dsu {
  std::vector<std::size_t> parent;
  std::size_t add() {
    parent.push_back(parent.size());
    return parent.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

}  // namespace

std::size_t ball_budget_from_env() {
  const char* env = std::getenv("SIGMA_BRAID_BALL_BUDGET");
  if (!env) return kDefaultBallBudget;
  std::string_view s(env);
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v == 0) return kDefaultBallBudget;
  return v;
}

BallReport explore_ball(ModelId model, const LetterWeights& chi, int radius, const std::vector<Word>& targets,
                        std::optional<std::size_t> budget) {
  if (radius < 1) throw DomainError("radius must be at least 1");
  BallReport rep;
  rep.model = model;
  rep.radius = radius;
  rep.budget = budget.value_or(ball_budget_from_env());
  rep.note =
      "bounded search in the radius-" + std::to_string(radius) +
      " ball; a target not reached here is not a proof that the chi-nonnegative subgraph is disconnected";

  std::vector<Letter> steps;
  for (ModelLetter l : model_letters(model)) {
    steps.push_back(m(l));
    steps.push_back(m(l, -1));
  }
  for (const auto& s : steps)
    if (chi(s) > 0) {
      rep.base = Word{s};
      break;
    }
  if (rep.base.empty()) {
    for (const auto& s : steps)
      if (chi(s) != 0) throw UnsupportedError("no generator has positive value, so no base vertex can be chosen");
  }

  std::unordered_map<std::string, std::size_t> id;
  std::vector<NormalForm> forms;
  std::vector<Rational> value;
  std::vector<int> dist;
  std::vector<Word> words;
  Dsu dsu;
  auto insert = [&](NormalForm g, Rational v, int d, Word w) {
    std::string k = key_of(g);
    id.emplace(std::move(k), forms.size());
    forms.push_back(std::move(g));
    value.push_back(std::move(v));
    dist.push_back(d);
    words.push_back(std::move(w));
    dsu.add();
  };
  insert(identity_form(model), 0, 0, Word{});
  for (std::size_t head = 0; head < forms.size(); ++head) {
    for (const auto& s : steps) {
      NormalForm g = forms[head];
      multiply(g, s);
      std::string k = key_of(g);
      auto it = id.find(k);
      std::size_t other;
      if (it != id.end()) {
        other = it->second;
      } else {
        if (dist[head] + 1 > radius) continue;
        if (forms.size() >= rep.budget) {
          rep.truncated = true;
          continue;
        }
        other = forms.size();
        insert(std::move(g), value[head] + chi(s), dist[head] + 1, words[head] * s);
      }
      if (value[head] >= 0 && value[other] >= 0) dsu.join(head, other);
    }
  }
  rep.vertices = forms.size();

  auto locate = [&](const Word& w) -> std::optional<std::size_t> {
    auto it = id.find(key_of(normalize(model, w)));
    if (it == id.end()) return std::nullopt;
    return it->second;
  };
  const std::size_t base = *locate(rep.base);
  const bool base_ok = value[base] >= 0;
  for (std::size_t v = 0; v < forms.size(); ++v) {
    if (value[v] < 0) continue;
    ++rep.nonnegative;
    if (base_ok && dsu.find(v) == dsu.find(base))
      ++rep.reachable;
    else if (rep.unreached_sample.size() < 5)
      rep.unreached_sample.push_back(forms[v].to_word());
  }
  for (const auto& t : targets) {
    BallTarget bt{t, false, false};
    if (auto v = locate(t)) {
      bt.in_ball = true;
      bt.reachable = base_ok && value[*v] >= 0 && dsu.find(*v) == dsu.find(base);
    }
    rep.targets.push_back(std::move(bt));
  }
  return rep;
}

std::vector<Word> free_projection(const Word& start, const Word& steps) {
  NormalForm g = normalize(ModelId::G2K, start);
  std::vector<Word> walk{g.omega};
  for (const auto& s : steps) {
    NormalForm bare = identity_form(ModelId::G2K);
    bare.n = g.n;
    bare.m = g.m;
    multiply(bare, s);
    Word cur = walk.back();
    for (const auto& l : bare.omega) {
      cur *= l;
      walk.push_back(cur);
    }
    multiply(g, s);
  }
  return walk;
}

}  // namespace sbraid
