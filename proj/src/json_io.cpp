#include "sigma_braid/json_io.hpp"

namespace sbraid {

Json to_json(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return to_json(Integer(numerator(r)));
  return rational_string(r);
}

Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw DomainError("expected an integer or a \"p/q\" string, got " + j.dump());
}

Json to_json(const GroupSpec& g) {
  return {{"group", std::string(to_string(g.kind))}, {"surface", std::string(to_string(g.surface))}, {"n", g.n}};
}

Json to_json(const RelationTable& t) {
  Json rels = Json::array();
  for (const auto& r : t.relations) {
    Json e = {{"name", r.name}, {"lhs", serialize_word(r.lhs)}, {"rhs", serialize_word(r.rhs)}, {"cite", r.cite}};
    if (!r.erratum.empty()) e["erratum"] = r.erratum;
    rels.push_back(std::move(e));
  }
  Json j = to_json(t.group);
  j["family"] = t.family;
  j["relations"] = std::move(rels);
  return j;
}

Json to_json(const Abelianized& ab, const AbelianizationSpec& spec) {
  Json free = Json::object(), tors = Json::object();
  for (std::size_t k = 0; k < ab.free.size(); ++k) free[spec.basis[k]] = to_json(ab.free[k]);
  for (std::size_t k = 0; k < ab.torsion.size(); ++k) tors[spec.torsion[k]] = ab.torsion[k];
  Json j = to_json(spec.group);
  j["free_rank"] = spec.free_rank;
  j["free"] = std::move(free);
  j["torsion"] = std::move(tors);
  j["torsion_description"] = spec.torsion_description;
  return j;
}

namespace {

Json coords_json(const GroupSpec& g, const std::vector<Json>& c) {
  Json j = to_json(g);
  const int n = g.n;
  if (g.kind == GroupKind::Pure && g.surface == Surface::Torus) {
    j["a"] = std::vector<Json>(c.begin(), c.begin() + n);
    j["b"] = std::vector<Json>(c.begin() + n, c.end());
  } else if (g.kind == GroupKind::Pure && g.surface == Surface::Klein) {
    j["b"] = c;
  } else if (g.kind == GroupKind::Pure && g.surface == Surface::Sphere) {
    Json A = Json::object();
    const auto sc = sphere_coordinates(n);
    for (std::size_t k = 0; k < sc.size(); ++k)
      A[std::to_string(sc[k].first) + "," + std::to_string(sc[k].second)] = c[k];
    j["A"] = std::move(A);
  } else {
    const auto spec = abelianization_spec(g);
    for (std::size_t k = 0; k < spec.basis.size(); ++k) j[spec.basis[k]] = c[k];
  }
  return j;
}

std::vector<Rational> rational_array(const Json& j, std::size_t n, const char* key) {
  if (!j.is_array() || j.size() != n)
    throw DomainError(std::string("\"") + key + "\" must be an array of " + std::to_string(n) + " numbers");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Rational scalar(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 1) throw DomainError("expected a single number");
    return rational_from_json(j[0]);
  }
  return rational_from_json(j);
}

}  // namespace

Json to_json(const Character& chi) {
  std::vector<Json> c;
  for (const auto& x : chi.coords) c.push_back(to_json(x));
  return coords_json(chi.group, c);
}

Json to_json(const SpherePoint& pt) {
  std::vector<Json> c;
  for (const auto& x : pt.coords) c.push_back(to_json(x));
  return coords_json(pt.group, c);
}

Json to_json(const CircleDescriptor& d) { return {{"kind", std::string(to_string(d.kind))}, {"indices", d.indices}}; }

Json to_json(const SigmaVerdict& v) {
  Json j = {{"membership", std::string(to_string(v.membership))}, {"cite", v.cite}};
  if (!v.witness) {
    j["witness"] = nullptr;
    return j;
  }
  Json w = Json::array();
  for (int i : v.witness->indices) w.push_back(i);
  for (const auto& p : v.params) w.push_back(to_json(p));
  j["witness"] = std::move(w);
  j["descriptor"] = to_json(*v.witness);
  return j;
}

Json to_json(const ComplementEnumeration& e) {
  Json d = Json::array();
  for (const auto& x : e.descriptors) d.push_back(to_json(x));
  Json j = to_json(e.group);
  j["count"] = e.count();
  j["descriptors"] = std::move(d);
  return j;
}

Json to_json(const PathCertificate& c) {
  Json j = {{"name", c.name}, {"t", to_string(c.t)}};
  if (const auto* id = std::get_if<ModelId>(&c.context))
    j["model"] = std::string(to_string(*id));
  else
    j.update(to_json(std::get<GroupSpec>(c.context)));
  Json es = Json::array();
  for (const auto& e : c.entries) es.push_back({{"z", to_string(e.z)}, {"word", serialize_word(e.path)}, {"cite", e.cite}});
  j["entries"] = std::move(es);
  return j;
}

Json to_json(const CertificateReport& r) {
  Json ms = Json::array();
  for (const auto& m : r.margins)
    ms.push_back({{"z", to_string(m.z)},
                  {"nu_path", to_json(m.path_nu)},
                  {"nu_edge", to_json(m.edge_nu)},
                  {"margin", to_json(m.margin)},
                  {"cite", m.cite}});
  return {{"chi_t", to_json(r.chi_t)}, {"passed", r.passed}, {"endpoints_checked", r.endpoints_checked},
          {"margins", std::move(ms)}};
}

Json to_json(const BallReport& r) {
  Json ts = Json::array();
  for (const auto& t : r.targets)
    ts.push_back({{"word", serialize_word(t.word)}, {"in_ball", t.in_ball}, {"reachable", t.reachable}});
  Json un = Json::array();
  for (const auto& w : r.unreached_sample) un.push_back(serialize_word(w));
  return {{"model", std::string(to_string(r.model))},
          {"radius", r.radius},
          {"base", serialize_word(r.base)},
          {"vertices", r.vertices},
          {"nonnegative", r.nonnegative},
          {"reachable", r.reachable},
          {"truncated", r.truncated},
          {"budget", r.budget},
          {"targets", std::move(ts)},
          {"unreached_sample", std::move(un)},
          {"note", r.note}};
}

Json to_json(const BankReport& r) {
  Json es = Json::array();
  for (const auto& e : r.entries)
    es.push_back({{"name", e.name}, {"holds", e.holds}, {"expected", e.expected}, {"ok", e.ok()}, {"cite", e.cite}});
  Json j = {{"model", std::string(to_string(r.model))}, {"entries", std::move(es)}, {"passed", r.passed()}};
  if (r.random_words) {
    j["random_words"] = r.random_words;
    j["rule_mismatches"] = r.rule_mismatches;
  }
  if (r.model == ModelId::G3T || r.model == ModelId::G4T) j["action_defects"] = r.action_defects;
  return j;
}

Json to_json(const RInfinityCertificate& c) {
  return {{"n", c.n}, {"certified", c.certified}, {"index_bound", to_json(c.index_bound)}, {"permutation", c.permutation}};
}

Json to_json(const LetterWeights& w) {
  Json j = Json::object();
  for (const auto& [g, v] : w.weight) j[to_string(Letter{g, 1})] = to_json(v);
  return j;
}

Character character_from_json(const GroupSpec& g, const Json& j) {
  if (!j.is_object()) throw DomainError("character must be a JSON object");
  if (j.contains("group") && j["group"].get<std::string>() != to_string(g.kind))
    throw DomainError("character group does not match " + describe(g));
  if (j.contains("surface") && j["surface"].get<std::string>() != to_string(g.surface))
    throw DomainError("character surface does not match " + describe(g));
  if (j.contains("n") && j["n"].get<int>() != g.n) throw DomainError("character n does not match " + describe(g));
  const auto spec = abelianization_spec(g);
  const std::size_t n = static_cast<std::size_t>(g.n);
  std::vector<Rational> c;
  if (g.kind == GroupKind::Pure && g.surface == Surface::Torus) {
    if (!j.contains("a") || !j.contains("b")) throw DomainError("a torus character needs \"a\" and \"b\" arrays");
    c = rational_array(j["a"], n, "a");
    auto bv = rational_array(j["b"], n, "b");
    c.insert(c.end(), bv.begin(), bv.end());
  } else if (g.kind == GroupKind::Pure && g.surface == Surface::Klein) {
    if (!j.contains("b")) throw DomainError("a Klein bottle character needs a \"b\" array");
    c = rational_array(j["b"], n, "b");
  } else if (g.kind == GroupKind::Pure && g.surface == Surface::Sphere) {
    const auto sc = sphere_coordinates(g.n);
    c.assign(sc.size(), 0);
    if (!j.contains("A") || !j["A"].is_object()) throw DomainError("a sphere character needs an \"A\" object keyed \"i,j\"");
    for (const auto& [key, val] : j["A"].items()) {
      bool found = false;
      for (std::size_t k = 0; k < sc.size(); ++k)
        if (key == std::to_string(sc[k].first) + "," + std::to_string(sc[k].second)) {
          c[k] = rational_from_json(val);
          found = true;
        }
      if (!found) throw IndexError("A[" + key + "] is not a coordinate of " + describe(g));
    }
  } else {
    for (const auto& label : spec.basis) {
      if (!j.contains(label)) throw DomainError("character needs \"" + label + "\"");
      c.push_back(scalar(j[label]));
    }
  }
  return make_character(g, std::move(c));
}

LetterWeights model_weights_from_json(ModelId model, const Json& j) {
  if (!j.is_object()) throw DomainError("model character must be a JSON object");
  std::map<ModelLetter, Rational> values;
  for (const auto& [key, val] : j.items()) {
    if (key == "model") {
      if (val.get<std::string>() != to_string(model)) throw DomainError("character model does not match");
      continue;
    }
    Letter l = parse_letter(key, model);
    values[static_cast<ModelLetter>(l.gen.i)] = rational_from_json(val);
  }
  return model_weights(model, values);
}

PathCertificate certificate_from_json(const Json& j) {
  PathCertificate c;
  c.name = j.value("name", "");
  if (j.contains("model")) {
    c.context = parse_model(j["model"].get<std::string>());
  } else {
    GroupSpec g{parse_group_kind(j.at("group").get<std::string>()), parse_surface(j.at("surface").get<std::string>()),
                j.at("n").get<int>()};
    if (g.kind != GroupKind::Pure || (g.surface != Surface::Torus && g.surface != Surface::Klein))
      throw UnsupportedError("certificates are checked on models or on P_n(T), P_n(K)");
    c.context = g;
  }
  c.t = parse_letter(j.at("t").get<std::string>(), c.context);
  for (const auto& e : j.at("entries")) {
    c.entries.push_back({parse_letter(e.at("z").get<std::string>(), c.context),
                         parse_word(e.at("word").get<std::string>(), c.context), e.value("cite", "")});
  }
  return c;
}

}  // namespace sbraid
