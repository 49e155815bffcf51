#include "sigma_braid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "sigma_braid/json_io.hpp"

namespace sbraid {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline JSON, or @path to read it from a file.
Json read_json(const std::string& flag, const std::string& text) {
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError(flag + ": cannot open " + text.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    body = ss.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw UsageError(flag + ": invalid JSON (" + e.what() + ")");
  }
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool scalarish(const Json& v) {
  if (!v.is_structured()) return true;
  if (v.is_array()) return std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
  return false;
}

void render_table(const Json& doc, std::ostream& out, const std::string& prefix = "") {
  if (doc.is_array()) {
    if (doc.empty()) {
      out << prefix << "(none)\n";
      return;
    }
    std::vector<std::string> cols;
    for (const auto& row : doc)
      if (row.is_object())
        for (const auto& [k, v] : row.items())
          if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    if (cols.empty()) {
      for (const auto& row : doc) out << prefix << cell(row) << '\n';
      return;
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> width;
    for (const auto& c : cols) width.push_back(c.size());
    for (const auto& row : doc) {
      std::vector<std::string> r;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        r.push_back(row.contains(cols[k]) ? cell(row[cols[k]]) : "");
        width[k] = std::max(width[k], r.back().size());
      }
      rows.push_back(std::move(r));
    }
    auto line = [&](const std::vector<std::string>& r) {
      out << prefix;
      for (std::size_t k = 0; k < r.size(); ++k) {
        out << std::left << std::setw(static_cast<int>(width[k])) << r[k];
        if (k + 1 < r.size()) out << "  ";
      }
      out << '\n';
    };
    line(cols);
    for (const auto& r : rows) line(r);
    return;
  }
  if (!doc.is_object()) {
    out << prefix << cell(doc) << '\n';
    return;
  }
  std::size_t w = 0;
  for (const auto& [k, v] : doc.items())
    if (scalarish(v)) w = std::max(w, k.size());
  for (const auto& [k, v] : doc.items())
    if (scalarish(v)) out << prefix << std::left << std::setw(static_cast<int>(w)) << k << "  " << cell(v) << '\n';
  for (const auto& [k, v] : doc.items()) {
    if (scalarish(v)) continue;
    out << prefix << k << ":\n";
    render_table(v, out, prefix + "  ");
  }
}

struct GroupFlags {
  std::string group = "P";
  std::string surface;
  int n = 0;

  void attach(CLI::App* app, bool need_group = true) {
    if (need_group) app->add_option("--group", group, "P (pure) or B (full braid group)")->check(CLI::IsMember({"P", "B"}));
    app->add_option("--surface", surface, "T, K, S2, RP2 or D")->required()->check(CLI::IsMember({"T", "K", "S2", "RP2", "D"}));
    app->add_option("--n", n, "number of strands")->required()->check(CLI::Range(1, 1 << 20));
  }
  GroupSpec spec() const { return {parse_group_kind(group), parse_surface(surface), n}; }
};

Json verdict_json(const GroupSpec& g, const SpherePoint& pt) {
  Json j = to_json(decide_sigma(g, pt));
  j["point"] = to_json(pt);
  return j;
}

Json check_table(const RelationTable& t, bool oracle, std::size_t& unflagged) {
  Json fails = Json::array();
  std::size_t passed = 0, flagged = 0;
  const bool corrected = t.family == "corrected";
  for (const auto& r : t.relations) {
    bool ok;
    if (oracle) {
      ok = pure_words_equal(t.group.surface, t.group.n, r.lhs, r.rhs);
    } else {
      const Abelianized l = abelianize(t.group, r.lhs), rr = abelianize(t.group, r.rhs);
      ok = l.free == rr.free && l.torsion == rr.torsion;
    }
    if (ok) {
      ++passed;
      continue;
    }
    const bool known = !r.erratum.empty() && !corrected;
    known ? ++flagged : ++unflagged;
    fails.push_back({{"name", r.name},
                     {"lhs", serialize_word(r.lhs)},
                     {"rhs", serialize_word(r.rhs)},
                     {"flagged", known},
                     {"erratum", r.erratum}});
  }
  Json j = to_json(t.group);
  j["family"] = t.family;
  j["check"] = oracle ? "normal form" : "abelianization";
  j["relations"] = t.relations.size();
  j["passed"] = passed;
  j["flagged_failures"] = flagged;
  j["failures"] = std::move(fails);
  return j;
}

Json verify_relations(bool& healthy) {
  std::size_t unflagged = 0;
  Json tables = Json::array();
  const std::vector<std::pair<Surface, int>> oracles = {
      {Surface::Torus, 2}, {Surface::Torus, 3}, {Surface::Torus, 4}, {Surface::Klein, 2}};
  for (const auto& [s, n] : oracles) {
    tables.push_back(check_table(instantiate_presentation(GroupKind::Pure, s, n), true, unflagged));
    for (const auto& name : family_names()) {
      if (name[0] == 'R') continue;
      if (name[0] == 'P' && (n < 3 || (name >= "P3" && s != Surface::Torus))) continue;
      tables.push_back(check_table(instantiate_family(name, s, n), true, unflagged));
    }
    tables.push_back(check_table(corrected_relations(s, n), true, unflagged));
  }
  // No oracle for the full braid groups; their relations are checked in the abelianization.
  for (Surface s : {Surface::Torus, Surface::Klein})
    for (int n = 2; n <= 4; ++n) {
      tables.push_back(check_table(instantiate_presentation(GroupKind::Full, s, n), false, unflagged));
      for (const auto& name : family_names())
        if (name[0] == 'R') tables.push_back(check_table(instantiate_family(name, s, n), false, unflagged));
    }
  Json banks = Json::array();
  bool banks_ok = true;
  for (ModelId id : {ModelId::G2T, ModelId::G2K, ModelId::G3T, ModelId::G4T}) {
    BankReport r = verify_equation_bank(id);
    banks_ok = banks_ok && r.passed();
    banks.push_back(to_json(r));
  }
  healthy = unflagged == 0 && banks_ok;
  return {{"healthy", healthy}, {"unflagged_failures", unflagged}, {"tables", std::move(tables)}, {"banks", std::move(banks)}};
}

std::vector<Word> parse_targets(const std::vector<std::string>& texts, ModelId model) {
  std::vector<Word> out;
  for (const auto& t : texts) out.push_back(parse_word(t, model));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw UsageError("--matrix: expected an array of rows");
  IntMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw UsageError("--matrix: expected an array of rows");
    std::vector<Integer> r;
    for (const auto& v : row) {
      if (v.is_number_integer())
        r.emplace_back(v.get<std::int64_t>());
      else if (v.is_string())
        r.emplace_back(v.get<std::string>());
      else
        throw UsageError("--matrix: entries must be integers");
    }
    m.push_back(std::move(r));
  }
  return m;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sigma^1 invariants of surface braid groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));

  GroupFlags gf;
  std::string char_text, cert_text, case_name, p_text = "1", q_text = "1", model_name, word_text, matrix_text;
  std::vector<int> perm;
  std::vector<std::string> targets;
  int radius = 6;

  auto* classify = app.add_subcommand("classify", "decide Sigma^1 membership of a character class");
  gf.attach(classify);
  classify->add_option("--char", char_text, "character as JSON, or @file");

  auto* enumerate = app.add_subcommand("enumerate", "list the circles and points of the complement");
  gf.attach(enumerate);

  auto* act = app.add_subcommand("act", "apply a strand permutation to a character class");
  gf.attach(act);
  act->add_option("--char", char_text, "character as JSON, or @file")->required();
  act->add_option("--perm", perm, "tau(1),...,tau(n)")->required()->delimiter(',');

  auto* vcert = app.add_subcommand("verify-cert", "check a path certificate against a character");
  vcert->add_option("--cert", cert_text, "certificate as JSON, or @file")->required();
  vcert->add_option("--char", char_text, "character as JSON, or @file")->required();

  auto* gcert = app.add_subcommand("gen-cert", "build a path certificate");
  gcert->add_option("--case", case_name, "torus3-a..d, torus4-a..b, descend-b1, ascend-bn")->required();
  gcert->add_option("--p", p_text, "positive rational");
  gcert->add_option("--q", q_text, "positive rational");
  std::string gsurface = "T";
  int gn = 3;
  gcert->add_option("--surface", gsurface, "T or K (descend-b1 / ascend-bn)")->check(CLI::IsMember({"T", "K"}));
  gcert->add_option("--n", gn, "strands (descend-b1 / ascend-bn)")->check(CLI::Range(2, 1 << 20));

  auto* ball = app.add_subcommand("ball", "bounded search of the chi-nonnegative subgraph");
  ball->add_option("--model", model_name, "G2T, G2K, G3T or G4T")->required()->check(CLI::IsMember({"G2T", "G2K", "G3T", "G4T"}));
  ball->add_option("--char", char_text, "values on model letters as JSON, or @file")->required();
  ball->add_option("--radius", radius, "ball radius")->check(CLI::Range(1, 64));
  ball->add_option("--target", targets, "target word (repeatable)");

  auto* vrel = app.add_subcommand("verify-relations", "check every shipped relation table and equation bank");

  auto* rinf = app.add_subcommand("r-infinity", "twisted-conjugacy certificate for P_n(K)");
  int rn = 2;
  rinf->add_option("--n", rn, "number of strands")->required()->check(CLI::Range(2, 64));
  auto* mopt = rinf->add_option("--matrix", matrix_text, "automorphism of Z^n as JSON rows (column j = image of b_j)");
  rinf->add_option("--perm", perm, "induced permutation of the complement points, 0-based")
      ->delimiter(',')
      ->excludes(mopt);

  auto* abel = app.add_subcommand("abelianize", "image of a word in the abelianization");
  gf.attach(abel);
  abel->add_option("--word", word_text, "word such as 'a1 b2^-1 C[1,2]'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  Json doc;
  int code = 0;
  try {
    if (classify->parsed()) {
      const GroupSpec g = gf.spec();
      require_sigma_support(g);
      if (char_text.empty()) {
        if (!sphere_empty(g)) throw UsageError("--char is required for " + describe(g));
        doc = to_json(decide_sigma(g));
      } else {
        doc = verdict_json(g, sphere_point(character_from_json(g, read_json("--char", char_text))));
      }
    } else if (enumerate->parsed()) {
      doc = to_json(enumerate_complement(gf.spec()));
    } else if (act->parsed()) {
      const GroupSpec g = gf.spec();
      const SpherePoint pt = sphere_point(character_from_json(g, read_json("--char", char_text)));
      const SpherePoint img = act_permutation(g, perm, pt);
      doc = {{"perm", perm}, {"before", verdict_json(g, pt)}, {"after", verdict_json(g, img)}};
    } else if (vcert->parsed()) {
      const PathCertificate cert = certificate_from_json(read_json("--cert", cert_text));
      const Json cj = read_json("--char", char_text);
      LetterWeights w;
      if (const auto* id = std::get_if<ModelId>(&cert.context))
        w = model_weights_from_json(*id, cj);
      else
        w = braid_weights(character_from_json(std::get<GroupSpec>(cert.context), cj));
      const CertificateReport rep = verify_certificate(cert, w);
      doc = to_json(rep);
      doc["name"] = cert.name;
      if (!rep.passed) code = 1;
    } else if (gcert->parsed()) {
      if (case_name == "descend-b1" || case_name == "ascend-bn") {
        doc = {{"certificate", to_json(generate_theorem_certificate(parse_theorem_case(case_name),
                                                                     parse_surface(gsurface), gn))}};
      } else {
        const GeneratedCertificate g =
            generate_lemma_certificate(parse_lemma_case(case_name), parse_rational(p_text), parse_rational(q_text));
        doc = {{"certificate", to_json(g.cert)},
               {"character", to_json(g.chi)},
               {"weights", to_json(g.weights)},
               {"report", to_json(verify_certificate(g.cert, g.weights))}};
      }
    } else if (ball->parsed()) {
      const ModelId model = parse_model(model_name);
      const LetterWeights w = model_weights_from_json(model, read_json("--char", char_text));
      doc = to_json(explore_ball(model, w, radius, parse_targets(targets, model)));
    } else if (vrel->parsed()) {
      bool healthy = false;
      doc = verify_relations(healthy);
      if (!healthy) code = 1;
    } else if (rinf->parsed()) {
      RInfinityInput input;
      if (!perm.empty()) {
        input = perm;
      } else if (!matrix_text.empty()) {
        input = matrix_from_json(read_json("--matrix", matrix_text));
      } else {
        IntMatrix id(static_cast<std::size_t>(rn), std::vector<Integer>(static_cast<std::size_t>(rn), 0));
        for (int k = 0; k < rn; ++k) id[k][k] = 1;
        input = id;
      }
      doc = to_json(r_infinity_certificate(rn, input));
    } else if (abel->parsed()) {
      const GroupSpec g = gf.spec();
      doc = to_json(abelianize(g, parse_word(word_text, g)), abelianization_spec(g));
      doc["word"] = word_text;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    err << "usage error: malformed JSON input (" << e.what() << ")\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (format == "table")
    render_table(doc, out);
  else
    out << doc.dump(2) << '\n';
  return code;
}

}  // namespace sbraid
