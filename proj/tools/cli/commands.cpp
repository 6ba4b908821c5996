#include "commands.hpp"

#include <algorithm>
#include <sstream>

#include "confemb/critical.hpp"
#include "confemb/symmetric.hpp"

namespace confemb::cli {

namespace {

Json report(const std::string& command, Json inputs, Json results, Json notes = Json::array()) {
  return Json{{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"notes", std::move(notes)}};
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json int_matrix(const std::vector<std::vector<int>>& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json summary(const ReductiveSubalgebra& k) {
  Json ideals = Json::array();
  for (const auto& I : k.ideals) ideals.push_back(Json{{"type", I.type.name()}, {"index", to_string(I.index)}});
  return Json{{"ambient", k.ambient->type().name()},
              {"type_key", k.type_key()},
              {"name", k.name},
              {"dimension", k.dimension()},
              {"ideals", ideals},
              {"center_dim", k.center_dim}};
}

std::string weights_label(const BranchingComponent& c) {
  std::string s;
  auto vec = [](const RationalVector& v) {
    std::string t = "(";
    for (std::size_t i = 0; i < v.size(); ++i) t += (i ? "," : "") + to_string(v[i]);
    return t + ")";
  };
  for (std::size_t i = 0; i < c.ideal_weights.size(); ++i) s += (i ? " x " : "") + vec(c.ideal_weights[i].coords);
  if (!c.center_weight.empty()) s += (s.empty() ? "" : " ; ") + vec(c.center_weight);
  if (c.multiplicity != 1) s += " *" + std::to_string(c.multiplicity);
  return s.empty() ? "trivial" : s;
}

std::vector<DeclaredEmbedding> embeddings(const std::optional<std::string>& catalog) {
  if (catalog) return load_embeddings_catalog(read_json_file(*catalog));
  return builtin_embeddings();
}

Json component_rows(const ReductiveSubalgebra& k, const Branching& b, const std::vector<Rational>& levels) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < b.components.size(); ++i) {
    Json at = Json::array();
    for (const auto& l : levels) {
      const ApTerms t = ap_terms(k, b, i, l);
      at.push_back(Json{{"level", to_string(l)},
                        {"ideal_terms", rationals(t.ideal_terms)},
                        {"center_term", to_string(t.center_term)},
                        {"value", to_string(t.total())}});
    }
    rows.push_back(Json{{"component", to_json(b.components[i])},
                        {"label", weights_label(b.components[i])},
                        {"polynomial", ap_polynomial(k, b, i).to_string("k")},
                        {"at_levels", at}});
  }
  return rows;
}

// Fixed-width text table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string str() const {
    std::vector<std::size_t> w(header.size(), 0);
    for (std::size_t i = 0; i < header.size(); ++i) w[i] = header[i].size();
    for (const auto& r : rows)
      for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const std::string cell = i < r.size() ? r[i] : "";
        s += cell;
        if (i + 1 < w.size()) s += std::string(w[i] - cell.size() + 2, ' ');
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out << s << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (auto x : w) rule.emplace_back(x, '-');
    line(rule);
    for (const auto& r : rows) line(r);
    return out.str();
  }
};

std::string join(const Json& arr, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += sep;
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s;
}

std::string set_str(const Json& arr) { return "{" + join(arr) + "}"; }

std::string matrix_str(const Json& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "; " : "") + join(m[i], " ");
  return "[" + s + "]";
}

std::string render_algebra(const Json& r) {
  const Json& x = r["results"];
  std::ostringstream out;
  out << "type            " << x["type"].get<std::string>() << '\n'
      << "rank            " << x["rank"] << '\n'
      << "dimension       " << x["dimension"] << '\n'
      << "roots           " << x["roots"] << '\n'
      << "positive roots  " << x["positive_roots"] << '\n'
      << "dual Coxeter    " << x["dual_coxeter"] << '\n'
      << "marks           " << join(x["marks"], " ") << '\n'
      << "highest root    " << join(x["highest_root"], " ") << '\n'
      << "Cartan matrix   " << matrix_str(x["cartan"]) << '\n';
  return out.str();
}

std::string render_subalgebras(const Json& r) {
  Table t{{"deleted", "kind", "subalgebra", "dim", "orbit", "p components", "dim p"}, {}};
  for (const auto& s : r["results"]["subalgebras"])
    t.rows.push_back({join(s["deleted_nodes"], " "), s["kind"].get<std::string>(), s["type_key"].get<std::string>(),
                      s["dimension"].dump(), s["orbit_size"].dump(), s["p_components"].dump(), s["p_dimension"].dump()});
  return "maximal equal-rank subalgebras of " + r["inputs"]["type"].get<std::string>() + "\n" + t.str();
}

std::string render_levels(const Json& r) {
  const Json& x = r["results"];
  std::ostringstream out;
  out << "embedding          " << x["embedding"]["type_key"].get<std::string>() << " in "
      << x["embedding"]["ambient"].get<std::string>() << '\n';
  if (x.contains("chain")) out << "chain              " << x["chain"].get<std::string>() << '\n';
  out << "conformal levels   " << set_str(x["levels"]) << '\n'
      << "non-integrable     " << set_str(x["non_integrable_levels"]) << '\n'
      << "excluded           " << set_str(x["excluded_levels"]) << '\n'
      << "suppressed         " << set_str(x["suppressed_levels"]) << '\n'
      << "common factor      " << x["common_factor"].get<std::string>() << '\n';
  Table t{{"component", "AP numerator"}, {}};
  for (const auto& c : x["components"]) {
    std::vector<std::string> row{c["label"].get<std::string>(), c["polynomial"].get<std::string>()};
    t.rows.push_back(row);
  }
  out << t.str();
  if (!x["components"].empty() && !x["components"][0]["at_levels"].empty()) {
    Table v{{"component"}, {}};
    for (const auto& l : x["components"][0]["at_levels"]) v.header.push_back("k=" + l["level"].get<std::string>());
    for (const auto& c : x["components"]) {
      std::vector<std::string> row{c["label"].get<std::string>()};
      for (const auto& l : c["at_levels"]) {
        std::string cell = join(l["ideal_terms"], " + ");
        if (l["center_term"] != "0") cell += (cell.empty() ? "" : " + ") + ("(" + l["center_term"].get<std::string>() + ")");
        row.push_back(cell + " = " + l["value"].get<std::string>());
      }
      v.rows.push_back(row);
    }
    out << v.str();
  }
  if (x.contains("check")) {
    const Json& c = x["check"];
    out << "at k = " << c["level"].get<std::string>() << ": " << (c["conformal"].get<bool>() ? "conformal" : "not conformal")
        << ", residuals " << set_str(c["residuals"]) << '\n';
  }
  return out.str();
}

std::string render_chain(const Json& r) {
  const Json& x = r["results"];
  std::ostringstream out;
  out << "chain   " << x["chain"].get<std::string>() << '\n';
  if (x.contains("level")) {
    Table t{{"step", "replaced", "c", "replacing", "c", "equal"}, {}};
    for (const auto& s : x["steps"])
      t.rows.push_back({s["step"].dump(), s["replaced"].get<std::string>(), s["replaced_charge"].get<std::string>(),
                        s["replacing"].get<std::string>(), s["replacing_charge"].get<std::string>(),
                        s["equal"].get<bool>() ? "yes" : "no"});
    out << "level   " << x["level"].get<std::string>() << " : " << (x["conformal"].get<bool>() ? "conformal" : "not conformal")
        << '\n'
        << t.str();
  } else {
    Table t{{"step", "levels"}, {}};
    for (const auto& s : x["steps"]) t.rows.push_back({s["step"].dump(), set_str(s["levels"])});
    out << "levels  " << set_str(x["levels"]) << '\n' << t.str();
  }
  return out.str();
}

std::string render_chains(const Json& r) {
  Table t{{"depth", "level", "chain"}, {}};
  for (const auto& c : r["results"]["chains"])
    t.rows.push_back({c["depth"].dump(), c["level"].get<std::string>(), c["chain"].get<std::string>()});
  return t.str();
}

std::string render_critical(const Json& r) {
  std::ostringstream out;
  Table t{{"case", "level", "lambda", "kernel", "verdict"}, {}};
  for (const auto& c : r["results"]["cases"]) {
    std::string kernel;
    for (std::size_t i = 0; i < c["kernel"].size(); ++i) kernel += (i ? " " : "") + ("(" + join(c["kernel"][i], ",") + ")");
    t.rows.push_back({c["case"].get<std::string>(), c["level"].is_null() ? "none" : c["level"].get<std::string>(),
                      c["lambda"].empty() ? "-" : matrix_str(c["lambda"]), kernel.empty() ? "0" : kernel,
                      c["verdict"].get<std::string>()});
  }
  out << t.str();
  for (const auto& c : r["results"]["cases"]) {
    if (c["printed_differs"].get<bool>())
      out << c["case"].get<std::string>() << ": printed " << matrix_str(c["printed_lambda"]) << " vs derived "
          << matrix_str(c["lambda"]) << '\n';
  }
  return out.str();
}

std::string render_symmetric(const Json& r) {
  Table t{{"pair", "dim r", "dim k", "dim V", "indices", "residual", "level-one AP"}, {}};
  for (const auto& p : r["results"]["pairs"]) {
    std::string ap = p["level_one_ap"].is_null() ? "-" : (p["level_one_ap"].get<bool>() ? "conformal" : "not conformal");
    t.rows.push_back({p["name"].get<std::string>(), p["dim_r"].dump(), p["dim_k"].dump(), p["dim_v"].dump(),
                      join(p["indices"], " "), p["residual"].get<std::string>(), ap});
    if (p.contains("mutations"))
      for (const auto& m : p["mutations"])
        t.rows.push_back({"  " + m["kind"].get<std::string>(), "", "", "", "", m["residual"].get<std::string>(), ""});
  }
  return t.str();
}

}  // namespace

Json cmd_algebra(const std::string& type) {
  const auto rs = shared_root_system(SimpleLieType::parse(type));
  Json marks = Json::array();
  for (int m : rs->marks()) marks.push_back(m);
  return report("algebra", Json{{"type", type}},
                Json{{"type", rs->type().name()},
                     {"rank", rs->rank()},
                     {"dimension", rs->dimension()},
                     {"roots", rs->roots().size()},
                     {"positive_roots", rs->positive_roots().size()},
                     {"dual_coxeter", dual_coxeter(*rs)},
                     {"marks", marks},
                     {"highest_root", rs->theta()},
                     {"cartan", int_matrix(rs->cartan())}});
}

Json cmd_subalgebras(const std::string& type) {
  const auto rs = shared_root_system(SimpleLieType::parse(type));
  Json list = Json::array();
  for (const auto& m : borel_de_siebenthal(rs)) {
    const Branching b = orthocomplement_branching(m.subalgebra);
    std::int64_t dim_p = 0;
    for (const auto& c : b.components) dim_p += component_dimension(m.subalgebra, c);
    list.push_back(Json{{"deleted_nodes", m.deleted_nodes},
                        {"kind", m.deleted_nodes.size() == 2 ? "levi" : "prime"},
                        {"type_key", m.subalgebra.type_key()},
                        {"display", m.subalgebra.display_name()},
                        {"dimension", m.subalgebra.dimension()},
                        {"orbit_size", m.orbit_size},
                        {"p_components", b.components.size()},
                        {"p_dimension", dim_p}});
  }
  return report("subalgebras", Json{{"type", type}}, Json{{"ambient", rs->type().name()}, {"subalgebras", list}});
}

Json cmd_levels(const std::string& spec, const std::optional<std::string>& catalog,
                const std::optional<std::string>& level) {
  ReductiveSubalgebra k;
  Branching b;
  std::optional<std::string> chain;
  Json notes = Json::array();
  if (spec.find('/') != std::string::npos) {
    const Chain c = resolve_subalgebra(spec);
    k = c.bottom();
    b = orthocomplement_branching(k);
    chain = c.to_string();
  } else {
    const auto es = embeddings(catalog);
    auto it = std::find_if(es.begin(), es.end(), [&](const DeclaredEmbedding& e) { return e.id == spec; });
    if (it == es.end()) throw std::invalid_argument("no embedding '" + spec + "' in the catalog");
    k = it->subalgebra;
    b = it->branching;
    for (const auto& n : it->notes) notes.push_back(n);
  }
  const ConformalVerdict v = conformal_levels(k, b);
  Json results{{"embedding", summary(k)}};
  if (chain) results["chain"] = *chain;
  Json polys = Json::array();
  for (const auto& p : v.component_polynomials) polys.push_back(p.to_string("k"));
  results["levels"] = rationals(v.levels);
  results["non_integrable_levels"] = rationals(v.non_integrable_levels());
  results["excluded_levels"] = rationals(v.excluded_levels);
  results["suppressed_levels"] = rationals(v.suppressed_levels);
  results["common_factor"] = v.common_factor.to_string("k");
  results["irrational_factor"] = v.irrational_factor.to_string("k");
  results["components"] = component_rows(k, b, v.levels);
  Json inputs{{"spec", spec}};
  if (catalog) inputs["catalog"] = *catalog;
  if (level) {
    const Rational l = parse_rational(*level);
    inputs["level"] = to_string(l);
    const ApCheck c = ap_check(k, b, l);
    results["check"] = Json{{"level", to_string(l)}, {"conformal", c.conformal}, {"residuals", rationals(c.residuals)}};
  }
  return report("levels", inputs, results, notes);
}

Json cmd_chain(const std::string& spec, const std::optional<std::string>& level) {
  const Chain c = parse_chain(spec);
  Json inputs{{"spec", spec}};
  Json results{{"chain", c.to_string()}};
  if (level) {
    const Rational l = parse_rational(*level);
    inputs["level"] = to_string(l);
    const ChainCheck check = chain_conformal_check(c, l);
    Json steps = Json::array();
    for (const auto& s : check.steps)
      steps.push_back(Json{{"step", s.step},
                           {"replaced", s.replaced},
                           {"replacing", s.replacing},
                           {"replaced_charge", to_string(s.replaced_charge)},
                           {"replacing_charge", to_string(s.replacing_charge)},
                           {"equal", s.equal}});
    results["level"] = to_string(l);
    results["conformal"] = check.conformal;
    results["steps"] = steps;
  } else {
    Json steps = Json::array();
    for (std::size_t s = 1; s <= c.depth(); ++s)
      steps.push_back(Json{{"step", s}, {"levels", rationals(chain_step_levels(c, s))}});
    results["levels"] = rationals(chain_levels(c));
    results["steps"] = steps;
  }
  return report("chain", inputs, results);
}

Json cmd_chains(const std::string& type, int depth, bool integrable) {
  const auto rs = shared_root_system(SimpleLieType::parse(type));
  Json list = Json::array();
  for (const auto& cl : enumerate_conformal_chains(rs, depth, integrable))
    list.push_back(Json{{"depth", cl.chain.depth()}, {"level", to_string(cl.level)}, {"chain", cl.chain.to_string()}});
  return report("chains", Json{{"type", type}, {"depth", depth}, {"include_integrable", integrable}},
                Json{{"ambient", rs->type().name()}, {"chains", list}});
}

Json cmd_critical(const std::optional<std::string>& catalog) {
  const auto entries = catalog ? load_critical_catalog(read_json_file(*catalog)) : builtin_critical_catalog();
  Json cases = Json::array();
  Json notes = Json::array();
  for (const auto& c : critical_scan(entries)) {
    Json kernel = Json::array();
    for (const auto& z : c.kernel) kernel.push_back(to_json(z));
    cases.push_back(Json{{"case", c.id},
                         {"description", c.description},
                         {"level", c.level ? to_json(*c.level) : Json(nullptr)},
                         {"lambda", c.level ? to_json(c.lambda) : Json::array()},
                         {"kernel", kernel},
                         {"verdict", to_string(c.verdict)},
                         {"printed_lambda", c.printed_lambda ? to_json(*c.printed_lambda) : Json(nullptr)},
                         {"printed_differs", c.printed_differs},
                         {"notes", c.notes}});
    if (c.printed_differs) notes.push_back(c.id + ": printed lambda differs from the derived Casimir values");
  }
  Json inputs = Json::object();
  if (catalog) inputs["catalog"] = *catalog;
  return report("critical", inputs, Json{{"cases", cases}}, notes);
}

Json cmd_symmetric(const std::optional<std::string>& catalog, bool with_mutations) {
  const auto pairs = catalog ? load_symmetric_catalog(read_json_file(*catalog)) : builtin_symmetric_catalog();
  Json list = Json::array();
  Json notes = Json::array();
  for (const auto& p : pairs) {
    Json indices = Json::array();
    for (std::size_t j = 0; j < p.simple.size(); ++j) indices.push_back(to_string(isotropy_index(p, j)));
    const Rational residual = sst_identity_check(p);
    Json item{{"name", p.name},
              {"family", p.family},
              {"dim_r", p.dim_r},
              {"dim_k", k_dimension(p)},
              {"dim_v", isotropy_dimension(p)},
              {"indices", indices},
              {"residual", to_string(residual)},
              {"identity_holds", sgn(residual) == 0},
              {"level_one_ap", p.so_complement ? Json(sst_level_one_ap(p, *p.so_complement)) : Json(nullptr)}};
    if (sgn(residual) != 0) notes.push_back(p.name + ": nonzero residual " + to_string(residual));
    if (with_mutations) {
      Json muts = Json::array();
      for (const auto& [kind, m] : mutations(p))
        muts.push_back(Json{{"kind", kind}, {"residual", to_string(sst_identity_check(m))}});
      item["mutations"] = muts;
    }
    list.push_back(item);
  }
  Json inputs{{"mutations", with_mutations}};
  if (catalog) inputs["catalog"] = *catalog;
  return report("symmetric", inputs, Json{{"pairs", list}}, notes);
}

Json cmd_catalog(const std::string& kind) {
  if (kind == "embeddings") return embeddings_catalog_json(builtin_embeddings());
  if (kind == "critical") return critical_catalog_json(builtin_critical_catalog());
  if (kind == "symmetric") return symmetric_catalog_json(builtin_symmetric_catalog());
  throw std::invalid_argument("catalog kind must be embeddings, critical or symmetric");
}

std::string render_table(const Json& r) {
  const std::string cmd = r["command"].get<std::string>();
  std::string body;
  if (cmd == "algebra") body = render_algebra(r);
  else if (cmd == "subalgebras") body = render_subalgebras(r);
  else if (cmd == "levels") body = render_levels(r);
  else if (cmd == "chain") body = render_chain(r);
  else if (cmd == "chains") body = render_chains(r);
  else if (cmd == "critical") body = render_critical(r);
  else if (cmd == "symmetric") body = render_symmetric(r);
  else body = r.dump(2) + "\n";
  for (const auto& n : r["notes"]) body += "note: " + n.get<std::string>() + "\n";
  return body;
}

}  // namespace confemb::cli
