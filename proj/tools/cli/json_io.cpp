#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace confemb::cli {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw CatalogError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw CatalogError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> strings_from(const Json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& s : j.at(key)) {
    if (!s.is_string()) throw CatalogError(std::string("'") + key + "' must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json strings_json(const std::vector<std::string>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

Root root_from(const Json& j) {
  if (!j.is_array()) throw CatalogError("root must be an array of integers");
  Root r;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw CatalogError("root must be an array of integers");
    r.push_back(x.get<int>());
  }
  return r;
}

SimpleLieType type_from(const Json& j) {
  try {
    return SimpleLieType::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw CatalogError(std::string("bad Lie type: ") + e.what());
  }
}

Branching branching_from(const ReductiveSubalgebra& k, const Json& j) {
  const std::string mode = string_field(j, "branching");
  auto comps = components_from(field(j, "components"));
  if (mode == "declared") {
    try {
      return declare_branching(k, std::move(comps));
    } catch (const BranchingError& e) {
      throw CatalogError(e.what());
    }
  }
  if (mode == "computed") {
    Branching b = orthocomplement_branching(k);
    if (b.components != comps) throw CatalogError("recorded components differ from the computed branching");
    return b;
  }
  throw CatalogError("branching must be 'computed' or 'declared'");
}

void check_kind(const Json& doc, const char* kind) {
  if (!doc.is_object() || !doc.contains("kind") || doc.at("kind") != kind)
    throw CatalogError(std::string("expected a catalog with kind '") + kind + "'");
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw CatalogError("catalog needs an 'entries' array");
}

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const CatalogError& e) {
    throw CatalogError(what + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CatalogError(what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json to_json(const Weight& w) { return to_json(w.coords); }

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const Polynomial& p) { return p.to_string("k"); }

Json to_json(const BranchingComponent& c) {
  Json w = Json::array();
  for (const auto& x : c.ideal_weights) w.push_back(to_json(x));
  return Json{{"weights", w}, {"center", to_json(c.center_weight)}, {"multiplicity", c.multiplicity}};
}

Json to_json(const std::vector<BranchingComponent>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

Json to_json(const ReductiveSubalgebra& k) {
  Json ideals = Json::array();
  for (const auto& I : k.ideals) {
    Json item{{"type", I.type.name()}, {"index", to_json(I.index)}};
    if (!I.simple_roots.empty()) {
      Json roots = Json::array();
      for (const auto& r : I.simple_roots) roots.push_back(r);
      item["simple_roots"] = roots;
    }
    ideals.push_back(item);
  }
  Json basis = Json::array();
  for (const auto& z : k.center_basis) basis.push_back(to_json(z));
  return Json{{"ambient", k.ambient->type().name()},
              {"name", k.name},
              {"type_key", k.type_key()},
              {"regular", k.regular()},
              {"ideals", ideals},
              {"center_dim", k.center_dim},
              {"center_basis", basis},
              {"center_form", to_json(k.center_form)}};
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw CatalogError("rational must be a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw CatalogError("bad rational '" + j.get<std::string>() + "'");
  }
}

RationalVector vector_from(const Json& j) {
  if (!j.is_array()) throw CatalogError("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

BranchingComponent component_from(const Json& j) {
  BranchingComponent c;
  for (const auto& w : field(j, "weights")) c.ideal_weights.emplace_back(vector_from(w));
  if (j.contains("center")) c.center_weight = vector_from(j.at("center"));
  if (j.contains("multiplicity")) {
    if (!j.at("multiplicity").is_number_integer()) throw CatalogError("multiplicity must be an integer");
    c.multiplicity = j.at("multiplicity").get<int>();
  }
  return c;
}

std::vector<BranchingComponent> components_from(const Json& j) {
  if (!j.is_array()) throw CatalogError("components must be an array");
  std::vector<BranchingComponent> out;
  for (const auto& c : j) out.push_back(component_from(c));
  return out;
}

ReductiveSubalgebra subalgebra_from(const Json& j) {
  const auto g = shared_root_system(type_from(field(j, "ambient")));
  const Json& ideals = field(j, "ideals");
  const int center_dim = j.value("center_dim", 0);
  const bool regular = j.value("regular", false);
  ReductiveSubalgebra k;
  if (regular) {
    std::vector<Root> roots;
    for (const auto& I : ideals)
      for (const auto& r : field(I, "simple_roots")) roots.push_back(root_from(r));
    std::vector<RationalVector> basis;
    if (j.contains("center_basis"))
      for (const auto& z : j.at("center_basis")) basis.push_back(vector_from(z));
    if (static_cast<int>(basis.size()) != center_dim) throw CatalogError("center_basis must have center_dim vectors");
    k = regular_subalgebra(g, roots, basis, false);
    if (ideals.size() != k.ideals.size()) throw CatalogError("recorded ideals do not match the root data");
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (type_from(field(ideals[i], "type")) != k.ideals[i].type ||
          rational_from(field(ideals[i], "index")) != k.ideals[i].index)
        throw CatalogError("recorded ideal " + std::to_string(i) + " does not match the root data");
    }
    if (j.contains("center_form") && vector_from(j.at("center_form")) != k.center_form)
      throw CatalogError("recorded center_form differs from the center basis");
  } else {
    k.ambient = g;
    for (const auto& I : ideals) k.ideals.push_back(make_declared_ideal(type_from(field(I, "type")), rational_from(field(I, "index"))));
    k.center_dim = center_dim;
    if (center_dim > 0) {
      k.center_form = vector_from(field(j, "center_form"));
      if (static_cast<int>(k.center_form.size()) != center_dim) throw CatalogError("center_form must have center_dim entries");
      for (const auto& x : k.center_form)
        if (sgn(x) <= 0) throw CatalogError("center_form entries must be positive");
    }
  }
  k.name = j.value("name", std::string());
  return k;
}

Json to_json(const DeclaredEmbedding& e) {
  return Json{{"id", e.id},
              {"description", e.description},
              {"subalgebra", to_json(e.subalgebra)},
              {"branching", e.branching.source == BranchingSource::declared ? "declared" : "computed"},
              {"components", to_json(e.branching.components)},
              {"notes", strings_json(e.notes)}};
}

Json to_json(const CriticalEntry& e) {
  Json out{{"id", e.id},
           {"description", e.description},
           {"subalgebra", to_json(e.subalgebra)},
           {"branching", e.branching.source == BranchingSource::declared ? "declared" : "computed"},
           {"components", to_json(e.branching.components)},
           {"stated_level", e.stated_level ? to_json(*e.stated_level) : Json(nullptr)},
           {"printed_lambda", e.printed_lambda ? to_json(*e.printed_lambda) : Json(nullptr)},
           {"notes", strings_json(e.notes)}};
  return out;
}

Json to_json(const SymmetricPair& p) {
  Json simple = Json::array();
  for (const auto& t : p.simple) simple.push_back(t.name());
  return Json{{"name", p.name},
              {"family", p.family},
              {"simple", simple},
              {"abelian_dim", p.abelian_dim},
              {"dim_r", p.dim_r},
              {"isotropy", to_json(p.isotropy)},
              {"so_complement", p.so_complement ? to_json(*p.so_complement) : Json(nullptr)}};
}

DeclaredEmbedding embedding_from(const Json& j) {
  DeclaredEmbedding e;
  e.id = string_field(j, "id");
  return guarded("embedding '" + e.id + "'", [&] {
    e.description = j.value("description", std::string());
    e.subalgebra = subalgebra_from(field(j, "subalgebra"));
    e.branching = branching_from(e.subalgebra, j);
    e.notes = strings_from(j, "notes");
    return e;
  });
}

CriticalEntry critical_entry_from(const Json& j) {
  CriticalEntry e;
  e.id = string_field(j, "id");
  return guarded("critical entry '" + e.id + "'", [&] {
    e.description = j.value("description", std::string());
    e.subalgebra = subalgebra_from(field(j, "subalgebra"));
    e.branching = branching_from(e.subalgebra, j);
    if (j.contains("stated_level") && !j.at("stated_level").is_null()) e.stated_level = rational_from(j.at("stated_level"));
    if (j.contains("printed_lambda") && !j.at("printed_lambda").is_null()) {
      std::vector<RationalVector> rows;
      for (const auto& r : j.at("printed_lambda")) rows.push_back(vector_from(r));
      for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw CatalogError("printed_lambda rows differ in length");
      e.printed_lambda = RationalMatrix(rows);
    }
    e.notes = strings_from(j, "notes");
    return e;
  });
}

SymmetricPair symmetric_pair_from(const Json& j) {
  SymmetricPair p;
  p.name = string_field(j, "name");
  return guarded("symmetric pair '" + p.name + "'", [&] {
    p.family = j.value("family", std::string());
    for (const auto& t : field(j, "simple")) p.simple.push_back(type_from(t));
    p.abelian_dim = j.value("abelian_dim", 0);
    if (!field(j, "dim_r").is_number_integer()) throw CatalogError("dim_r must be an integer");
    p.dim_r = j.at("dim_r").get<std::int64_t>();
    p.isotropy = components_from(field(j, "isotropy"));
    if (j.contains("so_complement") && !j.at("so_complement").is_null())
      p.so_complement = components_from(j.at("so_complement"));
    const std::int64_t dim_v = isotropy_dimension(p);
    if (k_dimension(p) + dim_v != p.dim_r)
      throw CatalogError("dim k + dim V = " + std::to_string(k_dimension(p) + dim_v) + " but dim_r = " +
                         std::to_string(p.dim_r));
    return p;
  });
}

Json embeddings_catalog_json(const std::vector<DeclaredEmbedding>& es) {
  Json entries = Json::array();
  for (const auto& e : es) entries.push_back(to_json(e));
  return Json{{"kind", "embeddings"}, {"entries", entries}};
}

Json critical_catalog_json(const std::vector<CriticalEntry>& es) {
  Json entries = Json::array();
  for (const auto& e : es) entries.push_back(to_json(e));
  return Json{{"kind", "critical"}, {"entries", entries}};
}

Json symmetric_catalog_json(const std::vector<SymmetricPair>& ps) {
  Json entries = Json::array();
  for (const auto& p : ps) entries.push_back(to_json(p));
  return Json{{"kind", "symmetric"}, {"entries", entries}};
}

std::vector<DeclaredEmbedding> load_embeddings_catalog(const Json& doc) {
  check_kind(doc, "embeddings");
  std::vector<DeclaredEmbedding> out;
  for (const auto& e : doc.at("entries")) out.push_back(embedding_from(e));
  return out;
}

std::vector<CriticalEntry> load_critical_catalog(const Json& doc) {
  check_kind(doc, "critical");
  std::vector<CriticalEntry> out;
  for (const auto& e : doc.at("entries")) out.push_back(critical_entry_from(e));
  return out;
}

std::vector<SymmetricPair> load_symmetric_catalog(const Json& doc) {
  check_kind(doc, "symmetric");
  std::vector<SymmetricPair> out;
  for (const auto& e : doc.at("entries")) out.push_back(symmetric_pair_from(e));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw CatalogError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace confemb::cli
