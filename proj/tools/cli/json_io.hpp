#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "confemb/catalog.hpp"
#include "confemb/conformal.hpp"

namespace confemb::cli {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent catalog input (exit code 3).
class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Json to_json(const RationalVector& v);
Json to_json(const Weight& w);
Json to_json(const RationalMatrix& m);
Json to_json(const Polynomial& p);
Json to_json(const BranchingComponent& c);
Json to_json(const std::vector<BranchingComponent>& cs);
Json to_json(const ReductiveSubalgebra& k);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from(const Json& j);
RationalVector vector_from(const Json& j);
BranchingComponent component_from(const Json& j);
std::vector<BranchingComponent> components_from(const Json& j);

/// Regular subalgebras are rebuilt from their simple roots and center basis;
/// declared ones from ideal types and indices.
ReductiveSubalgebra subalgebra_from(const Json& j);

Json to_json(const DeclaredEmbedding& e);
Json to_json(const CriticalEntry& e);
Json to_json(const SymmetricPair& p);

DeclaredEmbedding embedding_from(const Json& j);
CriticalEntry critical_entry_from(const Json& j);
SymmetricPair symmetric_pair_from(const Json& j);

/// {"kind": ..., "entries": [...]} documents.
Json embeddings_catalog_json(const std::vector<DeclaredEmbedding>& es);
Json critical_catalog_json(const std::vector<CriticalEntry>& es);
Json symmetric_catalog_json(const std::vector<SymmetricPair>& ps);

std::vector<DeclaredEmbedding> load_embeddings_catalog(const Json& doc);
std::vector<CriticalEntry> load_critical_catalog(const Json& doc);
std::vector<SymmetricPair> load_symmetric_catalog(const Json& doc);

/// Reads and parses a JSON file; parse and I/O failures raise CatalogError.
Json read_json_file(const std::string& path);

}  // namespace confemb::cli
