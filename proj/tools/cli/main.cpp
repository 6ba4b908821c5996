#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMath = 2;
constexpr int kCatalog = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace confemb;
  using namespace confemb::cli;

  CLI::App app{"Conformal embeddings of affine vertex algebras: exact level and criterion checks"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  std::optional<std::string> catalog;
  std::optional<std::string> level;
  int depth = 2;

  std::string type;
  auto* algebra = app.add_subcommand("algebra", "Root-system invariants of a simple algebra");
  algebra->add_option("type", type, "Type such as E8, D4, sl3, so(9)")->required();

  auto* subalgebras = app.add_subcommand("subalgebras", "Maximal equal-rank subalgebras");
  subalgebras->add_option("type", type, "Simple algebra")->required();

  std::string spec;
  auto* levels = app.add_subcommand("levels", "Conformal levels by the AP criterion");
  levels->add_option("embedding", spec, "\"G/subalgebra\" (e.g. D4/sl3+u1+u1) or a catalog id")->required();
  levels->add_option("--catalog", catalog, "Embeddings catalog JSON");
  levels->add_option("--level", level, "Also check this level (p/q)");

  auto* chain = app.add_subcommand("chain", "Check a chain of equal-rank subalgebras");
  chain->add_option("chain", spec, "\"A2+u1+u1 < A3+u1 < D4\"")->required();
  chain->add_option("--level", level, "Check at this level (p/q); otherwise solve for levels");

  bool integrable = false;
  auto* chains = app.add_subcommand("chains", "Enumerate conformal chains");
  chains->add_option("type", type, "Simple algebra")->required();
  chains->add_option("--depth", depth, "Maximal chain depth")->check(CLI::Range(1, 8));
  chains->add_flag("--integrable", integrable, "Keep positive integer levels");

  auto* critical = app.add_subcommand("critical", "Critical-level scan");
  critical->add_option("--catalog", catalog, "Critical catalog JSON");

  bool with_mutations = false;
  auto* symmetric = app.add_subcommand("symmetric", "Central-charge identity for symmetric pairs");
  symmetric->add_option("--catalog", catalog, "Symmetric-pair catalog JSON");
  symmetric->add_flag("--mutations", with_mutations, "Also evaluate altered copies of each pair");

  std::string kind;
  auto* export_catalog = app.add_subcommand("catalog", "Print a built-in catalog as JSON");
  export_catalog->add_option("kind", kind, "embeddings, critical or symmetric")
      ->required()
      ->check(CLI::IsMember({"embeddings", "critical", "symmetric"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Json out;
    if (*algebra) out = cmd_algebra(type);
    else if (*subalgebras) out = cmd_subalgebras(type);
    else if (*levels) out = cmd_levels(spec, catalog, level);
    else if (*chain) out = cmd_chain(spec, level);
    else if (*chains) out = cmd_chains(type, depth, integrable);
    else if (*critical) out = cmd_critical(catalog);
    else if (*symmetric) out = cmd_symmetric(catalog, with_mutations);
    else if (*export_catalog) {
      std::cout << cmd_catalog(kind).dump(2) << '\n';
      return kOk;
    }
    if (format == "json") std::cout << out.dump(2) << '\n';
    else std::cout << render_table(out);
    return kOk;
  } catch (const CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << '\n';
    return kCatalog;
  } catch (const BranchingError& e) {
    std::cerr << "catalog error: " << e.what() << '\n';
    return kCatalog;
  } catch (const CriticalLevelError& e) {
    std::cerr << "critical level: " << e.what() << '\n';
    return kMath;
  } catch (const std::domain_error& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kMath;
  } catch (const std::overflow_error& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kMath;
  } catch (const std::logic_error& e) {
    // invalid_argument and out_of_range: malformed specs.
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  }
}
