#pragma once

#include <optional>
#include <string>

#include "json_io.hpp"

namespace confemb::cli {

/// Every command returns a report {command, inputs, results, notes}; the
/// table format is rendered from the same object.
Json cmd_algebra(const std::string& type);
Json cmd_subalgebras(const std::string& type);
/// `spec` is "G/subalgebra" or an embedding id from the catalog.
Json cmd_levels(const std::string& spec, const std::optional<std::string>& catalog,
                const std::optional<std::string>& level);
Json cmd_chain(const std::string& spec, const std::optional<std::string>& level);
Json cmd_chains(const std::string& type, int depth, bool integrable);
Json cmd_critical(const std::optional<std::string>& catalog);
Json cmd_symmetric(const std::optional<std::string>& catalog, bool with_mutations);
/// The built-in catalog of the given kind as a catalog document.
Json cmd_catalog(const std::string& kind);

std::string render_table(const Json& report);

}  // namespace confemb::cli
