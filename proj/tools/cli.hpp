#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "hsober/power.hpp"
#include "hsober/space.hpp"

namespace hsober::cli {

/// Parses argv and runs one subcommand. Exit status: 0 success, 1 property
/// violation, 2 parse or usage error, 3 cap exceeded. Diagnostics go to
/// `err` as one JSON object.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Hasse diagram. When `legend` is given (a carrier labeling array of
/// {label, members}) a table node lists what each carrier point stands for.
std::string to_dot(const FiniteSpace& X, const std::string& name,
                   const std::optional<nlohmann::json>& legend = std::nullopt);

/// Loads a space from a JSON file, or a built-in name when no such file exists.
FiniteSpace load_space(const std::string& source);

}  // namespace hsober::cli
