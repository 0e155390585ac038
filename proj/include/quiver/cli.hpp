#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quiver/kostant.hpp"

namespace quiver::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDisagreement = 2;

/// "2,3,2,3" -> (2,3,2,3); throws InvalidArgument on anything else.
DimensionVector parse_dimension_vector(const std::string& text);

/// Runs one command. args excludes the program name. Exactly one document
/// goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quiver::cli
