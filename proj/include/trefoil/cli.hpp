#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trefoil/scalar.hpp"

namespace trefoil {

/// A parameter value given on the command line, with its exact form when rational.
struct ParsedX {
  double value = 0;
  std::optional<Rational> exact;
  std::string text;
};

/// Accepts decimals, p/q, [-]sqrt(n)[/m] and cos(pi/n).
ParsedX parse_x(const std::string& text);

/// Exit codes: 0 success, 1 verification failure, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trefoil
