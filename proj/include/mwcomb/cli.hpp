#pragma once

#include <string>
#include <vector>

#include "mwcomb/params.hpp"

namespace mwcomb {

// Format, one declaration per line:
//   cuspidal <name> d=<int> eta=<+1|-1|?> chi=<+1|-1>
//   block <name> <a> <b> [x<mult>]
// Blank lines and '#' comments are ignored.
Parameter parse_parameter_file(const std::string& text);
Parameter load_parameter_file(const std::string& path);
std::string render_parameter(const Parameter& psi);

struct CliResult {
  int code = 0;  // 0 ok, 1 validation error, 2 identity failure
  std::string out;
  std::string err;
};

// args excludes the program name.
CliResult run(const std::vector<std::string>& args);

}  // namespace mwcomb
