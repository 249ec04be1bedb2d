#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "necollapse/evasiveness.hpp"

namespace nec::cli {

enum ExitCode : int {
  kOk = 0,          // success, verified, equal
  kNegative = 1,    // searched and absent, evasive, invalid, unequal
  kInputError = 2,  // malformed files or violated preconditions
  kBudget = 3,      // search budget exceeded
};

struct RunConfig {
  SearchBudget budget;
  std::string output;  // empty: standard output
  int verbosity = 0;
  std::uint64_t seed = 0;
  bool emit_collapse = false;
};

// Reads "NODES" or "VERTICES:NODES"; throws InputError when malformed.
SearchBudget parse_budget(const std::string& text, SearchBudget defaults = {});

// Entry point shared by the executable and the tests. Structured output goes
// to `out` (or the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nec::cli
