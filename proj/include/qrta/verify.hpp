#pragma once

// Self-check suites behind `qrta verify`.

#include <string>
#include <string_view>
#include <vector>

#include "qrta/measures.hpp"

namespace qrta::verify {

enum class Suite { tables, lemmas, oracles, invariants, all };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite s);

struct Check {
  std::string name;  // "<suite>/<what>"
  double expected;
  double got;
  double tolerance;
  bool passed;
  bool informational = false;  // reported, never fails the run
  std::string note;
};

struct Summary {
  std::vector<Check> checks;

  bool passed() const;
  std::size_t failures() const;
};

Summary run(Suite suite, const OptimizerOptions& options = {});

/// "PASS name expected=... got=... tol=... [note]", one line per check,
/// followed by a totals line.
std::string render(const Summary& summary);

}  // namespace qrta::verify
