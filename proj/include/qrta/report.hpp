#pragma once

// Report rows behind the `grover`, `hhl` and `hhl-sweep` commands.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrta/grover.hpp"
#include "qrta/hhl.hpp"
#include "qrta/measures.hpp"

namespace qrta::report {

enum class Measure { coherence, discord, gm };

std::string_view to_string(Measure m);
Measure parse_measure(std::string_view name);
/// Comma-separated list, e.g. "coherence,gm".
std::vector<Measure> parse_measure_list(std::string_view list);

struct ReportRow {
  std::string state_label;
  Measure measure;
  std::string split;  // empty unless the measure depends on a bipartition
  double value;
  std::optional<std::string> exact_expr;
  std::optional<double> paper_value;
};

struct GroverRequest {
  grover::GroverConfig config;
  std::vector<Measure> measures{Measure::coherence, Measure::discord, Measure::gm};
};

/// One row per (psi_k, measure). Discord uses the split A|rest and is
/// skipped for a single qubit. The N = 8, target |111> instance
/// carries exact expressions and table values.
std::vector<ReportRow> grover_report(const GroverRequest& request, const OptimizerOptions& options = {});

/// GM of the three HHL stages: numeric optimum in `value`, closed-form
/// lemma value in `paper_value`.
std::vector<ReportRow> hhl_report(const hhl::HhlInput& input, const OptimizerOptions& options = {});

struct SweepRow {
  double b0;
  int stage;
  double gm_lemma;
  double gm_numeric;
};

/// b0 on a uniform grid of `steps` points in [0, 1], b1 = sqrt(1 - b0^2).
std::vector<SweepRow> hhl_sweep(int steps, const OptimizerOptions& options = {});

/// Closed-form GM per stage, as used for `paper_value` and `gm_lemma`.
double hhl_lemma_gm(const hhl::HhlInput& input, int stage);
/// Numeric GM per stage (general product ansatz).
double hhl_numeric_gm(const hhl::HhlInput& input, int stage, const OptimizerOptions& options = {});

/// 12 significant digits.
std::string format_value(double v);

inline constexpr std::string_view kCsvHeader = "state_label,measure,split,value,exact_expr,paper_value";
inline constexpr std::string_view kSweepHeader = "b0,stage,gm_lemma,gm_numeric";

std::string to_csv(std::span<const ReportRow> rows);
std::string to_json(std::span<const ReportRow> rows);
std::string sweep_to_csv(std::span<const SweepRow> rows);

}  // namespace qrta::report
