#include "qrta/report.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "qrta/error.hpp"

namespace qrta::report {

namespace {

struct ReferenceCell {
  const char* expr;
  double value;
};

// Reference values for N = 8, target |111>; index k-1 for psi_k.
constexpr std::array<ReferenceCell, 4> kCoherenceTable{{
    {"sqrt(14)/4", 0.95},
    {"7*sqrt(2)/16", 0.62},
    {"7*sqrt(2)/16", 0.62},
    {"sqrt(434)/64", 0.33},
}};
constexpr std::array<ReferenceCell, 4> kDiscordTable{{
    {"h2(1/4)", 0.81},
    {"h2((4+sqrt(13))/8)", 0.28},
    {"h2((8+sqrt(37))/16)", 0.52},
    {"h2((16+sqrt(229))/32)", 0.17},
}};
constexpr std::array<double, 4> kGmTable{0.56, 0.11, 0.24, 0.05};

bool is_reference_instance(const grover::GroverConfig& c) { return c.n_qubits == 3 && c.target == 7; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

double rounded(double v) { return std::stod(format_value(v)); }

}  // namespace

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::coherence: return "coherence";
    case Measure::discord: return "discord";
    case Measure::gm: return "gm";
  }
  return "";
}

Measure parse_measure(std::string_view name) {
  if (name == "coherence") return Measure::coherence;
  if (name == "discord") return Measure::discord;
  if (name == "gm") return Measure::gm;
  fail(ErrorCode::invalid_argument, "unknown measure '" + std::string(name) + "'");
}

std::vector<Measure> parse_measure_list(std::string_view list) {
  std::vector<Measure> out;
  while (true) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    if (!item.empty()) {
      const Measure m = parse_measure(item);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (out.empty()) fail(ErrorCode::invalid_argument, "empty measure list");
  return out;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::vector<ReportRow> grover_report(const GroverRequest& request, const OptimizerOptions& options) {
  const auto trace = grover::trace_states(request.config);
  const int n = request.config.n_qubits;
  const bool reference = is_reference_instance(request.config);
  std::vector<ReportRow> rows;

  for (std::size_t i = 1; i < trace.states.size(); ++i) {
    const auto& [label, psi] = trace.states[i];
    const std::size_t cell = i - 1;
    const bool tabulated = reference && cell < kGmTable.size();
    const auto rho = outer(psi);
    for (const Measure m : request.measures) {
      ReportRow row{label, m, "", 0.0, std::nullopt, std::nullopt};
      switch (m) {
        case Measure::coherence:
          row.value = coherence_frobenius(rho);
          if (tabulated) {
            row.exact_expr = kCoherenceTable[cell].expr;
            row.paper_value = kCoherenceTable[cell].value;
          }
          break;
        case Measure::discord: {
          if (n < 2) continue;
          const Bipartition split(n, {0});
          row.split = split.label();
          row.value = discord(rho, split, options);
          if (tabulated) {
            row.exact_expr = kDiscordTable[cell].expr;
            row.paper_value = kDiscordTable[cell].value;
          }
          break;
        }
        case Measure::gm:
          row.value = gm(psi, options);
          if (tabulated) row.paper_value = kGmTable[cell];
          break;
      }
      if (!std::isfinite(row.value)) fail(ErrorCode::internal, "report: non-finite value for " + label);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double hhl_lemma_gm(const hhl::HhlInput& input, int stage) {
  switch (stage) {
    case 1: return hhl::stage1_gm_closed_form(input);
    case 2: return hhl::stage2_single_angle_bound(hhl::stage2_params(input)).gm;
    case 3: return hhl::stage3_gm_closed_form(hhl::stage3_params(input));
  }
  fail(ErrorCode::invalid_argument, "hhl: stage must be 1, 2 or 3");
}

double hhl_numeric_gm(const hhl::HhlInput& input, int stage, const OptimizerOptions& options) {
  switch (stage) {
    case 1: return gm(hhl::stage1_state(input), options);
    case 2: return gm(hhl::stage2_state(hhl::stage2_params(input)), options);
    case 3: return gm(hhl::stage3_state(hhl::stage3_params(input)), options);
  }
  fail(ErrorCode::invalid_argument, "hhl: stage must be 1, 2 or 3");
}

std::vector<ReportRow> hhl_report(const hhl::HhlInput& input, const OptimizerOptions& options) {
  static constexpr std::array<const char*, 3> kExpr{
      "-log2(max{(b0-b1)^2/2,(b0+b1)^2/2})",
      "-log2(max_alpha a*cos^6+b*cos^3*sin^3+c*sin^6)",
      "-log2(max{q,1-q})",
  };
  std::vector<ReportRow> rows;
  for (int stage = 1; stage <= 3; ++stage) {
    rows.push_back({"hhl_rho" + std::to_string(stage), Measure::gm, "", hhl_numeric_gm(input, stage, options),
                    kExpr[stage - 1], hhl_lemma_gm(input, stage)});
  }
  return rows;
}

std::vector<SweepRow> hhl_sweep(int steps, const OptimizerOptions& options) {
  if (steps < 2) fail(ErrorCode::invalid_argument, "sweep: steps must be >= 2");
  std::vector<SweepRow> rows;
  for (int k = 0; k < steps; ++k) {
    const double b0 = static_cast<double>(k) / (steps - 1);
    const auto input = hhl::HhlInput::from_b0(b0);
    for (int stage = 1; stage <= 3; ++stage)
      rows.push_back({b0, stage, hhl_lemma_gm(input, stage), hhl_numeric_gm(input, stage, options)});
  }
  return rows;
}

std::string to_csv(std::span<const ReportRow> rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += csv_field(r.state_label) + ',' + std::string(to_string(r.measure)) + ',' + csv_field(r.split) + ',' +
           format_value(r.value) + ',' + csv_field(r.exact_expr.value_or("")) + ',' +
           (r.paper_value ? format_value(*r.paper_value) : std::string()) + '\n';
  }
  return out;
}

std::string to_json(std::span<const ReportRow> rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["state_label"] = r.state_label;
    row["measure"] = to_string(r.measure);
    row["split"] = r.split;
    row["value"] = rounded(r.value);
    row["exact_expr"] = r.exact_expr ? nlohmann::ordered_json(*r.exact_expr) : nullptr;
    row["paper_value"] = r.paper_value ? nlohmann::ordered_json(rounded(*r.paper_value)) : nullptr;
    out.push_back(std::move(row));
  }
  return out.dump(2) + '\n';
}

std::string sweep_to_csv(std::span<const SweepRow> rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_value(r.b0) + ',' + std::to_string(r.stage) + ',' + format_value(r.gm_lemma) + ',' +
           format_value(r.gm_numeric) + '\n';
  }
  return out;
}

}  // namespace qrta::report
