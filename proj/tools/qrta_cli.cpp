// qrta: resource measures for the Grover and HHL worked examples.

#include <cerrno>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qrta/qrta.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int exit_code_for(qrta_status status) {
  switch (status) {
    case QRTA_OK: return kExitOk;
    case QRTA_E_IO: return kExitIo;
    case QRTA_E_INVALID_ARGUMENT:
    case QRTA_E_DOMAIN: return kExitUsage;
    default: return 4;
  }
}

int report_error(qrta_status status) {
  std::cerr << "qrta: " << qrta_last_error() << '\n';
  return exit_code_for(status);
}

std::optional<qrta_options> options_from_env() {
  qrta_options options{0};
  const char* raw = std::getenv("QRTA_EVAL_BUDGET");
  if (raw == nullptr || *raw == '\0') return options;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (errno != 0 || *end != '\0' || raw[0] == '-') return std::nullopt;
  options.eval_budget = static_cast<size_t>(v);
  return options;
}

int emit(qrta_report* report, qrta_format format, const std::string& out) {
  qrta_status status;
  if (!out.empty()) {
    status = qrta_report_write(report, format, out.c_str());
  } else {
    char* text = nullptr;
    status = qrta_report_render(report, format, &text);
    if (status == QRTA_OK) {
      std::fputs(text, stdout);
      qrta_string_free(text);
      if (std::fflush(stdout) != 0) {
        qrta_report_free(report);
        std::cerr << "qrta: write to stdout failed\n";
        return kExitIo;
      }
    }
  }
  qrta_report_free(report);
  return status == QRTA_OK ? kExitOk : report_error(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherence, discord and geometric measure for Grover and HHL states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qrta_version());

  std::string format = "csv";
  std::string out;
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out, "Write to this path instead of stdout");
  };

  int qubits = 3;
  std::uint64_t target = 7;
  int iterations = 2;
  std::string measures = "coherence,discord,gm";
  auto* grover = app.add_subcommand("grover", "Measures of the states after each Grover step");
  grover->add_option("--qubits", qubits, "Number of qubits")->check(CLI::Range(1, 10));
  grover->add_option("--target", target, "Marked basis index");
  grover->add_option("--iterations", iterations, "Grover iterations")->check(CLI::PositiveNumber);
  grover->add_option("--measures", measures, "Comma list of coherence,discord,gm");
  add_output(grover);

  double b0 = 0.0;
  std::optional<double> b1;
  auto* hhl = app.add_subcommand("hhl", "Geometric measure of the three HHL stages");
  hhl->add_option("--b0", b0, "First component of b")->required();
  hhl->add_option("--b1", b1, "Second component of b (default sqrt(1 - b0^2))");
  add_output(hhl);

  int steps = 21;
  auto* sweep = app.add_subcommand("hhl-sweep", "HHL geometric measure over a uniform b0 grid");
  sweep->add_option("--steps", steps, "Grid points in [0, 1]")->check(CLI::Range(2, 100000));
  add_output(sweep);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run the self-check suites");
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"tables", "lemmas", "oracles", "invariants", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto options = options_from_env();
  if (!options) {
    std::cerr << "qrta: QRTA_EVAL_BUDGET must be a nonnegative integer\n";
    return kExitUsage;
  }
  const qrta_format fmt = format == "json" ? QRTA_FORMAT_JSON : QRTA_FORMAT_CSV;

  qrta_report* report = nullptr;
  qrta_status status = QRTA_OK;
  if (*grover) {
    status = qrta_grover_report(qubits, target, iterations, measures.c_str(), &*options, &report);
  } else if (*hhl) {
    status = qrta_hhl_report(b0, b1.value_or(0.0), b1.has_value(), &*options, &report);
  } else if (*sweep) {
    status = qrta_hhl_sweep(steps, &*options, &report);
  } else {
    qrta_verify_result* result = nullptr;
    status = qrta_verify_run(suite.c_str(), &*options, &result);
    if (status != QRTA_OK) return report_error(status);
    char* text = nullptr;
    status = qrta_verify_render(result, &text);
    const bool passed = qrta_verify_passed(result) != 0;
    qrta_verify_free(result);
    if (status != QRTA_OK) return report_error(status);
    std::fputs(text, stdout);
    qrta_string_free(text);
    return passed ? kExitOk : kExitVerifyFailed;
  }
  if (status != QRTA_OK) return report_error(status);
  return emit(report, fmt, out);
}
