#include "qrta/qrta.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <variant>

#include <json.hpp>

#include "qrta/error.hpp"
#include "qrta/grover.hpp"
#include "qrta/hhl.hpp"
#include "qrta/measures.hpp"
#include "qrta/report.hpp"
#include "qrta/verify.hpp"

struct qrta_state {
  qrta::DensityMatrix rho;
};

struct qrta_report {
  std::variant<std::vector<qrta::report::ReportRow>, std::vector<qrta::report::SweepRow>> rows;
};

struct qrta_verify_result {
  qrta::verify::Summary summary;
};

namespace {

thread_local std::string g_last_error;

template <class F>
qrta_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return QRTA_OK;
  } catch (const qrta::Error& e) {
    g_last_error = e.what();
    return static_cast<qrta_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return QRTA_E_INTERNAL;
}

template <class T>
void require(const T* p, const char* what) {
  if (p == nullptr) qrta::fail(qrta::ErrorCode::invalid_argument, std::string(what) + " is null");
}

qrta::OptimizerOptions options_of(const qrta_options* o) { return {o ? o->eval_budget : 0}; }

std::vector<qrta::Complex> read_complex(const double* re_im, std::size_t count) {
  std::vector<qrta::Complex> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = {re_im[2 * i], re_im[2 * i + 1]};
  return v;
}

qrta::hhl::HhlInput hhl_input(double b0, double b1, int has_b1) {
  return has_b1 ? qrta::hhl::HhlInput::make(b0, b1, 1e-9) : qrta::hhl::HhlInput::from_b0(b0);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string sweep_to_json(const std::vector<qrta::report::SweepRow>& rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["b0"] = std::stod(qrta::report::format_value(r.b0));
    row["stage"] = r.stage;
    row["gm_lemma"] = std::stod(qrta::report::format_value(r.gm_lemma));
    row["gm_numeric"] = std::stod(qrta::report::format_value(r.gm_numeric));
    out.push_back(std::move(row));
  }
  return out.dump(2) + '\n';
}

std::string render(const qrta_report& report, qrta_format format) {
  if (format != QRTA_FORMAT_CSV && format != QRTA_FORMAT_JSON)
    qrta::fail(qrta::ErrorCode::invalid_argument, "unknown format");
  const bool json = format == QRTA_FORMAT_JSON;
  if (const auto* rows = std::get_if<std::vector<qrta::report::ReportRow>>(&report.rows))
    return json ? qrta::report::to_json(*rows) : qrta::report::to_csv(*rows);
  const auto& sweep = std::get<std::vector<qrta::report::SweepRow>>(report.rows);
  return json ? sweep_to_json(sweep) : qrta::report::sweep_to_csv(sweep);
}

}  // namespace

extern "C" {

const char* qrta_version(void) { return "0.1.0"; }

const char* qrta_last_error(void) { return g_last_error.c_str(); }

void qrta_string_free(char* s) { std::free(s); }

qrta_status qrta_state_from_amplitudes(int n_qubits, const double* re_im, qrta_state** out) {
  return guarded([&] {
    require(re_im, "amplitudes");
    require(out, "out");
    const auto dim = qrta::dimension_of(n_qubits);
    *out = new qrta_state{qrta::outer(qrta::PureState(n_qubits, read_complex(re_im, dim)))};
  });
}

qrta_status qrta_state_from_density(int n_qubits, const double* re_im, qrta_state** out) {
  return guarded([&] {
    require(re_im, "density");
    require(out, "out");
    const auto dim = qrta::dimension_of(n_qubits);
    *out = new qrta_state{qrta::DensityMatrix(n_qubits, qrta::ComplexMatrix(dim, dim, read_complex(re_im, dim * dim)))};
  });
}

qrta_status qrta_grover_state(int n_qubits, uint64_t target, int iterations, int index, qrta_state** out) {
  return guarded([&] {
    require(out, "out");
    const auto trace = qrta::grover::trace_states({n_qubits, target, iterations});
    if (index < 0 || static_cast<std::size_t>(index) >= trace.states.size())
      qrta::fail(qrta::ErrorCode::invalid_argument, "grover state index out of range");
    *out = new qrta_state{qrta::outer(trace.states[static_cast<std::size_t>(index)].state)};
  });
}

qrta_status qrta_hhl_state(double b0, double b1, int stage, qrta_state** out) {
  return guarded([&] {
    require(out, "out");
    const auto input = qrta::hhl::HhlInput::make(b0, b1, 1e-9);
    switch (stage) {
      case 1: *out = new qrta_state{qrta::outer(qrta::hhl::stage1_state(input))}; break;
      case 2: *out = new qrta_state{qrta::hhl::stage2_state(qrta::hhl::stage2_params(input))}; break;
      case 3: *out = new qrta_state{qrta::hhl::stage3_state(qrta::hhl::stage3_params(input))}; break;
      default: qrta::fail(qrta::ErrorCode::invalid_argument, "hhl: stage must be 1, 2 or 3");
    }
  });
}

qrta_status qrta_state_qubits(const qrta_state* state, int* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = state->rho.n_qubits();
  });
}

qrta_status qrta_state_density(const qrta_state* state, double* buffer, size_t capacity) {
  return guarded([&] {
    require(state, "state");
    require(buffer, "buffer");
    const auto entries = state->rho.matrix().entries();
    if (capacity < 2 * entries.size()) qrta::fail(qrta::ErrorCode::invalid_argument, "buffer too small");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      buffer[2 * i] = entries[i].real();
      buffer[2 * i + 1] = entries[i].imag();
    }
  });
}

void qrta_state_free(qrta_state* state) { delete state; }

qrta_status qrta_coherence(const qrta_state* state, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qrta::coherence_frobenius(state->rho);
  });
}

qrta_status qrta_discord(const qrta_state* state, const char* split, const qrta_options* options, double* out) {
  return guarded([&] {
    require(state, "state");
    require(split, "split");
    require(out, "out");
    *out = qrta::discord(state->rho, qrta::Bipartition::parse(state->rho.n_qubits(), split), options_of(options));
  });
}

qrta_status qrta_gm(const qrta_state* state, const qrta_options* options, double* out) {
  return guarded([&] {
    require(state, "state");
    require(out, "out");
    *out = qrta::gm(state->rho, options_of(options));
  });
}

qrta_status qrta_grover_report(int n_qubits, uint64_t target, int iterations, const char* measures,
                               const qrta_options* options, qrta_report** out) {
  return guarded([&] {
    require(out, "out");
    if (n_qubits < 1 || n_qubits > 10) qrta::fail(qrta::ErrorCode::invalid_argument, "qubits must be in 1..10");
    if (iterations < 1) qrta::fail(qrta::ErrorCode::invalid_argument, "iterations must be >= 1");
    qrta::report::GroverRequest request{{n_qubits, target, iterations}};
    if (measures != nullptr) request.measures = qrta::report::parse_measure_list(measures);
    *out = new qrta_report{qrta::report::grover_report(request, options_of(options))};
  });
}

qrta_status qrta_hhl_report(double b0, double b1, int has_b1, const qrta_options* options, qrta_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qrta_report{qrta::report::hhl_report(hhl_input(b0, b1, has_b1), options_of(options))};
  });
}

qrta_status qrta_hhl_sweep(int steps, const qrta_options* options, qrta_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qrta_report{qrta::report::hhl_sweep(steps, options_of(options))};
  });
}

size_t qrta_report_rows(const qrta_report* report) {
  if (report == nullptr) return 0;
  return std::visit([](const auto& rows) { return rows.size(); }, report->rows);
}

qrta_status qrta_report_render(const qrta_report* report, qrta_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(render(*report, format));
  });
}

qrta_status qrta_report_write(const qrta_report* report, qrta_format format, const char* path) {
  return guarded([&] {
    require(report, "report");
    require(path, "path");
    const std::string text = render(*report, format);
    std::ofstream file(path, std::ios::binary);
    if (!file) qrta::fail(qrta::ErrorCode::io, std::string("cannot open '") + path + "' for writing");
    file << text;
    file.close();
    if (!file) qrta::fail(qrta::ErrorCode::io, std::string("write to '") + path + "' failed");
  });
}

void qrta_report_free(qrta_report* report) { delete report; }

qrta_status qrta_verify_run(const char* suite, const qrta_options* options, qrta_verify_result** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    *out = new qrta_verify_result{qrta::verify::run(qrta::verify::parse_suite(suite), options_of(options))};
  });
}

int qrta_verify_passed(const qrta_verify_result* result) { return result != nullptr && result->summary.passed(); }

size_t qrta_verify_checks(const qrta_verify_result* result) {
  return result == nullptr ? 0 : result->summary.checks.size();
}

size_t qrta_verify_failures(const qrta_verify_result* result) {
  return result == nullptr ? 0 : result->summary.failures();
}

qrta_status qrta_verify_render(const qrta_verify_result* result, char** out) {
  return guarded([&] {
    require(result, "result");
    require(out, "out");
    *out = copy_string(qrta::verify::render(result->summary));
  });
}

void qrta_verify_free(qrta_verify_result* result) { delete result; }

}  // extern "C"
