// Exercises libqrta through the C header only.

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "qrta/qrta.h"

TEST_CASE("state handles and measures") {
  qrta_state* s = nullptr;
  REQUIRE(qrta_grover_state(3, 7, 2, 1, &s) == QRTA_OK);
  int n = 0;
  CHECK(qrta_state_qubits(s, &n) == QRTA_OK);
  CHECK(n == 3);
  double c = 0.0;
  CHECK(qrta_coherence(s, &c) == QRTA_OK);
  CHECK(c == doctest::Approx(std::sqrt(14.0) / 4));
  double d = 0.0;
  CHECK(qrta_discord(s, "A|BC", nullptr, &d) == QRTA_OK);
  CHECK(d == doctest::Approx(0.8112781244591328).epsilon(1e-6));
  double g = 0.0;
  CHECK(qrta_gm(s, nullptr, &g) == QRTA_OK);
  CHECK(g == doctest::Approx(0.56472).epsilon(1e-4));

  std::vector<double> buf(128);
  CHECK(qrta_state_density(s, buf.data(), buf.size()) == QRTA_OK);
  CHECK(buf[0] == doctest::Approx(16.0 / 128));
  CHECK(qrta_state_density(s, buf.data(), 10) == QRTA_E_INVALID_ARGUMENT);
  qrta_state_free(s);
}

TEST_CASE("states from raw data") {
  const double amps[] = {1, 0, 0, 0, 0, 0, 0, 0};
  qrta_state* s = nullptr;
  REQUIRE(qrta_state_from_amplitudes(2, amps, &s) == QRTA_OK);
  double g = 1.0;
  CHECK(qrta_gm(s, nullptr, &g) == QRTA_OK);
  CHECK(g == doctest::Approx(0.0).epsilon(1e-12));
  qrta_state_free(s);

  const double bad[] = {1, 0, 1, 0};
  CHECK(qrta_state_from_amplitudes(1, bad, &s) == QRTA_E_DOMAIN);
  CHECK(std::string(qrta_last_error()).find("normalized") != std::string::npos);

  const double rho[] = {0.5, 0, 0.5, 0, 0.5, 0, 0.5, 0};
  REQUIRE(qrta_state_from_density(1, rho, &s) == QRTA_OK);
  double c = 0.0;
  CHECK(qrta_coherence(s, &c) == QRTA_OK);
  CHECK(c == doctest::Approx(std::sqrt(0.5)));
  qrta_state_free(s);
}

TEST_CASE("error codes") {
  qrta_state* s = nullptr;
  CHECK(qrta_hhl_state(0.6, 0.6, 1, &s) == QRTA_E_DOMAIN);
  CHECK(qrta_hhl_state(0.6, 0.8, 4, &s) == QRTA_E_INVALID_ARGUMENT);
  CHECK(qrta_grover_state(3, 9, 1, 0, &s) == QRTA_E_INVALID_ARGUMENT);
  CHECK(qrta_coherence(nullptr, nullptr) == QRTA_E_INVALID_ARGUMENT);
  CHECK(std::string(qrta_last_error()).find("null") != std::string::npos);
  REQUIRE(qrta_hhl_state(0.6, 0.8, 3, &s) == QRTA_OK);
  double d = 0.0;
  CHECK(qrta_discord(s, "A|B", nullptr, &d) == QRTA_E_INVALID_ARGUMENT);
  qrta_state_free(s);
  qrta_state_free(nullptr);
}

TEST_CASE("reports") {
  qrta_report* r = nullptr;
  REQUIRE(qrta_grover_report(3, 7, 2, "coherence", nullptr, &r) == QRTA_OK);
  CHECK(qrta_report_rows(r) == 4);
  char* text = nullptr;
  REQUIRE(qrta_report_render(r, QRTA_FORMAT_CSV, &text) == QRTA_OK);
  CHECK(std::string(text).find("sqrt(434)/64") != std::string::npos);
  qrta_string_free(text);
  REQUIRE(qrta_report_render(r, QRTA_FORMAT_JSON, &text) == QRTA_OK);
  CHECK(std::string(text).front() == '[');
  qrta_string_free(text);
  CHECK(qrta_report_write(r, QRTA_FORMAT_CSV, "/nonexistent-dir/x.csv") == QRTA_E_IO);
  qrta_report_free(r);

  CHECK(qrta_grover_report(11, 0, 1, nullptr, nullptr, &r) == QRTA_E_INVALID_ARGUMENT);
  CHECK(qrta_grover_report(3, 7, 0, nullptr, nullptr, &r) == QRTA_E_INVALID_ARGUMENT);
  CHECK(qrta_grover_report(3, 7, 1, "gm,foo", nullptr, &r) == QRTA_E_INVALID_ARGUMENT);

  REQUIRE(qrta_hhl_report(0.6, 0.0, 0, nullptr, &r) == QRTA_OK);
  CHECK(qrta_report_rows(r) == 3);
  qrta_report_free(r);
  CHECK(qrta_hhl_report(0.6, 0.7, 1, nullptr, &r) == QRTA_E_DOMAIN);

  REQUIRE(qrta_hhl_sweep(3, nullptr, &r) == QRTA_OK);
  CHECK(qrta_report_rows(r) == 9);
  REQUIRE(qrta_report_render(r, QRTA_FORMAT_CSV, &text) == QRTA_OK);
  CHECK(std::string(text).rfind("b0,stage,gm_lemma,gm_numeric\n", 0) == 0);
  qrta_string_free(text);
  qrta_report_free(r);
}

TEST_CASE("verify") {
  qrta_verify_result* v = nullptr;
  REQUIRE(qrta_verify_run("tables", nullptr, &v) == QRTA_OK);
  CHECK(qrta_verify_checks(v) == 12);
  CHECK(qrta_verify_failures(v) == 0);
  CHECK(qrta_verify_passed(v) == 1);
  qrta_verify_free(v);
  CHECK(qrta_verify_run("bogus", nullptr, &v) == QRTA_E_INVALID_ARGUMENT);
}
