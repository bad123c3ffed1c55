#include <doctest.h>

#include <array>
#include <cmath>
#include <tuple>

#include "helpers.hpp"
#include "qrta/error.hpp"
#include "qrta/grover.hpp"
#include "qrta/hhl.hpp"
#include "qrta/measures.hpp"

using namespace qrta;
using testing::kPi;

namespace {

std::vector<PureState> grover_psis() {
  std::vector<PureState> out;
  const auto trace = grover::trace_states({});
  for (std::size_t i = 1; i < trace.states.size(); ++i) out.push_back(trace.states[i].state);
  return out;
}

// Values produced by the brute-force grids in verify-oracle (see test_oracle.cpp).
constexpr std::array<double, 4> kCoherenceOracle{0.935414346693485, 0.618718433538229, 0.618718433538229,
                                                 0.325510416499995};
constexpr std::array<double, 4> kDiscordOracle{0.811278124459133, 0.283441935529459, 0.528864361065015,
                                               0.179641911207569};
constexpr std::array<double, 4> kGmSymmetric256{0.676014048055981, 0.926668548444702, 0.848188877947122,
                                                0.965100402287055};

}  // namespace

TEST_CASE("bipartition labels") {
  CHECK(Bipartition(3, {0}).label() == "A|BC");
  CHECK(Bipartition(3, {1, 2}).label() == "BC|A");
  const auto p = Bipartition::parse(3, "AC|B");
  CHECK(p.measured() == std::vector<int>{0, 2});
  CHECK(p.rest() == std::vector<int>{1});
  CHECK(Bipartition::all(3).size() == 6);
  CHECK_THROWS_AS(Bipartition::parse(3, "AB|B"), Error);
  CHECK_THROWS_AS(Bipartition::parse(3, "ABC|"), Error);
  CHECK_THROWS_AS(Bipartition::parse(3, "AX|BC"), Error);
  CHECK_THROWS_AS(Bipartition(3, {0, 1, 2}), Error);
}

TEST_CASE("measurement basis validation") {
  CHECK(MeasurementBasis::computational(4).rank_one());
  const auto a = ComplexMatrix::diagonal(std::vector<double>{1, 1, 1, 0});
  const auto b = ComplexMatrix::diagonal(std::vector<double>{0, 0, 0, 1});
  const MeasurementBasis coarse({a, b});
  CHECK_FALSE(coarse.rank_one());
  CHECK_THROWS_AS(MeasurementBasis({a}), Error);
  CHECK_THROWS_AS(MeasurementBasis({ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5})}), Error);
}

TEST_CASE("coherence matches closed forms and oracle") {
  const auto psis = grover_psis();
  const std::array<double, 4> exact{std::sqrt(14.0) / 4, 7 * std::sqrt(2.0) / 16, 7 * std::sqrt(2.0) / 16,
                                    std::sqrt(434.0) / 64};
  for (std::size_t k = 0; k < 4; ++k) {
    const double c = coherence_frobenius(outer(psis[k]));
    CHECK(std::abs(c - exact[k]) <= 1e-9);
    CHECK(std::abs(c - kCoherenceOracle[k]) <= 1e-6);
  }
}

TEST_CASE("coherence vanishes exactly on diagonal states") {
  const auto d = DensityMatrix(2, ComplexMatrix::diagonal(std::vector<double>{0.1, 0.2, 0.3, 0.4}));
  CHECK(coherence_frobenius(d) == 0.0);
  testing::Rng rng(3);
  for (int i = 0; i < 20; ++i) CHECK(coherence_frobenius(testing::random_mixed(3, rng)) > 1e-12);
}

TEST_CASE("discord of the Grover states") {
  const auto psis = grover_psis();
  const std::array<double, 4> p{0.25, (4 + std::sqrt(13.0)) / 8, (8 + std::sqrt(37.0)) / 16,
                                (16 + std::sqrt(229.0)) / 32};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto rho = outer(psis[k]);
    const double d = discord(rho, Bipartition(3, {0}));
    CHECK(std::abs(d - binary_entropy(p[k])) <= 1e-6);
    CHECK(d <= kDiscordOracle[k] + 1e-9);
    for (const auto& split : Bipartition::all(3)) CHECK(std::abs(discord(rho, split) - d) <= 1e-6);
  }
}

TEST_CASE("discord of pure states equals the measured-side entropy") {
  testing::Rng rng(17);
  std::vector<PureState> states = grover_psis();
  states.push_back(hhl::stage1_state(hhl::HhlInput::from_b0(0.3)));
  for (int i = 0; i < 6; ++i) states.push_back(testing::random_pure(3, rng));
  for (const auto& psi : states) {
    const auto rho = outer(psi);
    for (const auto& split : Bipartition::all(3)) {
      const double expected = von_neumann_entropy(partial_trace(rho, split.measured()));
      CHECK(std::abs(discord(rho, split) - expected) <= 1e-6);
    }
  }
}

TEST_CASE("discord is nonnegative and zero on classical-quantum states") {
  testing::Rng rng(23);
  for (int i = 0; i < 6; ++i) {
    const auto rho = testing::random_mixed(2, rng);
    CHECK(discord(rho, Bipartition(2, {0})) >= -1e-9);
  }
  // sum_i p_i |i><i| (x) rho_i
  const auto r0 = testing::random_mixed(2, rng), r1 = testing::random_mixed(2, rng);
  auto m = kron(outer(PureState::basis(1, 0)), r0).matrix() * Complex{0.3};
  m += kron(outer(PureState::basis(1, 1)), r1).matrix() * Complex{0.7};
  CHECK(std::abs(discord(DensityMatrix(3, m), Bipartition(3, {0}))) < 1e-6);
}

TEST_CASE("coarse diagonal measurement on AB gives zero conditional entropy for psi1") {
  const auto rho = outer(grover_psis()[0]);
  const auto a = ComplexMatrix::diagonal(std::vector<double>{1, 1, 1, 0});
  const auto b = ComplexMatrix::diagonal(std::vector<double>{0, 0, 0, 1});
  CHECK(conditional_entropy_after_measurement(rho, Bipartition(3, {0, 1}), MeasurementBasis({a, b})) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("givens and bloch unitaries are unitary") {
  testing::Rng rng(1);
  std::vector<double> angles(12);
  for (auto& a : angles) a = 2 * kPi * rng.uniform();
  const auto u = givens_unitary(4, angles);
  CHECK(testing::max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(4)) < 1e-13);
  const auto b = bloch_unitary(0.7, 2.1);
  CHECK(testing::max_abs_diff(b * b.adjoint(), ComplexMatrix::identity(2)) < 1e-14);
  CHECK_THROWS_AS(givens_unitary(4, std::vector<double>(8)), Error);
}

TEST_CASE("GM of the Grover states") {
  const auto psis = grover_psis();
  const std::array<double, 4> lambda2{0.6759, 0.9266, 0.8481, 0.9651};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto sym = gm_lambda2(psis[k], AnsatzMode::symmetric);
    const auto gen = gm_lambda2(psis[k], AnsatzMode::general);
    CHECK(std::abs(sym.lambda2 - lambda2[k]) <= 1e-3);
    CHECK(std::abs(sym.lambda2 - gen.lambda2) <= 1e-6);
    CHECK(sym.lambda2 >= kGmSymmetric256[k] - 1e-9);
    CHECK(std::abs(product_overlap(psis[k], gen.argmax) - gen.lambda2) <= 1e-10);
    CHECK(std::abs(product_overlap(psis[k], sym.argmax) - sym.lambda2) <= 1e-10);
    CHECK(gen.gm == doctest::Approx(-std::log2(gen.lambda2)));
  }
  CHECK(gm(psis[0]) == doctest::Approx(0.56472).epsilon(1e-4));
  CHECK(gm(psis[3]) == doctest::Approx(0.051211).epsilon(1e-4));
}

TEST_CASE("pure and density overloads agree") {
  testing::Rng rng(31);
  for (int i = 0; i < 4; ++i) {
    const auto psi = testing::random_pure(3, rng);
    CHECK(gm(psi) == doctest::Approx(gm(outer(psi))).epsilon(1e-8));
  }
}

TEST_CASE("GM bounds and special cases") {
  CHECK(gm(PureState::basis(3, 6)) == doctest::Approx(0.0).epsilon(1e-12));
  const double h = 1 / std::sqrt(2.0);
  std::vector<Complex> ghz(8);
  ghz[0] = h;
  ghz[7] = h;
  CHECK(gm(PureState(3, ghz)) == doctest::Approx(1.0).epsilon(1e-8));
  testing::Rng rng(41);
  for (int i = 0; i < 5; ++i) {
    const auto rho = testing::random_mixed(3, rng);
    double diag = 0.0;
    for (std::size_t j = 0; j < 8; ++j) diag = std::max(diag, rho(j, j).real());
    CHECK(gm_lambda2(rho, AnsatzMode::general).lambda2 >= diag - 1e-12);
  }
}

TEST_CASE("symmetric mode rejects asymmetric states") {
  CHECK_THROWS_AS(gm_lambda2(PureState::basis(3, 1), AnsatzMode::symmetric), Error);
  CHECK(is_permutation_symmetric(PureState::basis(3, 7)));
}

TEST_CASE("GM is invariant under local unitaries") {
  testing::Rng rng(53);
  std::vector<DensityMatrix> states;
  for (const auto& psi : grover_psis()) states.push_back(outer(psi));
  const auto in = hhl::HhlInput::from_b0(0.6);
  states.push_back(hhl::stage2_state(hhl::stage2_params(in)));
  states.push_back(hhl::stage3_state(hhl::stage3_params(in)));
  for (const auto& rho : states) {
    const double ref = gm(rho);
    for (int k = 0; k < 10; ++k)
      CHECK(std::abs(gm(conjugate(rho, testing::random_local_unitary(3, rng))) - ref) < 1e-5);
  }
}

TEST_CASE("HHL closed forms") {
  for (int k = 0; k <= 20; ++k) {
    const auto in = hhl::HhlInput::from_b0(k / 20.0);
    CHECK(std::abs(gm(hhl::stage1_state(in)) - hhl::stage1_gm_closed_form(in)) <= 1e-4);
    const auto p3 = hhl::stage3_params(in);
    CHECK(std::abs(gm(hhl::stage3_state(p3)) - hhl::stage3_gm_closed_form(p3)) <= 1e-6);
    const auto p2 = hhl::stage2_params(in);
    CHECK(gm_lambda2(hhl::stage2_state(p2), AnsatzMode::general).lambda2 >=
          hhl::stage2_single_angle_bound(p2).lambda2 - 1e-9);
  }
}

TEST_CASE("angle normalization") {
  const auto [a, b] = normalize_angles(-0.3, 7.0);
  CHECK(a >= 0.0);
  CHECK(a <= kPi);
  CHECK(b >= 0.0);
  CHECK(b < 2 * kPi);
  testing::Rng rng(61);
  const auto psi = testing::random_pure(2, rng);
  const ProductAnsatz raw{AnsatzMode::general, {{-0.3, 7.0}, {4.0, -1.0}}};
  ProductAnsatz wrapped = raw;
  for (auto& [x, y] : wrapped.angles) std::tie(x, y) = normalize_angles(x, y);
  CHECK(product_overlap(psi, raw) == doctest::Approx(product_overlap(psi, wrapped)).epsilon(1e-12));
}

TEST_CASE("evaluation budget caps the search") {
  const auto rho = outer(grover_psis()[1]);
  const auto capped = gm_lambda2(rho, AnsatzMode::general, {500});
  CHECK(capped.evaluations <= 500);
  CHECK(capped.lambda2 <= gm_lambda2(rho, AnsatzMode::general).lambda2 + 1e-12);
  const auto d = discord_search(rho, Bipartition(3, {0}), {200});
  CHECK(d.evaluations <= 200);
}
