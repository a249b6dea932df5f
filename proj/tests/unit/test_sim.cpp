#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swapqaoa/density_matrix.hpp"
#include "swapqaoa/simulator.hpp"
#include "swapqaoa/statevector.hpp"

#include <cmath>
#include <numeric>

using namespace swapqaoa;

namespace {

Circuit random_circuit(int n, int depth, Rng& rng, bool native) {
  Circuit c(n);
  const std::vector<GateKind> one = native ? std::vector<GateKind>{GateKind::X, GateKind::SX, GateKind::RZ}
                                           : std::vector<GateKind>{GateKind::H, GateKind::RX, GateKind::RZ, GateKind::SX};
  const std::vector<GateKind> two = native ? std::vector<GateKind>{GateKind::ECR}
                                           : std::vector<GateKind>{GateKind::CX, GateKind::SWAP, GateKind::RZZ};
  for (int q = 0; q < n; ++q) c.append(Gate::make(GateKind::H, {q}));
  for (int k = 0; k < depth; ++k) {
    if (rng() % 3 != 0) {
      c.append(Gate::make(one[rng() % one.size()], {static_cast<int>(rng() % n)}, 6.0 * uniform01(rng) - 3.0));
    } else {
      const int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % (n - 1));
      if (b >= a) ++b;
      c.append(Gate::make(two[rng() % two.size()], {a, b}, 6.0 * uniform01(rng) - 3.0));
    }
  }
  return c;
}

// Short coherence times make relaxation errors large enough to notice.
NoiseModel strong_noise(int n, std::uint64_t seed) {
  NoiseModel m;
  Rng rng(seed);
  for (int q = 0; q < n; ++q) {
    const double t1 = 0.5 + uniform01(rng);
    m.t1_us.push_back(t1);
    m.t2_us.push_back(t1 * (0.3 + 1.6 * uniform01(rng)));
  }
  m.gate_durations_ns = {{GateKind::CX, 150.0}, {GateKind::ECR, 150.0}, {GateKind::SWAP, 450.0}, {GateKind::RZZ, 300.0}};
  m.noisy_kinds = {GateKind::CX, GateKind::ECR, GateKind::SWAP, GateKind::RZZ};
  m.validate();
  return m;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::vector<double> to_probs(const oracle::Vec& psi) {
  std::vector<double> p(static_cast<std::size_t>(psi.size()));
  for (Eigen::Index i = 0; i < psi.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(psi[i]);
  return p;
}

}  // namespace

TEST_CASE("relaxation channel acts as thermal relaxation") {
  const double t1 = 2.0, t2 = 1.5, t = 0.4;
  const auto ch = RelaxationChannel::make(t1, t2, t);
  CHECK(ch.gamma == doctest::Approx(1.0 - std::exp(-t / t1)));
  CHECK(ch.coherence == doctest::Approx(std::exp(-t / t2)));
  const auto k = ch.kraus();
  // Completeness: sum K† K = I.
  oracle::Mat sum = oracle::Mat::Zero(2, 2);
  for (const auto& m : k) sum += oracle::from2(m).adjoint() * oracle::from2(m);
  CHECK((sum - oracle::Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  // Action on a generic state.
  oracle::Mat rho(2, 2);
  rho << 0.3, oracle::cd(0.2, -0.1), oracle::cd(0.2, 0.1), 0.7;
  oracle::Mat out = oracle::Mat::Zero(2, 2);
  for (const auto& m : k) out += oracle::from2(m) * rho * oracle::from2(m).adjoint();
  CHECK(out(1, 1).real() == doctest::Approx(0.7 * std::exp(-t / t1)));
  CHECK(std::abs(out(0, 1) - rho(0, 1) * std::exp(-t / t2)) < 1e-14);
  CHECK(out.trace().real() == doctest::Approx(1.0));
  CHECK_THROWS(RelaxationChannel::make(1.0, 2.5, 0.1));
  CHECK_THROWS(RelaxationChannel::make(1.0, 1.0, -0.1));
  // T2 = 2 T1 is pure amplitude damping.
  CHECK(RelaxationChannel::make(1.0, 2.0, 0.3).dephasing_probability() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("noise model sampling") {
  const NoiseModel m = sample_noise_model(12, 3);
  CHECK(m.num_qubits() == 12);
  for (int q = 0; q < 12; ++q) {
    CHECK(std::abs(m.t1_us[q] - 10.0) < 0.1);
    CHECK(m.t2_us[q] <= 2.0 * m.t1_us[q]);
  }
  CHECK(m.duration_ns(GateKind::CX) == 300.0);
  CHECK(m.duration_ns(GateKind::SWAP) == 900.0);
  CHECK(m.duration_ns(GateKind::RZZ) == 600.0);
  CHECK_FALSE(m.is_noisy(GateKind::SX));
  CHECK(m.duration_ns(GateKind::X) == 0.0);
  const NoiseModel again = sample_noise_model(12, 3);
  CHECK(again.t1_us == m.t1_us);
  CHECK(sample_noise_model(12, 4).t1_us != m.t1_us);
  const NoiseModel back = noise_from_json(to_json(m));
  CHECK(back.t1_us == m.t1_us);
  CHECK(back.t2_us == m.t2_us);
  CHECK(back.gate_durations_ns == m.gate_durations_ns);
  CHECK(back.noisy_kinds == m.noisy_kinds);
  NoiseModel bad = m;
  bad.t2_us[0] = 3.0 * bad.t1_us[0];
  CHECK_THROWS(bad.validate());
}

TEST_CASE("statevector matches the reference") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const Circuit c = random_circuit(n, 30, rng, trial % 2 == 0);
    Statevector sv(n);
    sv.apply_circuit(c);
    const oracle::Vec ref = oracle::run_statevector(c);
    for (std::size_t i = 0; i < sv.dim(); ++i) CHECK(std::abs(sv.amplitudes()[i] - ref[static_cast<Eigen::Index>(i)]) < 1e-12);
    CHECK(sv.norm_squared() == doctest::Approx(1.0));
    CHECK(max_abs_diff(exact_distribution(c), to_probs(ref)) < 1e-12);
  }
}

TEST_CASE("density matrix class against explicit Kraus sums") {
  Rng rng(2);
  const int n = 3;
  const NoiseModel noise = strong_noise(n, 5);
  DensityMatrix rho(n);
  const Circuit c = random_circuit(n, 20, rng, false);
  oracle::Mat ref = oracle::basis0(n) * oracle::basis0(n).adjoint();
  for (const Gate& g : c.ops) {
    const oracle::Mat u = oracle::gate_operator(g, n);
    ref = u * ref * u.adjoint();
    if (gate_arity(g.kind) == 1) {
      rho.apply_1q(single_qubit_matrix(g.kind, g.param), g.qubits[0]);
    } else {
      const auto ra = RelaxationChannel::make(noise.t1_us[g.qubits[0]], noise.t2_us[g.qubits[0]], 0.2);
      const auto rb = RelaxationChannel::make(noise.t1_us[g.qubits[1]], noise.t2_us[g.qubits[1]], 0.2);
      rho.apply_2q(two_qubit_matrix(g.kind, g.param), g.qubits[0], g.qubits[1], &ra, &rb);
      ref = oracle::relax(ref, g.qubits[0], n, ra);
      ref = oracle::relax(ref, g.qubits[1], n, rb);
    }
  }
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t col = 0; col < 8; ++col) {
      CHECK(std::abs(rho.at(r, col) - ref(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col))) < 1e-12);
    }
  }
  CHECK(rho.trace() == doctest::Approx(1.0));
}

TEST_CASE("noisy exact distribution against the reference") {
  Rng rng(3);
  for (int trial = 0; trial < 16; ++trial) {
    const int n = 2 + trial % 4;
    const bool native = trial % 2 == 1;
    const Circuit c = random_circuit(n, 24, rng, native);
    const NoiseModel noise = strong_noise(n, 100 + trial);
    const auto ref = oracle::noisy_distribution(c, noise);
    const auto got = exact_distribution(c, &noise);
    CHECK(max_abs_diff(got, ref) < 1e-10);
    CHECK(std::accumulate(got.begin(), got.end(), 0.0) == doctest::Approx(1.0));
    // The noise is strong enough to matter.
    if (n >= 3) CHECK(max_abs_diff(got, exact_distribution(c)) > 1e-4);
  }
}

TEST_CASE("noisy circuits that open with classical gates") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 3;
    Circuit c(n);
    for (int k = 0; k < 12; ++k) {
      const int a = static_cast<int>(rng() % n);
      const int b = (a + 1 + static_cast<int>(rng() % (n - 1))) % n;
      switch (rng() % 4) {
        case 0: c.append(Gate::make(GateKind::X, {a})); break;
        case 1: c.append(Gate::make(GateKind::CX, {a, b})); break;
        case 2: c.append(Gate::make(GateKind::SWAP, {a, b})); break;
        default: c.append(Gate::make(GateKind::RZ, {a}, 0.7)); break;
      }
    }
    const Circuit tail = random_circuit(n, 16, rng, trial % 2 == 0);
    for (std::size_t i = static_cast<std::size_t>(n); i < tail.ops.size(); ++i) c.append(tail.ops[i]);
    const NoiseModel noise = strong_noise(n, 300 + trial);
    CHECK(max_abs_diff(exact_distribution(c, &noise), oracle::noisy_distribution(c, noise)) < 1e-10);
  }
}

TEST_CASE("trajectory sampling converges to the exact distribution") {
  Rng rng(4);
  const int n = 4;
  const Circuit c = random_circuit(n, 24, rng, false);
  const NoiseModel noise = strong_noise(n, 9);
  const auto exact = exact_distribution(c, &noise);
  SimOptions opt;
  opt.backend = Backend::Trajectories;
  const long shots = 40000;
  const ShotResult r = simulate(c, &noise, shots, 17, opt);
  CHECK(r.shots == shots);
  double tv = 0.0;
  for (std::size_t x = 0; x < exact.size(); ++x) {
    std::string key(n, '0');
    for (int q = 0; q < n; ++q) key[q] = ((x >> q) & 1) ? '1' : '0';
    const auto it = r.counts.find(key);
    const double f = it == r.counts.end() ? 0.0 : static_cast<double>(it->second) / shots;
    tv += 0.5 * std::abs(f - exact[x]);
  }
  // Sixteen outcomes at 40000 shots give a total-variation noise floor near 0.01.
  CHECK(tv < 0.03);
}

TEST_CASE("sampling and observables") {
  const std::vector<double> probs{0.5, 0.0, 0.0, 0.5};
  const ShotResult r = sample_counts(probs, 2, 4096, 7);
  long total = 0;
  for (const auto& [k, v] : r.counts) {
    CHECK((k == "00" || k == "11"));
    total += v;
  }
  CHECK(total == 4096);
  CHECK(sample_counts(probs, 2, 4096, 7).counts == r.counts);
  const ObservableVector obs = observables_from_counts(r);
  CHECK(obs.pair(0, 1) == doctest::Approx(1.0));
  CHECK(std::abs(obs.singles[0]) < 0.1);
  CHECK(obs.flat().size() == 3);

  // Bit q of index x is wire q; wire 1 holds logical 0 and wire 0 holds logical 1.
  const std::vector<double> p2{0.1, 0.2, 0.3, 0.4};
  const ObservableVector o = observables_from_distribution(p2, 2, {1, 0});
  CHECK(o.singles[0] == doctest::Approx(0.1 + 0.2 - 0.3 - 0.4));
  CHECK(o.singles[1] == doctest::Approx(0.1 - 0.2 + 0.3 - 0.4));
  CHECK(o.pair(0, 1) == doctest::Approx(0.1 - 0.2 - 0.3 + 0.4));
  CHECK(pair_index(4, 0, 1) == 0);
  CHECK(pair_index(4, 2, 3) == 5);

  ShotResult relabeled;
  relabeled.counts = {{"10", 3}, {"01", 1}};
  relabeled.shots = 4;
  relabeled.logical_map = {1, 0};
  const auto logical = logical_counts(relabeled);
  CHECK(logical.at("01") == 3);
  CHECK(logical.at("10") == 1);
  const ShotResult back = shot_result_from_json(to_json(relabeled));
  CHECK(back.counts == relabeled.counts);
  CHECK(back.logical_map == relabeled.logical_map);
}

TEST_CASE("bell circuit") {
  Circuit c(2);
  c.append(Gate::make(GateKind::H, {0}));
  c.append(Gate::make(GateKind::CX, {0, 1}));
  const ShotResult r = simulate(c, nullptr, 4096, 1);
  CHECK(r.counts.size() == 2);
  CHECK(r.counts.count("00") == 1);
  CHECK(r.counts.count("11") == 1);
}

TEST_CASE("backend selection") {
  CHECK(select_backend(10, false) == Backend::Statevector);
  CHECK(select_backend(12, true) == Backend::DensityMatrix);
  CHECK(select_backend(13, true) == Backend::Trajectories);
  CHECK_THROWS_AS(select_backend(21, true), std::invalid_argument);
  CHECK_THROWS_AS(select_backend(27, false), std::invalid_argument);
  Circuit c(2);
  c.append(Gate::make(GateKind::CX, {0, 1}));
  const NoiseModel noise = strong_noise(2, 1);
  SimOptions opt;
  opt.backend = Backend::Statevector;
  CHECK_THROWS(simulate(c, &noise, 10, 1, opt));
}
