#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "swapqaoa/circuit.hpp"

#include <numbers>

using namespace swapqaoa;
using oracle::Mat;

namespace {

constexpr double kPi = std::numbers::pi;

Circuit random_circuit(int n, int depth, Rng& rng) {
  Circuit c(n);
  const GateKind one[] = {GateKind::X, GateKind::SX, GateKind::RZ, GateKind::H, GateKind::RX};
  const GateKind two[] = {GateKind::CX, GateKind::ECR, GateKind::SWAP, GateKind::RZZ};
  for (int k = 0; k < depth; ++k) {
    if (rng() % 2 == 0) {
      c.append(Gate::make(one[rng() % 5], {static_cast<int>(rng() % n)}, 6.0 * uniform01(rng) - 3.0));
    } else {
      const int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % (n - 1));
      if (b >= a) ++b;
      c.append(Gate::make(two[rng() % 4], {a, b}, 6.0 * uniform01(rng) - 3.0));
    }
  }
  return c;
}

}  // namespace

TEST_CASE("gate metadata") {
  CHECK(gate_arity(GateKind::CX) == 2);
  CHECK(gate_arity(GateKind::RZ) == 1);
  CHECK(gate_arity(GateKind::Barrier) == -1);
  CHECK(is_parametric(GateKind::RZZ));
  CHECK_FALSE(is_parametric(GateKind::SX));
  for (GateKind k : {GateKind::X, GateKind::SX, GateKind::RZ, GateKind::CX, GateKind::ECR, GateKind::SWAP,
                     GateKind::RZZ, GateKind::H, GateKind::RX, GateKind::Barrier, GateKind::Measure}) {
    CHECK(gate_kind_from_name(gate_name(k)) == k);
  }
  CHECK_THROWS_AS(gate_kind_from_name("toffoli"), std::invalid_argument);
  CHECK_THROWS_AS(Gate::make(GateKind::CX, {0}), std::invalid_argument);
}

TEST_CASE("angles are stored canonically") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double t = 40.0 * uniform01(rng) - 20.0;
    const double c = canonical_angle(t);
    CHECK(c > -2.0 * kPi);
    CHECK(c <= 2.0 * kPi + 1e-12);
    const double turns = (t - c) / (4.0 * kPi);
    CHECK(turns == doctest::Approx(std::round(turns)).epsilon(1e-9));
  }
  CHECK(canonical_angle(2.0 * kPi) == doctest::Approx(2.0 * kPi));
  CHECK(canonical_angle(-2.0 * kPi) == doctest::Approx(2.0 * kPi));
}

TEST_CASE("single and two qubit matrices are unitary") {
  for (GateKind k : {GateKind::X, GateKind::SX, GateKind::RZ, GateKind::H, GateKind::RX}) {
    const Mat u = oracle::from2(single_qubit_matrix(k, 0.77));
    CHECK((u * u.adjoint() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  }
  for (GateKind k : {GateKind::CX, GateKind::ECR, GateKind::SWAP, GateKind::RZZ}) {
    const Mat u = oracle::embed2(two_qubit_matrix(k, 0.41), 1, 0, 2);
    CHECK((u * u.adjoint() - Mat::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  }
  // sqrt(X)^2 = X, RZZ(t) = exp(-i t ZZ / 2).
  const Mat sx = oracle::from2(single_qubit_matrix(GateKind::SX, 0.0));
  CHECK(oracle::phase_distance(sx * sx, oracle::from2(single_qubit_matrix(GateKind::X, 0.0))) < 1e-14);
  CHECK(oracle::phase_distance(oracle::embed2(two_qubit_matrix(GateKind::RZZ, 0.6), 0, 1, 2),
                               oracle::zz_exponential(0.3, 0, 1, 2)) < 1e-14);
}

TEST_CASE("rzz decomposition matches the ZZ exponential") {
  for (double theta : {0.0, kPi / 4, kPi, -1.3, 2.9}) {
    const auto gates = decompose_rzz(theta, 0, 1);
    REQUIRE(gates.size() == 3);
    CHECK(gates[0].kind == GateKind::CX);
    CHECK(gates[1].kind == GateKind::RZ);
    CHECK(oracle::phase_distance(oracle::gates_unitary(gates, 2), oracle::zz_exponential(theta, 0, 1, 2)) < 1e-12);
  }
  const Mat pi_u = oracle::gates_unitary(decompose_rzz(kPi, 0, 1), 2);
  const Mat ident = Mat::Identity(4, 4);
  CHECK(oracle::phase_distance(pi_u, ident) < 1e-12);
  CHECK(oracle::phase_distance(oracle::gates_unitary(decompose_rzz(0.0, 1, 0), 2), ident) < 1e-12);
  // Embedded in three qubits with reversed operands.
  CHECK(oracle::phase_distance(oracle::gates_unitary(decompose_rzz(0.7, 2, 0), 3), oracle::zz_exponential(0.7, 2, 0, 3)) <
        1e-12);
}

TEST_CASE("merged rzz and swap") {
  for (double theta : {0.0, kPi / 3, -0.4}) {
    const auto gates = merge_rzz_swap(theta, 0, 1);
    int twoq = 0;
    for (const auto& g : gates) twoq += is_two_qubit(g.kind) ? 1 : 0;
    CHECK(twoq == 3);
    const Mat expected = oracle::swap_operator(0, 1, 2) * oracle::zz_exponential(theta, 0, 1, 2);
    CHECK(oracle::phase_distance(oracle::gates_unitary(gates, 2), expected) < 1e-12);
  }
  auto unmerged = decompose_rzz(0.5, 0, 1);
  const auto sw = decompose_swap(0, 1);
  unmerged.insert(unmerged.end(), sw.begin(), sw.end());
  Circuit c(2);
  c.append(unmerged);
  CHECK(two_qubit_count(c) == 5);
  CHECK(oracle::phase_distance(oracle::gates_unitary(decompose_swap(0, 2), 3), oracle::swap_operator(0, 2, 3)) < 1e-12);
}

TEST_CASE("barrier substitution") {
  Circuit c(2);
  c.append(decompose_rzz(0.9, 0, 1));
  c.append(Gate::make(GateKind::RZ, {0}, 0.3));  // not a cost rotation
  const Circuit b = barrier_rz(c);
  CHECK(b.ops.size() == c.ops.size());
  CHECK(b.ops[1].kind == GateKind::Barrier);
  CHECK(b.ops[1].qubits == std::vector<int>{1});
  CHECK(b.ops[3].kind == GateKind::RZ);
  CHECK(two_qubit_count(b) == two_qubit_count(c));
  Circuit only(2);
  only.append(decompose_rzz(0.9, 0, 1));
  CHECK(oracle::phase_distance(oracle::circuit_unitary(barrier_rz(only)), Mat::Identity(4, 4)) < 1e-12);
  Circuit none(3);
  none.append(Gate::make(GateKind::CX, {0, 2}));
  CHECK(barrier_rz(none).ops.size() == 1);
  CHECK(barrier_rz(none).ops[0].kind == GateKind::CX);
}

TEST_CASE("gate counting") {
  for (const auto& [kind, n] : count_gates(Circuit(3))) CHECK(n == 0);
  Circuit c(2);
  c.append(decompose_rzz(0.2, 0, 1));
  c.append(Gate::make(GateKind::Barrier, {0, 1}));
  const auto counts = count_gates(c);
  CHECK(counts.at(GateKind::CX) == 2);
  CHECK(counts.at(GateKind::RZ) == 1);
  CHECK(counts.count(GateKind::Barrier) == 0);
}

TEST_CASE("native lowering preserves the unitary") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(3, 12, rng);
    const Circuit native = to_native(c);
    for (const auto& g : native.ops) {
      const bool allowed = g.kind == GateKind::X || g.kind == GateKind::SX || g.kind == GateKind::RZ ||
                           g.kind == GateKind::ECR || g.kind == GateKind::Barrier;
      CHECK(allowed);
    }
    CHECK(oracle::phase_distance(oracle::circuit_unitary(native), oracle::circuit_unitary(c)) < 1e-10);
  }
}

TEST_CASE("binding symbolic parameters") {
  Circuit c(1);
  Gate g = Gate::make(GateKind::RX, {0});
  g.ref = {1, -2.0};
  c.append(g);
  CHECK(c.has_free_parameters());
  const Circuit b = c.bind({0.0, 0.25});
  CHECK_FALSE(b.has_free_parameters());
  CHECK(b.ops[0].param == doctest::Approx(-0.5));
  CHECK_THROWS(c.bind({0.0}));
}

TEST_CASE("validation and permutation round trip") {
  Circuit c(3);
  c.final_permutation = {2, 0, 1};
  c.validate();
  std::vector<int> inverse(3);
  for (int v = 0; v < 3; ++v) inverse[c.final_permutation[v]] = v;
  const Bits wires{1, 0, 1};
  Bits logical(3), back(3);
  for (int v = 0; v < 3; ++v) logical[v] = wires[c.final_permutation[v]];
  for (int w = 0; w < 3; ++w) back[w] = logical[inverse[w]];
  CHECK(back == wires);
  c.final_permutation = {0, 0, 1};
  CHECK_THROWS(c.validate());
  Circuit bad(2);
  bad.ops.push_back(Gate{GateKind::CX, {0, 2}});
  CHECK_THROWS(bad.validate());
}

TEST_CASE("circuit json round trip") {
  Rng rng(9);
  Circuit c = random_circuit(3, 10, rng);
  c.final_permutation = {1, 2, 0};
  const Circuit d = circuit_from_json(to_json(c));
  CHECK(d.num_qubits == 3);
  CHECK(d.final_permutation == c.final_permutation);
  REQUIRE(d.ops.size() == c.ops.size());
  for (std::size_t i = 0; i < c.ops.size(); ++i) {
    CHECK(d.ops[i].kind == c.ops[i].kind);
    CHECK(d.ops[i].qubits == c.ops[i].qubits);
    CHECK(d.ops[i].param == c.ops[i].param);
  }
}
