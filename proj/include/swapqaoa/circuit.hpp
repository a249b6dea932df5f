#pragma once

#include <nlohmann/json.hpp>

#include <array>
#include <complex>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace swapqaoa {

enum class GateKind { X, SX, RZ, CX, ECR, SWAP, RZZ, H, RX, Barrier, Measure };

/// Rotation conventions: RZ(t) = exp(-i t Z / 2), RX(t) = exp(-i t X / 2),
/// RZZ(t) = exp(-i t Z⊗Z / 2).
std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);
int gate_arity(GateKind kind);  // -1 for Barrier (any number of wires)
bool is_two_qubit(GateKind kind);
bool is_parametric(GateKind kind);

/// What part of the QAOA a gate implements. Transforms key off this tag, not
/// off the gate kind alone.
enum class GateRole : std::uint8_t { None, InitialState, Cost, Swap, Mixer };

/// Free-parameter reference: at bind time param = scale * values[slot].
struct ParamRef {
  int slot = -1;
  double scale = 1.0;
  [[nodiscard]] bool bound() const { return slot < 0; }
};

struct Gate {
  GateKind kind = GateKind::Barrier;
  std::vector<int> qubits;
  double param = 0.0;
  GateRole role = GateRole::None;
  ParamRef ref{};

  static Gate make(GateKind kind, std::vector<int> qubits, double param = 0.0,
                   GateRole role = GateRole::None);
};

/// Maps an angle to the canonical range (-2π, 2π].
double canonical_angle(double theta);

struct Circuit {
  int num_qubits = 0;
  std::vector<Gate> ops;
  /// final_permutation[logical] = wire measured for that logical index.
  std::vector<int> final_permutation;

  explicit Circuit(int n = 0);
  void append(Gate g);
  void append(const std::vector<Gate>& gates);
  /// Checks operand ranges/arity and that final_permutation is a bijection.
  void validate() const;
  [[nodiscard]] bool has_free_parameters() const;
  /// Returns a copy with every ParamRef resolved against `values`.
  [[nodiscard]] Circuit bind(const std::vector<double>& values) const;
};

/// exp(-i θ Z_i Z_j) as CX(i,j) · RZ_j(2θ) · CX(i,j).
std::vector<Gate> decompose_rzz(double theta, int i, int j, GateRole role = GateRole::Cost);

/// SWAP · exp(-i θ Z_i Z_j) with three CX gates: the inner CX pair of the
/// unmerged RZZ + SWAP sequence cancels.
std::vector<Gate> merge_rzz_swap(double theta, int i, int j, GateRole role = GateRole::Cost);

/// SWAP(i, j) as three CX gates.
std::vector<Gate> decompose_swap(int i, int j);

/// Replaces every cost-layer RZ with a one-wire barrier.
Circuit barrier_rz(const Circuit& circuit);

std::map<GateKind, int> count_gates(const Circuit& circuit);
int two_qubit_count(const Circuit& circuit);

/// Rewrites into {X, SX, RZ, ECR}. In time order CX(c, t) becomes
/// X_c, ECR(c, t), RZ_c(π/2), SX_t (equal up to global phase). H becomes
/// RZ(π/2)·SX·RZ(π/2) and RX(θ) becomes RZ(π/2)·SX·RZ(θ+π)·SX·RZ(π/2).
/// SWAP and RZZ are lowered to CX first.
Circuit to_native(const Circuit& circuit);

using Matrix2 = std::array<std::complex<double>, 4>;   // row-major
using Matrix4 = std::array<std::complex<double>, 16>;  // row-major, basis |q0 q1>, q0 high bit

Matrix2 single_qubit_matrix(GateKind kind, double param);
/// Matrix on ordered operands (a, b); basis index = 2 * bit_a + bit_b.
/// ECR(a, b) = (X_a - Y_a X_b) / √2.
Matrix4 two_qubit_matrix(GateKind kind, double param);

nlohmann::json to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);
nlohmann::json gate_counts_json(const std::map<GateKind, int>& counts);

}  // namespace swapqaoa
