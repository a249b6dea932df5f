#pragma once

#include "swapqaoa/circuit.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace swapqaoa {

/// Per-qubit T1/T2 (µs) and per-kind gate durations (ns). Only gates whose
/// kind is in noisy_kinds carry noise: after such a gate every operand wire
/// undergoes thermal relaxation for the gate's duration.
struct NoiseModel {
  std::vector<double> t1_us;
  std::vector<double> t2_us;
  std::map<GateKind, double> gate_durations_ns;
  std::set<GateKind> noisy_kinds;

  [[nodiscard]] int num_qubits() const { return static_cast<int>(t1_us.size()); }
  [[nodiscard]] double duration_ns(GateKind kind) const;
  [[nodiscard]] bool is_noisy(GateKind kind) const { return noisy_kinds.count(kind) != 0; }
  /// Throws std::invalid_argument when a T2 exceeds 2·T1 or a time/duration is
  /// not positive/non-negative.
  void validate() const;
};

struct NoiseSampling {
  double mean_us = 10.0;
  double stddev_ns = 10.0;
  double two_qubit_ns = 300.0;
};

/// T1 and T2 drawn independently from N(mean, stddev) per qubit, T2 clipped to
/// 2·T1. CX and ECR last two_qubit_ns; SWAP and RZZ are charged as three and
/// two CX respectively. Single-qubit gates are noiseless.
NoiseModel sample_noise_model(int n, std::uint64_t seed, const NoiseSampling& params = {});

/// Zero-temperature relaxation for duration t: excited population shrinks by
/// exp(-t/T1) toward |0>, coherences by exp(-t/T2). All times in the same unit.
struct RelaxationChannel {
  double gamma = 0.0;      // 1 - exp(-t/T1)
  double coherence = 1.0;  // exp(-t/T2)

  static RelaxationChannel make(double t1, double t2, double t);
  /// Pure-dephasing probability applied after amplitude damping.
  [[nodiscard]] double dephasing_probability() const;
  /// Kraus operators {sqrt(1-pz) A0, sqrt(pz) Z A0, A1}, row-major 2x2.
  [[nodiscard]] std::array<Matrix2, 3> kraus() const;
};

nlohmann::json to_json(const NoiseModel& noise);
NoiseModel noise_from_json(const nlohmann::json& j);

}  // namespace swapqaoa
