#pragma once

#include "swapqaoa/circuit.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace swapqaoa {

using Amplitude = std::complex<double>;

/// Dense pure state. Bit q of a basis index is the value of qubit q.
class Statevector {
 public:
  explicit Statevector(int num_qubits);  // |0...0>

  [[nodiscard]] int num_qubits() const { return n_; }
  [[nodiscard]] std::size_t dim() const { return amp_.size(); }
  [[nodiscard]] const std::vector<Amplitude>& amplitudes() const { return amp_; }
  std::vector<Amplitude>& amplitudes() { return amp_; }

  void apply_1q(const Matrix2& u, int q);
  /// u acts on ordered operands (a, b) with basis index 2·bit_a + bit_b.
  void apply_2q(const Matrix4& u, int a, int b);
  void apply_cx(int control, int target);
  void apply_swap(int a, int b);
  void apply_gate(const Gate& g);
  void apply_circuit(const Circuit& c);

  [[nodiscard]] std::vector<double> probabilities() const;
  [[nodiscard]] double norm_squared() const;
  void normalize();

 private:
  int n_;
  std::vector<Amplitude> amp_;
};

/// Max qubits for the dense statevector backend.
inline constexpr int kStatevectorLimit = 26;

}  // namespace swapqaoa
