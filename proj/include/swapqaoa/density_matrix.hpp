#pragma once

#include "swapqaoa/circuit.hpp"
#include "swapqaoa/noise.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace swapqaoa {

/// A unitary on ordered wires (a, b) followed by optional relaxation of a and
/// of b.
struct ChannelOp {
  Matrix4 v{};
  int a = 0;
  int b = 1;
  std::optional<RelaxationChannel> relax_a;
  std::optional<RelaxationChannel> relax_b;
};

/// Dense density matrix over n qubits. Entry (r, c) lives at index
/// r | (c << n), so one 2n-bit index carries both the row and column labels.
class DensityMatrix {
 public:
  explicit DensityMatrix(int num_qubits);  // |0...0><0...0|

  [[nodiscard]] int num_qubits() const { return n_; }
  [[nodiscard]] std::complex<double> at(std::size_t row, std::size_t col) const {
    return rho_[row | (col << n_)];
  }

  void apply_1q(const Matrix2& u, int q);
  /// rho -> V rho V† on ordered operands (a, b), followed by relaxation of a
  /// and then b when the respective channel pointer is non-null. One pass over
  /// rho.
  void apply_2q(const Matrix4& v, int a, int b, const RelaxationChannel* relax_a = nullptr,
                const RelaxationChannel* relax_b = nullptr);
  void apply_relaxation(int q, const RelaxationChannel& channel);
  void apply(const ChannelOp& op);

  static DensityMatrix from_diagonal(int num_qubits, const std::vector<double>& probs);

  [[nodiscard]] std::vector<double> diagonal() const;  // clamped at zero
  [[nodiscard]] double trace() const;

 private:
  int n_;
  std::vector<std::complex<double>> rho_;
};

/// Largest width handled by the density-matrix backend.
inline constexpr int kDensityMatrixLimit = 12;

/// Final populations after running ops on |0...0> (n >= 2). While the state is
/// provably diagonal for the purpose of the final Z measurement, only the
/// populations are evolved.
std::vector<double> evolve_distribution(int num_qubits, const std::vector<ChannelOp>& ops);

/// Relaxes qubit q for duration t (same time unit as T1/T2). Throws
/// std::invalid_argument if T2 > 2 T1.
void apply_thermal_relaxation(DensityMatrix& rho, int q, double t1, double t2, double t);

}  // namespace swapqaoa
