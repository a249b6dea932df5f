#include "swapqaoa/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace swapqaoa {

Statevector::Statevector(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kStatevectorLimit) {
    throw std::invalid_argument("statevector supports 1.." + std::to_string(kStatevectorLimit) + " qubits, got " +
                                std::to_string(num_qubits));
  }
  amp_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amp_[0] = 1.0;
}

void Statevector::apply_1q(const Matrix2& u, int q) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t dim = amp_.size();
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      const Amplitude a0 = amp_[i];
      const Amplitude a1 = amp_[i | bit];
      amp_[i] = u[0] * a0 + u[1] * a1;
      amp_[i | bit] = u[2] * a0 + u[3] * a1;
    }
  }
}

void Statevector::apply_2q(const Matrix4& u, int a, int b) {
  const std::size_t ba = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  const std::size_t dim = amp_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & (ba | bb)) continue;
    const std::size_t idx[4] = {i, i | bb, i | ba, i | ba | bb};
    Amplitude in[4];
    for (int k = 0; k < 4; ++k) in[k] = amp_[idx[k]];
    for (int r = 0; r < 4; ++r) {
      Amplitude acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += u[4 * r + k] * in[k];
      amp_[idx[r]] = acc;
    }
  }
}

void Statevector::apply_cx(int control, int target) {
  const std::size_t bc = std::size_t{1} << control;
  const std::size_t bt = std::size_t{1} << target;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & bc) && !(i & bt)) std::swap(amp_[i], amp_[i | bt]);
  }
}

void Statevector::apply_swap(int a, int b) {
  const std::size_t ba = std::size_t{1} << a;
  const std::size_t bb = std::size_t{1} << b;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if ((i & ba) && !(i & bb)) std::swap(amp_[i], amp_[(i ^ ba) | bb]);
  }
}

void Statevector::apply_gate(const Gate& g) {
  if (!g.ref.bound()) throw std::invalid_argument("cannot simulate a gate with a free parameter");
  switch (g.kind) {
    case GateKind::Barrier:
    case GateKind::Measure:
      return;
    case GateKind::CX:
      apply_cx(g.qubits[0], g.qubits[1]);
      return;
    case GateKind::SWAP:
      apply_swap(g.qubits[0], g.qubits[1]);
      return;
    case GateKind::ECR:
    case GateKind::RZZ:
      apply_2q(two_qubit_matrix(g.kind, g.param), g.qubits[0], g.qubits[1]);
      return;
    default:
      apply_1q(single_qubit_matrix(g.kind, g.param), g.qubits[0]);
  }
}

void Statevector::apply_circuit(const Circuit& c) {
  if (c.num_qubits != n_) throw std::invalid_argument("circuit width does not match the state");
  for (const Gate& g : c.ops) apply_gate(g);
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amp_.size());
  for (std::size_t i = 0; i < amp_.size(); ++i) p[i] = std::norm(amp_[i]);
  return p;
}

double Statevector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

void Statevector::normalize() {
  const double s = std::sqrt(norm_squared());
  if (s <= 0.0) throw std::runtime_error("cannot normalize a zero state");
  for (auto& a : amp_) a /= s;
}

}  // namespace swapqaoa
