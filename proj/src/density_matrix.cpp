#include "swapqaoa/density_matrix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace swapqaoa {

namespace {

using cd = std::complex<double>;

// Spreads the bits of k over the positions not listed in `zeros` (sorted
// ascending), leaving the listed positions clear.
template <std::size_t N>
inline std::size_t insert_zeros(std::size_t k, const std::array<int, N>& zeros) {
  for (int pos : zeros) {
    const std::size_t low = k & ((std::size_t{1} << pos) - 1);
    k = ((k >> pos) << (pos + 1)) | low;
  }
  return k;
}

// Returns true and fills (src, phase) when every row of v has exactly one
// non-zero entry: (v m v†)[i][j] = phase[i] conj(phase[j]) m[src[i]][src[j]].
bool monomial_form(const Matrix4& v, std::array<int, 4>& src, std::array<cd, 4>& phase) {
  for (int i = 0; i < 4; ++i) {
    int found = -1;
    for (int k = 0; k < 4; ++k) {
      if (v[4 * i + k] != cd{0.0, 0.0}) {
        if (found >= 0) return false;
        found = k;
      }
    }
    if (found < 0) return false;
    src[i] = found;
    phase[i] = v[4 * i + found];
  }
  return true;
}

// Two complex numbers, one from each of two blocks: {re0, im0, re1, im1}.
typedef double v4d __attribute__((vector_size(32)));
typedef long long v4i __attribute__((vector_size(32)));

inline v4d load_pair(const cd* p0, const cd* p1) {
  const double* a = reinterpret_cast<const double*>(p0);
  const double* b = reinterpret_cast<const double*>(p1);
  return v4d{a[0], a[1], b[0], b[1]};
}

inline void store_pair(cd* p0, cd* p1, v4d x) {
  double* a = reinterpret_cast<double*>(p0);
  double* b = reinterpret_cast<double*>(p1);
  a[0] = x[0];
  a[1] = x[1];
  b[0] = x[2];
  b[1] = x[3];
}

// Coefficient c prepared for c * x on packed pairs.
struct Coef {
  v4d re;
  v4d im;  // {-ci, ci, -ci, ci}
};

inline Coef make_coef(cd c) {
  return {v4d{c.real(), c.real(), c.real(), c.real()}, v4d{-c.imag(), c.imag(), -c.imag(), c.imag()}};
}

inline v4d cmul(const Coef& c, v4d x) {
  const v4d swapped = __builtin_shuffle(x, v4i{1, 0, 3, 2});
  return c.re * x + c.im * swapped;
}

// out[dst] += coef * in[src] over the 16 entries of a block.
struct Term {
  int dst;
  int src;
  Coef coef;
};

// Entry e = 4 i + j of a block has row index i = 2 row_a + row_b and column
// index j = 2 col_a + col_b.
void append_relaxation(std::array<std::array<cd, 16>, 16>& s, int bit, const RelaxationChannel& ch) {
  // s <- R s for the relaxation of the operand selected by `bit` of i and j.
  std::array<std::array<cd, 16>, 16> out{};
  for (int e = 0; e < 16; ++e) {
    const int i = e >> 2, j = e & 3;
    const bool ri = (i & bit) != 0, cj = (j & bit) != 0;
    for (int k = 0; k < 16; ++k) {
      if (!ri && !cj) {
        out[e][k] = s[e][k] + ch.gamma * s[4 * (i | bit) + (j | bit)][k];
      } else if (ri && cj) {
        out[e][k] = (1.0 - ch.gamma) * s[e][k];
      } else {
        out[e][k] = ch.coherence * s[e][k];
      }
    }
  }
  s = out;
}

// One two-qubit channel in kernel-ready form.
struct Prepared {
  int a = 0;
  int b = 0;
  bool monomial = false;
  std::vector<Term> terms;  // full superoperator (monomial) or relaxation only
  std::array<Coef, 16> v{};  // V, row-major (dense case)
  std::array<Coef, 16> vc{};  // conj(V), row-major (dense case)
};

std::vector<Term> sparse_terms(const std::array<std::array<cd, 16>, 16>& s) {
  std::vector<Term> terms;
  for (int e = 0; e < 16; ++e) {
    for (int k = 0; k < 16; ++k) {
      if (s[e][k] != cd{0.0, 0.0}) terms.push_back({e, k, make_coef(s[e][k])});
    }
  }
  return terms;
}

Prepared prepare(const Matrix4& v, int a, int b, const RelaxationChannel* relax_a,
                 const RelaxationChannel* relax_b) {
  if (a == b) throw std::invalid_argument("two-qubit operands must differ");
  Prepared op;
  op.a = a;
  op.b = b;
  std::array<int, 4> src{};
  std::array<cd, 4> phase{};
  op.monomial = monomial_form(v, src, phase);
  std::array<std::array<cd, 16>, 16> s{};
  if (op.monomial) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) s[4 * i + j][4 * src[i] + src[j]] = phase[i] * std::conj(phase[j]);
    }
  } else {
    for (int e = 0; e < 16; ++e) s[e][e] = 1.0;
    for (int k = 0; k < 16; ++k) {
      op.v[k] = make_coef(v[k]);
      op.vc[k] = make_coef(std::conj(v[k]));
    }
  }
  if (relax_a != nullptr) append_relaxation(s, 2, *relax_a);
  if (relax_b != nullptr) append_relaxation(s, 1, *relax_b);
  bool identity = true;
  for (int e = 0; e < 16; ++e) {
    for (int k = 0; k < 16; ++k) identity = identity && s[e][k] == (e == k ? cd{1.0, 0.0} : cd{0.0, 0.0});
  }
  if (!(identity && !op.monomial)) op.terms = sparse_terms(s);
  return op;
}

inline void apply_terms(const std::vector<Term>& terms, const v4d (&in)[16], v4d (&out)[16]) {
  for (auto& o : out) o = v4d{0.0, 0.0, 0.0, 0.0};
  for (const Term& t : terms) out[t.dst] += cmul(t.coef, in[t.src]);
}

// m = V in V^dagger on one pair of blocks.
inline void dense_transform(const Prepared& op, const v4d (&in)[16], v4d (&out)[16]) {
  v4d vm[16];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      vm[4 * i + j] = cmul(op.v[4 * i], in[j]) + cmul(op.v[4 * i + 1], in[4 + j]) +
                      cmul(op.v[4 * i + 2], in[8 + j]) + cmul(op.v[4 * i + 3], in[12 + j]);
    }
  }
  // (vm V^dagger)[i][j] = sum_k vm[i][k] conj(V[j][k]).
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out[4 * i + j] = cmul(op.vc[4 * j], vm[4 * i]) + cmul(op.vc[4 * j + 1], vm[4 * i + 1]) +
                       cmul(op.vc[4 * j + 2], vm[4 * i + 2]) + cmul(op.vc[4 * j + 3], vm[4 * i + 3]);
    }
  }
}

// Applies op to a density matrix of nq qubits stored as r | (c << nq).
void run_kernel(const Prepared& op, cd* rho, int nq) {
  std::array<int, 4> zeros{op.a, op.b, op.a + nq, op.b + nq};
  std::sort(zeros.begin(), zeros.end());
  const std::size_t ra = std::size_t{1} << op.a, rb = std::size_t{1} << op.b;
  const std::size_t ca = ra << nq, cb = rb << nq;
  std::array<std::size_t, 16> off{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      off[4 * i + j] = ((i & 2) ? ra : 0) | ((i & 1) ? rb : 0) | ((j & 2) ? ca : 0) | ((j & 1) ? cb : 0);
    }
  }
  const std::size_t blocks = (std::size_t{1} << (2 * nq)) / 16;
  v4d in[16];
  v4d out[16];
  v4d tmp[16];
  for (std::size_t k = 0; k < blocks; k += 2) {
    cd* b0 = rho + insert_zeros(k, zeros);
    // A lone last block (only when nq = 2) is paired with itself.
    cd* b1 = k + 1 < blocks ? rho + insert_zeros(k + 1, zeros) : b0;
    for (int e = 0; e < 16; ++e) in[e] = load_pair(b0 + off[e], b1 + off[e]);
    if (op.monomial) {
      apply_terms(op.terms, in, out);
    } else if (op.terms.empty()) {
      dense_transform(op, in, out);
    } else {
      dense_transform(op, in, tmp);
      apply_terms(op.terms, tmp, out);
    }
    for (int e = 0; e < 16; ++e) store_pair(b0 + off[e], b1 + off[e], out[e]);
  }
}

// ---------------------------------------------------------------------------
// Pauli-coefficient engine. rho = 2^-n sum_P c_P P with real c_P = Tr(rho P).
// Qubit q owns base-4 digit q of the index, with I, X, Y, Z = 0, 1, 2, 3.

// Applies the channel of op to the 4x4 operator m (index 2 bit_a + bit_b).
std::array<cd, 16> channel_on(const ChannelOp& op, const std::array<cd, 16>& m) {
  std::array<cd, 16> vm{};
  std::array<cd, 16> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) vm[4 * i + j] += op.v[4 * i + k] * m[4 * k + j];
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) out[4 * i + j] += vm[4 * i + k] * std::conj(op.v[4 * j + k]);
    }
  }
  auto relax = [&out](int bit, const RelaxationChannel& ch) {
    std::array<cd, 16> r = out;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const bool ri = (i & bit) != 0, cj = (j & bit) != 0;
        if (!ri && !cj) {
          r[4 * i + j] = out[4 * i + j] + ch.gamma * out[4 * (i | bit) + (j | bit)];
        } else if (ri && cj) {
          r[4 * i + j] = (1.0 - ch.gamma) * out[4 * i + j];
        } else {
          r[4 * i + j] = ch.coherence * out[4 * i + j];
        }
      }
    }
    out = r;
  };
  if (op.relax_a) relax(2, *op.relax_a);
  if (op.relax_b) relax(1, *op.relax_b);
  return out;
}

const std::array<Matrix2, 4>& pauli_matrices() {
  static const std::array<Matrix2, 4> p{Matrix2{1.0, 0.0, 0.0, 1.0}, Matrix2{0.0, 1.0, 1.0, 0.0},
                                        Matrix2{0.0, cd{0.0, -1.0}, cd{0.0, 1.0}, 0.0},
                                        Matrix2{1.0, 0.0, 0.0, -1.0}};
  return p;
}

std::array<cd, 16> pauli_pair(int pa, int pb) {
  const auto& P = pauli_matrices();
  std::array<cd, 16> m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[4 * i + j] = P[pa][2 * (i >> 1) + (j >> 1)] * P[pb][2 * (i & 1) + (j & 1)];
  }
  return m;
}

struct RealTerm {
  int dst;
  int src;
  v4d coef;
};

// c'_P = sum_Q R[P][Q] c_Q with R[P][Q] = Tr(P E(Q)) / 4; entries index 4 P_a + P_b.
std::vector<RealTerm> transfer_terms(const ChannelOp& op) {
  std::array<std::array<double, 16>, 16> r{};
  for (int q = 0; q < 16; ++q) {
    const auto image = channel_on(op, pauli_pair(q >> 2, q & 3));
    for (int pidx = 0; pidx < 16; ++pidx) {
      const auto pm = pauli_pair(pidx >> 2, pidx & 3);
      cd tr = 0.0;
      for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) tr += pm[4 * i + k] * image[4 * k + i];
      }
      r[pidx][q] = tr.real() / 4.0;
    }
  }
  std::vector<RealTerm> terms;
  for (int pidx = 0; pidx < 16; ++pidx) {
    for (int q = 0; q < 16; ++q) {
      const double c = r[pidx][q];
      if (std::abs(c) > 1e-14) terms.push_back({pidx, q, v4d{c, c, c, c}});
    }
  }
  return terms;
}

class PauliState {
 public:
  static PauliState from_distribution(int n, const std::vector<double>& probs) {
    // c_S = sum_x p(x) (-1)^{x . S} on the I/Z strings.
    std::vector<double> w = probs;
    walsh_hadamard(w);
    PauliState st(n);
    for (std::size_t s = 0; s < w.size(); ++s) st.c_[z_string(s)] = w[s];
    return st;
  }

  void apply(const ChannelOp& op) {
    const auto terms = transfer_terms(op);
    int lane = 0;
    while (lane == op.a || lane == op.b) ++lane;
    if (lane >= n_) {
      apply_scalar(op, terms);
    } else if (lane == 0) {
      run<true>(op, terms, lane);
    } else {
      run<false>(op, terms, lane);
    }
  }

  [[nodiscard]] std::vector<double> distribution() const {
    std::vector<double> w(std::size_t{1} << n_);
    for (std::size_t s = 0; s < w.size(); ++s) w[s] = c_[z_string(s)];
    walsh_hadamard(w);
    const double scale = 1.0 / static_cast<double>(w.size());
    for (double& x : w) x = std::max(0.0, x * scale);
    return w;
  }

 private:
  explicit PauliState(int n) : n_(n), c_(std::size_t{1} << (2 * n), 0.0) {}

  // Index of the Pauli string with Z on the set bits of s and I elsewhere.
  static std::size_t z_string(std::size_t s) {
    std::size_t idx = 0;
    for (int q = 0; s >> q; ++q) {
      if ((s >> q) & 1U) idx |= std::size_t{3} << (2 * q);
    }
    return idx;
  }

  static void walsh_hadamard(std::vector<double>& w) {
    for (std::size_t h = 1; h < w.size(); h <<= 1) {
      for (std::size_t i = 0; i < w.size(); i += 2 * h) {
        for (std::size_t j = i; j < i + h; ++j) {
          const double x = w[j], y = w[j + h];
          w[j] = x + y;
          w[j + h] = x - y;
        }
      }
    }
  }

  [[nodiscard]] std::array<std::size_t, 16> offsets(const ChannelOp& op) const {
    std::array<std::size_t, 16> off{};
    for (std::size_t pa = 0; pa < 4; ++pa) {
      for (std::size_t pb = 0; pb < 4; ++pb) off[4 * pa + pb] = (pa << (2 * op.a)) | (pb << (2 * op.b));
    }
    return off;
  }

  void apply_scalar(const ChannelOp& op, const std::vector<RealTerm>& terms) {
    const auto off = offsets(op);
    const std::array<int, 4> zeros = sorted_zeros(std::array<int, 4>{2 * op.a, 2 * op.a + 1, 2 * op.b, 2 * op.b + 1});
    const std::size_t blocks = c_.size() / 16;
    for (std::size_t k = 0; k < blocks; ++k) {
      double* base = c_.data() + insert_zeros(k, zeros);
      double in[16];
      double out[16] = {};
      for (int e = 0; e < 16; ++e) in[e] = base[off[e]];
      for (const RealTerm& t : terms) out[t.dst] += t.coef[0] * in[t.src];
      for (int e = 0; e < 16; ++e) base[off[e]] = out[e];
    }
  }

  // Four lanes run over the digit of qubit `lane`.
  template <bool Contiguous>
  void run(const ChannelOp& op, const std::vector<RealTerm>& terms, int lane) {
    const auto off = offsets(op);
    const std::array<int, 6> zeros =
        sorted_zeros(std::array<int, 6>{2 * op.a, 2 * op.a + 1, 2 * op.b, 2 * op.b + 1, 2 * lane, 2 * lane + 1});
    const std::size_t stride = std::size_t{1} << (2 * lane);
    const std::size_t blocks = c_.size() / 64;
    v4d in[16];
    v4d out[16];
    for (std::size_t k = 0; k < blocks; ++k) {
      double* base = c_.data() + insert_zeros(k, zeros);
      for (int e = 0; e < 16; ++e) {
        const double* p = base + off[e];
        if constexpr (Contiguous) {
          std::memcpy(&in[e], p, sizeof(v4d));
        } else {
          in[e] = v4d{p[0], p[stride], p[2 * stride], p[3 * stride]};
        }
        out[e] = v4d{0.0, 0.0, 0.0, 0.0};
      }
      for (const RealTerm& t : terms) out[t.dst] += t.coef * in[t.src];
      for (int e = 0; e < 16; ++e) {
        double* p = base + off[e];
        if constexpr (Contiguous) {
          std::memcpy(p, &out[e], sizeof(v4d));
        } else {
          for (std::size_t l = 0; l < 4; ++l) p[l * stride] = out[e][l];
        }
      }
    }
  }

  template <std::size_t N>
  static std::array<int, N> sorted_zeros(std::array<int, N> z) {
    std::sort(z.begin(), z.end());
    return z;
  }

  int n_;
  std::vector<double> c_;
};

}  // namespace

DensityMatrix::DensityMatrix(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kDensityMatrixLimit) {
    throw std::invalid_argument("density matrix supports 1.." + std::to_string(kDensityMatrixLimit) +
                                " qubits, got " + std::to_string(num_qubits));
  }
  rho_.assign(std::size_t{1} << (2 * num_qubits), cd{0.0, 0.0});
  rho_[0] = 1.0;
}

void DensityMatrix::apply_1q(const Matrix2& u, int q) {
  const std::size_t rbit = std::size_t{1} << q;
  const std::size_t cbit = std::size_t{1} << (q + n_);
  const std::array<int, 2> zeros{q, q + n_};
  const std::size_t blocks = rho_.size() / 4;
  const cd u0 = u[0], u1 = u[1], u2 = u[2], u3 = u[3];
  const cd c0 = std::conj(u0), c1 = std::conj(u1), c2 = std::conj(u2), c3 = std::conj(u3);
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::size_t i = insert_zeros(k, zeros);
    cd& m00 = rho_[i];
    cd& m10 = rho_[i | rbit];
    cd& m01 = rho_[i | cbit];
    cd& m11 = rho_[i | rbit | cbit];
    // T = U m, then m' = T U†.
    const cd t00 = u0 * m00 + u1 * m10, t01 = u0 * m01 + u1 * m11;
    const cd t10 = u2 * m00 + u3 * m10, t11 = u2 * m01 + u3 * m11;
    m00 = t00 * c0 + t01 * c1;
    m01 = t00 * c2 + t01 * c3;
    m10 = t10 * c0 + t11 * c1;
    m11 = t10 * c2 + t11 * c3;
  }
}

void DensityMatrix::apply_2q(const Matrix4& v, int a, int b, const RelaxationChannel* relax_a,
                             const RelaxationChannel* relax_b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::invalid_argument("qubit index out of range");
  run_kernel(prepare(v, a, b, relax_a, relax_b), rho_.data(), n_);
}

void DensityMatrix::apply(const ChannelOp& op) {
  apply_2q(op.v, op.a, op.b, op.relax_a ? &*op.relax_a : nullptr, op.relax_b ? &*op.relax_b : nullptr);
}

DensityMatrix DensityMatrix::from_diagonal(int num_qubits, const std::vector<double>& probs) {
  DensityMatrix d(num_qubits);
  if (probs.size() != (std::size_t{1} << num_qubits)) throw std::invalid_argument("diagonal size mismatch");
  d.rho_[0] = 0.0;
  for (std::size_t r = 0; r < probs.size(); ++r) d.rho_[r | (r << num_qubits)] = probs[r];
  return d;
}

void DensityMatrix::apply_relaxation(int q, const RelaxationChannel& channel) {
  const std::size_t rbit = std::size_t{1} << q;
  const std::size_t cbit = std::size_t{1} << (q + n_);
  const std::array<int, 2> zeros{q, q + n_};
  const std::size_t blocks = rho_.size() / 4;
  const double keep = 1.0 - channel.gamma;
  for (std::size_t k = 0; k < blocks; ++k) {
    const std::size_t i = insert_zeros(k, zeros);
    rho_[i] += channel.gamma * rho_[i | rbit | cbit];
    rho_[i | rbit | cbit] *= keep;
    rho_[i | rbit] *= channel.coherence;
    rho_[i | cbit] *= channel.coherence;
  }
}

std::vector<double> DensityMatrix::diagonal() const {
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<double> p(dim);
  for (std::size_t r = 0; r < dim; ++r) p[r] = std::max(0.0, rho_[r | (r << n_)].real());
  return p;
}

double DensityMatrix::trace() const {
  const std::size_t dim = std::size_t{1} << n_;
  double s = 0.0;
  for (std::size_t r = 0; r < dim; ++r) s += rho_[r | (r << n_)].real();
  return s;
}

std::vector<double> evolve_distribution(int num_qubits, const std::vector<ChannelOp>& ops) {
  if (num_qubits < 2 || num_qubits > kDensityMatrixLimit) {
    throw std::invalid_argument("density matrix supports 2.." + std::to_string(kDensityMatrixLimit) +
                                " qubits for channel sequences");
  }
  // The state stays diagonal while every op maps basis states to basis
  // states. An op whose wires are never touched again may also act on the
  // populations alone: later Z measurements cannot see the coherences it
  // creates. Either way only the 2^n populations need tracking.
  std::vector<std::size_t> last_use(static_cast<std::size_t>(num_qubits), 0);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].a < 0 || ops[i].b < 0 || ops[i].a >= num_qubits || ops[i].b >= num_qubits || ops[i].a == ops[i].b) {
      throw std::invalid_argument("channel op has invalid operands");
    }
    last_use[ops[i].a] = i;
    last_use[ops[i].b] = i;
  }
  std::vector<double> probs(std::size_t{1} << num_qubits, 0.0);
  probs[0] = 1.0;
  std::size_t i = 0;
  for (; i < ops.size(); ++i) {
    const ChannelOp& op = ops[i];
    std::array<int, 4> src{};
    std::array<cd, 4> phase{};
    const bool monomial = monomial_form(op.v, src, phase);
    if (!monomial && (last_use[op.a] != i || last_use[op.b] != i)) break;
    double transition[4][4];
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) transition[r][c] = std::norm(op.v[4 * r + c]);
    }
    const std::size_t ba = std::size_t{1} << op.a, bb = std::size_t{1} << op.b;
    const std::array<int, 2> zeros{std::min(op.a, op.b), std::max(op.a, op.b)};
    const std::size_t blocks = probs.size() / 4;
    const std::size_t idx[4] = {0, bb, ba, ba | bb};
    for (std::size_t k = 0; k < blocks; ++k) {
      double* base = probs.data() + insert_zeros(k, zeros);
      double in[4];
      for (int s = 0; s < 4; ++s) in[s] = base[idx[s]];
      double out[4];
      for (int s = 0; s < 4; ++s) {
        out[s] = monomial ? in[src[s]]
                          : transition[s][0] * in[0] + transition[s][1] * in[1] + transition[s][2] * in[2] +
                                transition[s][3] * in[3];
      }
      if (op.relax_a) {
        const double g = op.relax_a->gamma;
        for (int lo = 0; lo < 2; ++lo) {
          out[lo] += g * out[2 | lo];
          out[2 | lo] *= 1.0 - g;
        }
      }
      if (op.relax_b) {
        const double g = op.relax_b->gamma;
        for (int hi = 0; hi < 4; hi += 2) {
          out[hi] += g * out[hi | 1];
          out[hi | 1] *= 1.0 - g;
        }
      }
      for (int s = 0; s < 4; ++s) base[idx[s]] = out[s];
    }
  }
  if (i == ops.size()) return probs;
  PauliState state = PauliState::from_distribution(num_qubits, probs);
  for (; i < ops.size(); ++i) state.apply(ops[i]);
  return state.distribution();
}

void apply_thermal_relaxation(DensityMatrix& rho, int q, double t1, double t2, double t) {
  if (q < 0 || q >= rho.num_qubits()) throw std::invalid_argument("qubit index out of range");
  rho.apply_relaxation(q, RelaxationChannel::make(t1, t2, t));
}

}  // namespace swapqaoa
