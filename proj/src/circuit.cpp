#include "swapqaoa/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swapqaoa {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  bool parametric;
};

constexpr std::array<KindInfo, 11> kKinds{{
    {GateKind::X, "x", 1, false},
    {GateKind::SX, "sx", 1, false},
    {GateKind::RZ, "rz", 1, true},
    {GateKind::CX, "cx", 2, false},
    {GateKind::ECR, "ecr", 2, false},
    {GateKind::SWAP, "swap", 2, false},
    {GateKind::RZZ, "rzz", 2, true},
    {GateKind::H, "h", 1, false},
    {GateKind::RX, "rx", 1, true},
    {GateKind::Barrier, "barrier", -1, false},
    {GateKind::Measure, "measure", 1, false},
}};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("unknown gate kind");
}

constexpr std::array<std::string_view, 5> kRoleNames{"none", "init", "cost", "swap", "mixer"};

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) { return info(kind).arity; }
bool is_two_qubit(GateKind kind) { return info(kind).arity == 2; }
bool is_parametric(GateKind kind) { return info(kind).parametric; }

Gate Gate::make(GateKind kind, std::vector<int> qubits, double param, GateRole role) {
  const int arity = gate_arity(kind);
  if (arity > 0 && static_cast<int>(qubits.size()) != arity) {
    throw std::invalid_argument(std::string(gate_name(kind)) + " acts on " + std::to_string(arity) + " qubit(s)");
  }
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  g.param = is_parametric(kind) ? canonical_angle(param) : 0.0;
  g.role = role;
  return g;
}

double canonical_angle(double theta) {
  constexpr double period = 4.0 * kPi;
  double r = std::fmod(theta, period);
  if (r > 2.0 * kPi) r -= period;
  if (r <= -2.0 * kPi) r += period;
  return r;
}

Circuit::Circuit(int n) : num_qubits(n), final_permutation(static_cast<std::size_t>(n)) {
  for (int q = 0; q < n; ++q) final_permutation[q] = q;
}

void Circuit::append(Gate g) { ops.push_back(std::move(g)); }

void Circuit::append(const std::vector<Gate>& gates) { ops.insert(ops.end(), gates.begin(), gates.end()); }

void Circuit::validate() const {
  for (std::size_t k = 0; k < ops.size(); ++k) {
    const Gate& g = ops[k];
    const int arity = gate_arity(g.kind);
    if (arity >= 0 && static_cast<int>(g.qubits.size()) != arity) {
      throw std::invalid_argument("op " + std::to_string(k) + " (" + std::string(gate_name(g.kind)) +
                                  ") has " + std::to_string(g.qubits.size()) + " operands, expected " +
                                  std::to_string(arity));
    }
    for (int q : g.qubits) {
      if (q < 0 || q >= num_qubits) {
        throw std::invalid_argument("op " + std::to_string(k) + " operand " + std::to_string(q) +
                                    " out of range");
      }
    }
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) {
      throw std::invalid_argument("op " + std::to_string(k) + " repeats an operand");
    }
  }
  if (static_cast<int>(final_permutation.size()) != num_qubits) {
    throw std::invalid_argument("final_permutation has wrong length");
  }
  std::vector<char> hit(static_cast<std::size_t>(num_qubits), 0);
  for (int w : final_permutation) {
    if (w < 0 || w >= num_qubits || hit[w]) throw std::invalid_argument("final_permutation is not a bijection");
    hit[w] = 1;
  }
}

bool Circuit::has_free_parameters() const {
  return std::any_of(ops.begin(), ops.end(), [](const Gate& g) { return !g.ref.bound(); });
}

Circuit Circuit::bind(const std::vector<double>& values) const {
  Circuit out = *this;
  for (Gate& g : out.ops) {
    if (g.ref.bound()) continue;
    if (g.ref.slot >= static_cast<int>(values.size())) {
      throw std::invalid_argument("parameter slot " + std::to_string(g.ref.slot) + " not provided");
    }
    g.param = canonical_angle(g.ref.scale * values[g.ref.slot]);
    g.ref = ParamRef{};
  }
  return out;
}

std::vector<Gate> decompose_rzz(double theta, int i, int j, GateRole role) {
  if (i == j) throw std::invalid_argument("RZZ needs two distinct qubits");
  return {Gate::make(GateKind::CX, {i, j}, 0.0, role), Gate::make(GateKind::RZ, {j}, 2.0 * theta, role),
          Gate::make(GateKind::CX, {i, j}, 0.0, role)};
}

std::vector<Gate> merge_rzz_swap(double theta, int i, int j, GateRole role) {
  if (i == j) throw std::invalid_argument("RZZ needs two distinct qubits");
  return {Gate::make(GateKind::CX, {i, j}, 0.0, role), Gate::make(GateKind::RZ, {j}, 2.0 * theta, role),
          Gate::make(GateKind::CX, {j, i}, 0.0, role), Gate::make(GateKind::CX, {i, j}, 0.0, role)};
}

std::vector<Gate> decompose_swap(int i, int j) {
  if (i == j) throw std::invalid_argument("SWAP needs two distinct qubits");
  return {Gate::make(GateKind::CX, {i, j}, 0.0, GateRole::Swap), Gate::make(GateKind::CX, {j, i}, 0.0, GateRole::Swap),
          Gate::make(GateKind::CX, {i, j}, 0.0, GateRole::Swap)};
}

Circuit barrier_rz(const Circuit& circuit) {
  Circuit out = circuit;
  for (Gate& g : out.ops) {
    if (g.kind == GateKind::RZ && g.role == GateRole::Cost) {
      g.kind = GateKind::Barrier;
      g.param = 0.0;
      g.ref = ParamRef{};
    }
  }
  return out;
}

std::map<GateKind, int> count_gates(const Circuit& circuit) {
  std::map<GateKind, int> counts;
  for (const auto& k : kKinds) {
    if (k.kind != GateKind::Barrier) counts[k.kind] = 0;
  }
  for (const Gate& g : circuit.ops) {
    if (g.kind != GateKind::Barrier) ++counts[g.kind];
  }
  return counts;
}

int two_qubit_count(const Circuit& circuit) {
  return static_cast<int>(std::count_if(circuit.ops.begin(), circuit.ops.end(),
                                        [](const Gate& g) { return is_two_qubit(g.kind); }));
}

Circuit to_native(const Circuit& circuit) {
  Circuit out(circuit.num_qubits);
  out.final_permutation = circuit.final_permutation;
  // Fixed dressing gates never carry the cost tag: only the parameterized RZ
  // of an RZZ is a cost rotation.
  auto dress = [](const Gate& src) { return src.role == GateRole::Cost ? GateRole::None : src.role; };
  auto rz = [&](int q, double t, const Gate& src) { out.append(Gate::make(GateKind::RZ, {q}, t, dress(src))); };
  auto sx = [&](int q, const Gate& src) { out.append(Gate::make(GateKind::SX, {q}, 0.0, dress(src))); };
  auto cx = [&](int c, int t, const Gate& src) {
    out.append(Gate::make(GateKind::X, {c}, 0.0, dress(src)));
    out.append(Gate::make(GateKind::ECR, {c, t}, 0.0, src.role));
    rz(c, kPi / 2, src);
    sx(t, src);
  };
  for (const Gate& g : circuit.ops) {
    switch (g.kind) {
      case GateKind::CX:
        cx(g.qubits[0], g.qubits[1], g);
        break;
      case GateKind::SWAP:
        cx(g.qubits[0], g.qubits[1], g);
        cx(g.qubits[1], g.qubits[0], g);
        cx(g.qubits[0], g.qubits[1], g);
        break;
      case GateKind::RZZ: {
        cx(g.qubits[0], g.qubits[1], g);
        Gate r = g;
        r.kind = GateKind::RZ;
        r.qubits = {g.qubits[1]};
        out.append(std::move(r));
        cx(g.qubits[0], g.qubits[1], g);
        break;
      }
      case GateKind::H:
        rz(g.qubits[0], kPi / 2, g);
        sx(g.qubits[0], g);
        rz(g.qubits[0], kPi / 2, g);
        break;
      case GateKind::RX: {
        const int q = g.qubits[0];
        rz(q, kPi / 2, g);
        sx(q, g);
        Gate mid = g;
        mid.kind = GateKind::RZ;
        // RZ(θ + π) is emitted as RZ(θ), RZ(π) so a free θ stays free.
        out.append(std::move(mid));
        rz(q, kPi, g);
        sx(q, g);
        rz(q, kPi / 2, g);
        break;
      }
      default:
        out.append(g);
    }
  }
  return out;
}

Matrix2 single_qubit_matrix(GateKind kind, double t) {
  const cd i{0.0, 1.0};
  switch (kind) {
    case GateKind::X:
      return {0.0, 1.0, 1.0, 0.0};
    case GateKind::SX:
      return {cd{0.5, 0.5}, cd{0.5, -0.5}, cd{0.5, -0.5}, cd{0.5, 0.5}};
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      return {r, r, r, -r};
    }
    case GateKind::RZ:
      return {std::exp(-i * (t / 2)), 0.0, 0.0, std::exp(i * (t / 2))};
    case GateKind::RX: {
      const double c = std::cos(t / 2);
      const double s = std::sin(t / 2);
      return {c, -i * s, -i * s, c};
    }
    default:
      throw std::invalid_argument("not a single-qubit unitary: " + std::string(gate_name(kind)));
  }
}

Matrix4 two_qubit_matrix(GateKind kind, double t) {
  const cd i{0.0, 1.0};
  Matrix4 m{};
  switch (kind) {
    case GateKind::CX:
      m[0] = m[5] = m[11] = m[14] = 1.0;
      return m;
    case GateKind::SWAP:
      m[0] = m[6] = m[9] = m[15] = 1.0;
      return m;
    case GateKind::RZZ: {
      const cd same = std::exp(-i * (t / 2));
      const cd diff = std::exp(i * (t / 2));
      m[0] = same;
      m[5] = diff;
      m[10] = diff;
      m[15] = same;
      return m;
    }
    case GateKind::ECR: {
      // (X⊗I - Y⊗X) / √2 with the first operand as the high bit.
      const double r = std::numbers::sqrt2 / 2.0;
      m[0 * 4 + 2] = r;
      m[0 * 4 + 3] = i * r;
      m[1 * 4 + 2] = i * r;
      m[1 * 4 + 3] = r;
      m[2 * 4 + 0] = r;
      m[2 * 4 + 1] = -i * r;
      m[3 * 4 + 0] = -i * r;
      m[3 * 4 + 1] = r;
      return m;
    }
    default:
      throw std::invalid_argument("not a two-qubit unitary: " + std::string(gate_name(kind)));
  }
}

nlohmann::json to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["num_qubits"] = circuit.num_qubits;
  j["final_permutation"] = circuit.final_permutation;
  auto& ops = j["ops"] = nlohmann::json::array();
  for (const Gate& g : circuit.ops) {
    nlohmann::json o;
    o["kind"] = gate_name(g.kind);
    o["qubits"] = g.qubits;
    if (is_parametric(g.kind)) o["param"] = g.param;
    if (g.role != GateRole::None) o["role"] = kRoleNames[static_cast<std::size_t>(g.role)];
    if (!g.ref.bound()) {
      o["slot"] = g.ref.slot;
      o["scale"] = g.ref.scale;
    }
    ops.push_back(std::move(o));
  }
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c(j.at("num_qubits").get<int>());
  if (j.contains("final_permutation")) c.final_permutation = j.at("final_permutation").get<std::vector<int>>();
  for (const auto& o : j.at("ops")) {
    Gate g;
    g.kind = gate_kind_from_name(o.at("kind").get<std::string>());
    g.qubits = o.at("qubits").get<std::vector<int>>();
    g.param = o.value("param", 0.0);
    if (o.contains("role")) {
      const auto name = o.at("role").get<std::string>();
      const auto it = std::find(kRoleNames.begin(), kRoleNames.end(), name);
      if (it == kRoleNames.end()) throw std::invalid_argument("unknown gate role '" + name + "'");
      g.role = static_cast<GateRole>(it - kRoleNames.begin());
    }
    if (o.contains("slot")) {
      g.ref.slot = o.at("slot").get<int>();
      g.ref.scale = o.value("scale", 1.0);
    }
    c.append(std::move(g));
  }
  c.validate();
  return c;
}

nlohmann::json gate_counts_json(const std::map<GateKind, int>& counts) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [kind, n] : counts) j[std::string(gate_name(kind))] = n;
  return j;
}

}  // namespace swapqaoa
