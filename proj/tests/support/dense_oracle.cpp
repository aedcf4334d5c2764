// Copyright 2026 The ghzsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dense_oracle.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <variant>

namespace ghzsim::testing {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const std::array<cplx, 4> kX = {0, 1, 1, 0};
const std::array<cplx, 4> kY = {0, cplx(0, -1), cplx(0, 1), 0};
const std::array<cplx, 4> kZ = {1, 0, 0, -1};
const std::array<cplx, 4> kH = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
const std::array<cplx, 4> kS = {1, 0, 0, cplx(0, 1)};

const std::array<cplx, 4>& pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::X: return kX;
    case Pauli::Y: return kY;
    case Pauli::Z: return kZ;
    default: break;
  }
  throw std::invalid_argument("identity has no matrix here");
}

void vec_1q(std::vector<cplx>& psi, int q, const std::array<cplx, 4>& u) {
  const std::size_t b = std::size_t{1} << q;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & b) continue;
    const cplx v0 = psi[i], v1 = psi[i | b];
    psi[i] = u[0] * v0 + u[1] * v1;
    psi[i | b] = u[2] * v0 + u[3] * v1;
  }
}

void vec_cnot(std::vector<cplx>& psi, int c, int t) {
  const std::size_t cb = std::size_t{1} << c, tb = std::size_t{1} << t;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
  }
}

void vec_cz(std::vector<cplx>& psi, int a, int b) {
  const std::size_t ab = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & ab) == ab) psi[i] = -psi[i];
  }
}

// A physical primitive on the 2n-qubit pair; qubits are copy * n + node - 1.
struct Primitive {
  enum Kind { Cnot, Cz, S } kind;
  int q0;
  int q1;
};

std::vector<Primitive> primitives(const GateDescriptor& gate, int n) {
  std::vector<Primitive> out;
  if (const auto* h = std::get_if<HGate>(&gate)) {
    for (int node = 0; node < n; ++node) {
      const Primitive c12{Primitive::Cnot, node, n + node};
      const Primitive c21{Primitive::Cnot, n + node, node};
      switch (h->kind) {
        case HKind::Identity: break;
        case HKind::CNOT12: out.push_back(c12); break;
        case HKind::CNOT21: out.push_back(c21); break;
        case HKind::SWAP: out.insert(out.end(), {c12, c21, c12}); break;
        case HKind::DCX21: out.insert(out.end(), {c12, c21}); break;
        case HKind::DCX12: out.insert(out.end(), {c21, c12}); break;
      }
    }
    return out;
  }
  const auto& b = std::get<BGate>(gate);
  for (int node : {b.node_i, b.node_j}) {
    const int qa = node - 1, qb = n + node - 1;
    if (b.s1) out.push_back({Primitive::S, qa, -1});
    if (b.s2) out.push_back({Primitive::S, qb, -1});
    if (b.cz) out.push_back({Primitive::Cz, qa, qb});
  }
  return out;
}

std::vector<cplx> pair_vector(int n, std::uint32_t label) {
  const auto va = ghz_basis_vector(n, label >> n);
  const auto vb = ghz_basis_vector(n, label & ((1u << n) - 1u));
  std::vector<cplx> psi(std::size_t{1} << (2 * n));
  for (std::size_t i = 0; i < va.size(); ++i) {
    for (std::size_t j = 0; j < vb.size(); ++j) psi[i | (j << n)] = va[i] * vb[j];
  }
  return psi;
}

double overlap(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return std::abs(s);
}

std::uint32_t identify_pair(const std::vector<cplx>& psi, int n) {
  for (std::uint32_t l = 0; l < (1u << (2 * n)); ++l) {
    if (overlap(pair_vector(n, l), psi) > 1 - 1e-9) return l;
  }
  throw std::logic_error("state left the GHZ basis");
}

// Paulis (qubit, matrix) taking GHZ basis state `bits` back to the perfect state.
std::vector<std::pair<int, Pauli>> correction(int n, std::uint32_t bits) {
  std::vector<std::pair<int, Pauli>> out;
  int c = 0;
  for (int k = 1; k < n; ++k) {
    c ^= (bits >> (n - 1 - k)) & 1;
    if (c) out.emplace_back(k, Pauli::X);
  }
  if ((bits >> (n - 1)) & 1u) out.emplace_back(0, Pauli::Z);
  return out;
}

// Corrections for both copies of a gate, as (pair qubit, Pauli).
std::vector<std::pair<int, Pauli>> gate_correction(const GateDescriptor& gate, int n) {
  auto psi = pair_vector(n, 0);
  for (const auto& p : primitives(gate, n)) {
    if (p.kind == Primitive::Cnot) vec_cnot(psi, p.q0, p.q1);
    if (p.kind == Primitive::Cz) vec_cz(psi, p.q0, p.q1);
    if (p.kind == Primitive::S) vec_1q(psi, p.q0, kS);
  }
  const std::uint32_t image = identify_pair(psi, n);
  auto out = correction(n, image >> n);
  for (auto [q, p] : correction(n, image & ((1u << n) - 1u))) out.emplace_back(n + q, p);
  return out;
}

bool trivial(const GateDescriptor& gate) {
  if (const auto* h = std::get_if<HGate>(&gate)) return h->kind == HKind::Identity;
  const auto& b = std::get<BGate>(gate);
  return !b.cz && !b.s1 && !b.s2;
}

std::array<double, 4> channel_probs(const NoiseModel& m) {
  if (m.bias) return {1 - m.bias->px - m.bias->py - m.bias->pz, m.bias->px, m.bias->py, m.bias->pz};
  // Full depolarization with probability p: each Pauli (and I) p/4.
  return {1 - 0.75 * m.p_gate, m.p_gate / 4, m.p_gate / 4, m.p_gate / 4};
}

bool passes(std::uint32_t outcome, int n, Basis basis) {
  if (basis == Basis::X) return std::popcount(outcome) % 2 == 0;
  const std::uint32_t all = (1u << n) - 1u;
  return outcome == 0 || outcome == all;
}

class Register {
 public:
  Register(const CircuitConfig& config)
      : n_(config.n), slots_(config.R), rho_(config.n * config.R), live_(config.R, false) {
    rho_.at(0, 0) = 1;
    const std::size_t d = std::size_t{1} << n_;
    raw_.assign(d * d, 0);
    const auto g = ghz_basis_vector(n_, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) raw_[i * d + j] = config.f_in * g[i] * std::conj(g[j]);
      raw_[i * d + i] += (1 - config.f_in) / static_cast<double>(d);
    }
  }

  int qubit(int slot, int node) const { return slot * n_ + node - 1; }
  std::size_t slot_bits(std::size_t index, int slot) const {
    return (index >> (slot * n_)) & ((std::size_t{1} << n_) - 1u);
  }
  std::size_t with_slot(std::size_t index, int slot, std::size_t bits) const {
    const std::size_t mask = ((std::size_t{1} << n_) - 1u) << (slot * n_);
    return (index & ~mask) | (bits << (slot * n_));
  }

  void fill(int slot) {
    trace_out(slot);
    const std::size_t d = std::size_t{1} << n_;
    const std::size_t dim = rho_.dim();
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const cplx base = rest_[i * dim + j];
        rho_.at(i, j) = base * raw_[slot_bits(i, slot) * d + slot_bits(j, slot)];
      }
    }
    live_[static_cast<std::size_t>(slot)] = true;
  }

  void gate(const GateDescriptor& g, int a, int b, const NoiseModel& noise) {
    auto map = [&](int pair_qubit) {
      return pair_qubit < n_ ? qubit(a, pair_qubit + 1) : qubit(b, pair_qubit - n_ + 1);
    };
    for (const auto& p : primitives(g, n_)) {
      if (p.kind == Primitive::Cnot) rho_.apply_cnot(map(p.q0), map(p.q1));
      if (p.kind == Primitive::Cz) rho_.apply_cz(map(p.q0), map(p.q1));
      if (p.kind == Primitive::S) rho_.apply_1q(map(p.q0), kS);
    }
    for (auto [q, p] : gate_correction(g, n_)) rho_.apply_1q(map(q), pauli_matrix(p));
    if (trivial(g)) return;

    std::vector<int> touched;
    if (std::holds_alternative<HGate>(g)) {
      for (int node = 1; node <= n_; ++node) {
        touched.push_back(qubit(a, node));
        touched.push_back(qubit(b, node));
      }
    } else {
      const auto& bg = std::get<BGate>(g);
      for (int node : {bg.node_i, bg.node_j}) {
        touched.push_back(qubit(a, node));
        touched.push_back(qubit(b, node));
      }
    }
    const auto probs = channel_probs(noise);
    if (noise.locality == NoiseLocality::AllTouched) {
      for (int q : touched) rho_.pauli_channel(q, probs);
      return;
    }
    std::vector<std::pair<double, DensityMatrix>> parts;
    const double m = static_cast<double>(touched.size());
    for (std::size_t i = 0; i < touched.size(); ++i) {
      for (std::size_t j = i + 1; j < touched.size(); ++j) {
        DensityMatrix part = rho_;
        part.pauli_channel(touched[i], probs);
        part.pauli_channel(touched[j], probs);
        parts.emplace_back(2.0 / (m * (m - 1)), std::move(part));
      }
    }
    rho_.mix(parts);
  }

  void pauli(int slot, int node, Pauli p) {
    if (p != Pauli::I) rho_.apply_1q(qubit(slot, node), pauli_matrix(p));
  }

  void measure(int slot, Basis basis, double eta) {
    if (basis == Basis::X) {
      for (int node = 1; node <= n_; ++node) rho_.apply_1q(qubit(slot, node), kH);
    }
    const std::uint32_t outcomes = 1u << n_;
    std::vector<double> weight(outcomes, 0.0);
    for (std::uint32_t m = 0; m < outcomes; ++m) {
      for (std::uint32_t f = 0; f < outcomes; ++f) {
        const int w = std::popcount(f);
        if (passes(m ^ f, n_, basis)) weight[m] += std::pow(eta, w) * std::pow(1 - eta, n_ - w);
      }
    }
    const std::size_t dim = rho_.dim();
    DensityMatrix out(rho_.qubits());
    for (std::size_t i = 0; i < dim; ++i) {
      if (slot_bits(i, slot)) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (slot_bits(j, slot)) continue;
        cplx s = 0;
        for (std::uint32_t m = 0; m < outcomes; ++m) {
          s += weight[m] * rho_.at(with_slot(i, slot, m), with_slot(j, slot, m));
        }
        out.at(i, j) = s;
      }
    }
    rho_ = std::move(out);
    live_[static_cast<std::size_t>(slot)] = false;
  }

  void twirl(int slot) {
    const std::size_t d = std::size_t{1} << n_;
    const auto g = ghz_basis_vector(n_, 0);
    const std::size_t dim = rho_.dim();
    DensityMatrix out(rho_.qubits());
    for (std::size_t i = 0; i < dim; ++i) {
      if (slot_bits(i, slot)) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (slot_bits(j, slot)) continue;
        cplx fid = 0, tr = 0;
        for (std::size_t k = 0; k < d; ++k) {
          tr += rho_.at(with_slot(i, slot, k), with_slot(j, slot, k));
          for (std::size_t l = 0; l < d; ++l) {
            fid += std::conj(g[k]) * rho_.at(with_slot(i, slot, k), with_slot(j, slot, l)) * g[l];
          }
        }
        const cplx rest = (tr - fid) / static_cast<double>(d - 1);
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l) {
            const cplx proj = g[k] * std::conj(g[l]);
            const cplx ident = (k == l ? 1.0 : 0.0) - proj;
            out.at(with_slot(i, slot, k), with_slot(j, slot, l)) = proj * fid + ident * rest;
          }
        }
      }
    }
    rho_ = std::move(out);
  }

  DenseResult result() const {
    DenseResult r;
    r.p_succ = rho_.trace();
    if (r.p_succ <= 0) return r;
    const std::size_t dim = rho_.dim();
    const auto g = ghz_basis_vector(n_, 0);
    int k = 0;
    double sum = 0;
    for (int s = 0; s < slots_; ++s) {
      if (!live_[static_cast<std::size_t>(s)]) continue;
      ++k;
      cplx f = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          if (with_slot(i, s, 0) != with_slot(j, s, 0)) continue;
          f += std::conj(g[slot_bits(i, s)]) * rho_.at(i, j) * g[slot_bits(j, s)];
        }
      }
      sum += f.real();
    }
    r.f_out = k ? sum / k / r.p_succ : 0;
    cplx joint = 0;
    auto amp = [&](std::size_t index) {
      cplx a = 1;
      for (int s = 0; s < slots_; ++s) {
        const std::size_t bits = slot_bits(index, s);
        if (live_[static_cast<std::size_t>(s)]) {
          a *= g[bits];
        } else if (bits != 0) {
          return cplx(0);
        }
      }
      return a;
    };
    for (std::size_t i = 0; i < dim; ++i) {
      const cplx ai = amp(i);
      if (ai == cplx(0)) continue;
      for (std::size_t j = 0; j < dim; ++j) joint += std::conj(ai) * rho_.at(i, j) * amp(j);
    }
    r.f_out_joint = joint.real() / r.p_succ;
    return r;
  }

 private:
  // rest_[i][j]: partial trace over `slot`, stored at indices with the
  // slot's bits cleared and broadcast to every slot value.
  void trace_out(int slot) {
    const std::size_t dim = rho_.dim();
    const std::size_t d = std::size_t{1} << n_;
    rest_.assign(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      if (slot_bits(i, slot)) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        if (slot_bits(j, slot)) continue;
        cplx s = 0;
        for (std::size_t k = 0; k < d; ++k) s += rho_.at(with_slot(i, slot, k), with_slot(j, slot, k));
        for (std::size_t k = 0; k < d; ++k) {
          for (std::size_t l = 0; l < d; ++l) rest_[with_slot(i, slot, k) * dim + with_slot(j, slot, l)] = s;
        }
      }
    }
  }

  int n_;
  int slots_;
  DensityMatrix rho_;
  std::vector<bool> live_;
  std::vector<cplx> raw_;
  std::vector<cplx> rest_;
};

}  // namespace

DensityMatrix::DensityMatrix(int qubits)
    : qubits_(qubits), dim_(std::size_t{1} << qubits), m_(dim_ * dim_, 0) {}

double DensityMatrix::trace() const {
  double t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += at(i, i).real();
  return t;
}

void DensityMatrix::apply_1q(int q, const std::array<cplx, 4>& u) {
  const std::size_t b = std::size_t{1} << q;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (i & b) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      const cplx v0 = at(i, c), v1 = at(i | b, c);
      at(i, c) = u[0] * v0 + u[1] * v1;
      at(i | b, c) = u[2] * v0 + u[3] * v1;
    }
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (j & b) continue;
      const cplx v0 = at(r, j), v1 = at(r, j | b);
      at(r, j) = v0 * std::conj(u[0]) + v1 * std::conj(u[1]);
      at(r, j | b) = v0 * std::conj(u[2]) + v1 * std::conj(u[3]);
    }
  }
}

void DensityMatrix::apply_cnot(int control, int target) {
  const std::size_t cb = std::size_t{1} << control, tb = std::size_t{1} << target;
  auto perm = [&](std::size_t i) { return (i & cb) ? i ^ tb : i; };
  std::vector<cplx> out(m_.size());
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out[perm(i) * dim_ + perm(j)] = at(i, j);
  }
  m_ = std::move(out);
}

void DensityMatrix::apply_cz(int a, int b) {
  const std::size_t ab = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const bool si = (i & ab) == ab, sj = (j & ab) == ab;
      if (si != sj) at(i, j) = -at(i, j);
    }
  }
}

void DensityMatrix::pauli_channel(int q, const std::array<double, 4>& probs) {
  std::vector<std::pair<double, DensityMatrix>> parts;
  parts.emplace_back(probs[0], *this);
  const std::array<const std::array<cplx, 4>*, 3> mats = {&kX, &kY, &kZ};
  for (std::size_t k = 0; k < 3; ++k) {
    if (probs[k + 1] == 0) continue;
    DensityMatrix p = *this;
    p.apply_1q(q, *mats[k]);
    parts.emplace_back(probs[k + 1], std::move(p));
  }
  mix(parts);
}

void DensityMatrix::mix(const std::vector<std::pair<double, DensityMatrix>>& parts) {
  std::fill(m_.begin(), m_.end(), cplx(0));
  for (const auto& [w, p] : parts) {
    for (std::size_t i = 0; i < m_.size(); ++i) m_[i] += w * p.m_[i];
  }
}

std::vector<cplx> ghz_basis_vector(int n, std::uint32_t bits) {
  std::size_t c = 0;
  int current = 0;
  for (int k = 1; k < n; ++k) {
    current ^= (bits >> (n - 1 - k)) & 1;
    if (current) c |= std::size_t{1} << k;
  }
  const std::size_t all = (std::size_t{1} << n) - 1u;
  std::vector<cplx> v(std::size_t{1} << n, 0);
  const double sign = ((bits >> (n - 1)) & 1u) ? -1.0 : 1.0;
  v[c] = kInvSqrt2;
  v[c ^ all] = sign * kInvSqrt2;
  return v;
}

void apply_gate_vector(std::vector<cplx>& psi, const GateDescriptor& gate, int n) {
  for (const auto& p : primitives(gate, n)) {
    if (p.kind == Primitive::Cnot) vec_cnot(psi, p.q0, p.q1);
    if (p.kind == Primitive::Cz) vec_cz(psi, p.q0, p.q1);
    if (p.kind == Primitive::S) vec_1q(psi, p.q0, kS);
  }
  for (auto [q, p] : gate_correction(gate, n)) vec_1q(psi, q, pauli_matrix(p));
}

std::vector<std::uint32_t> dense_permutation(const GateDescriptor& gate, int n) {
  std::vector<std::uint32_t> out(std::size_t{1} << (2 * n));
  for (std::uint32_t l = 0; l < out.size(); ++l) {
    auto psi = pair_vector(n, l);
    apply_gate_vector(psi, gate, n);
    out[l] = identify_pair(psi, n);
  }
  return out;
}

DenseResult dense_run(const Circuit& circuit, const CircuitConfig& config) {
  Register reg(config);
  for (int s = 0; s < config.initial_fill(); ++s) reg.fill(s);
  for (const auto& e : circuit.elements) {
    if (const auto* h = std::get_if<HApply>(&e)) {
      reg.gate(HGate{h->kind}, h->a, h->b, config.noise);
    } else if (const auto* b = std::get_if<BApply>(&e)) {
      reg.gate(b->gate, b->a, b->b, config.noise);
    } else if (const auto* p = std::get_if<PauliOp>(&e)) {
      reg.pauli(p->copy, p->qubit, p->pauli);
    } else if (const auto* m = std::get_if<Measure>(&e)) {
      reg.measure(m->copy, m->basis, config.noise.eta);
    } else if (const auto* r = std::get_if<Refill>(&e)) {
      reg.fill(r->slot);
    } else if (const auto* t = std::get_if<Twirl>(&e)) {
      reg.twirl(t->copy);
    }
  }
  return reg.result();
}

}  // namespace ghzsim::testing
