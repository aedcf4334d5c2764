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

#include "ghzsim/clifford_map.hpp"

#include <stdexcept>

namespace ghzsim {

namespace {

std::uint64_t spread(std::uint64_t local, std::span<const int> positions) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if ((local >> k) & 1u) out |= std::uint64_t{1} << positions[k];
  }
  return out;
}

void check_qubit(int n, int q) {
  if (q < 0 || q >= n) throw std::out_of_range("Clifford qubit index out of range");
}

}  // namespace

CliffordMap::CliffordMap(int n) : n_(n) {
  if (n < 0 || n > kMaxOracleQubits) throw std::invalid_argument("Clifford width out of range");
  for (int k = 0; k < n; ++k) {
    x_images_.push_back(PauliString::single(n, k, Pauli::X));
    z_images_.push_back(PauliString::single(n, k, Pauli::Z));
  }
}

CliffordMap::CliffordMap(std::vector<PauliString> x_images, std::vector<PauliString> z_images)
    : n_(static_cast<int>(x_images.size())),
      x_images_(std::move(x_images)),
      z_images_(std::move(z_images)) {
  if (x_images_.size() != z_images_.size()) throw std::invalid_argument("image count mismatch");
  for (std::size_t k = 0; k < x_images_.size(); ++k) {
    if (x_images_[k].qubits != n_ || z_images_[k].qubits != n_) {
      throw std::invalid_argument("image width mismatch");
    }
  }
}

void CliffordMap::set_images(int k, PauliString x_image, PauliString z_image) {
  check_qubit(n_, k);
  if (x_image.qubits != n_ || z_image.qubits != n_) throw std::invalid_argument("image width mismatch");
  x_images_[static_cast<std::size_t>(k)] = x_image;
  z_images_[static_cast<std::size_t>(k)] = z_image;
}

PauliString CliffordMap::apply(const PauliString& p) const {
  if (p.qubits != n_) throw std::invalid_argument("Pauli width does not match Clifford map");
  // P = i^phase prod_k i^{x_k z_k} X_k^{x_k} Z_k^{z_k}.
  PauliString out = PauliString::identity(n_);
  out.phase = p.phase;
  for (int k = 0; k < n_; ++k) {
    const bool xb = (p.x >> k) & 1u;
    const bool zb = (p.z >> k) & 1u;
    if (xb && zb) out.phase += 1;
    if (xb) out = out * x_images_[static_cast<std::size_t>(k)];
    if (zb) out = out * z_images_[static_cast<std::size_t>(k)];
  }
  out.phase &= 3;
  return out;
}

bool CliffordMap::is_valid() const {
  for (int a = 0; a < n_; ++a) {
    const auto& xa = x_images_[static_cast<std::size_t>(a)];
    const auto& za = z_images_[static_cast<std::size_t>(a)];
    if (!xa.is_hermitian() || !za.is_hermitian()) return false;
    if (xa.commutes_with(za)) return false;
    for (int b = a + 1; b < n_; ++b) {
      const auto& xb = x_images_[static_cast<std::size_t>(b)];
      const auto& zb = z_images_[static_cast<std::size_t>(b)];
      if (!xa.commutes_with(xb) || !xa.commutes_with(zb) || !za.commutes_with(xb) ||
          !za.commutes_with(zb)) {
        return false;
      }
    }
  }
  return true;
}

CliffordMap CliffordMap::phaseless() const {
  CliffordMap out = *this;
  for (auto& p : out.x_images_) p.phase = 0;
  for (auto& p : out.z_images_) p.phase = 0;
  return out;
}

bool CliffordMap::same_phaseless(const CliffordMap& other) const {
  if (other.n_ != n_) return false;
  for (std::size_t k = 0; k < x_images_.size(); ++k) {
    if (!x_images_[k].same_operator(other.x_images_[k]) ||
        !z_images_[k].same_operator(other.z_images_[k])) {
      return false;
    }
  }
  return true;
}

CliffordMap CliffordMap::hadamard(int n, int q) {
  check_qubit(n, q);
  CliffordMap m(n);
  m.set_images(q, PauliString::single(n, q, Pauli::Z), PauliString::single(n, q, Pauli::X));
  return m;
}

CliffordMap CliffordMap::phase(int n, int q) {
  check_qubit(n, q);
  CliffordMap m(n);
  m.set_images(q, PauliString::single(n, q, Pauli::Y), PauliString::single(n, q, Pauli::Z));
  return m;
}

CliffordMap CliffordMap::cnot(int n, int control, int target) {
  check_qubit(n, control);
  check_qubit(n, target);
  if (control == target) throw std::invalid_argument("CNOT needs distinct qubits");
  CliffordMap m(n);
  const auto xc = PauliString::single(n, control, Pauli::X);
  const auto xt = PauliString::single(n, target, Pauli::X);
  const auto zc = PauliString::single(n, control, Pauli::Z);
  const auto zt = PauliString::single(n, target, Pauli::Z);
  m.set_images(control, xc * xt, zc);
  m.set_images(target, xt, zc * zt);
  return m;
}

CliffordMap CliffordMap::cz(int n, int a, int b) {
  check_qubit(n, a);
  check_qubit(n, b);
  if (a == b) throw std::invalid_argument("CZ needs distinct qubits");
  CliffordMap m(n);
  const auto xa = PauliString::single(n, a, Pauli::X);
  const auto xb = PauliString::single(n, b, Pauli::X);
  const auto za = PauliString::single(n, a, Pauli::Z);
  const auto zb = PauliString::single(n, b, Pauli::Z);
  m.set_images(a, xa * zb, za);
  m.set_images(b, za * xb, zb);
  return m;
}

CliffordMap CliffordMap::embed(const CliffordMap& local, int n, std::span<const int> positions) {
  if (static_cast<int>(positions.size()) != local.qubits()) {
    throw std::invalid_argument("embedding needs one position per local qubit");
  }
  for (int p : positions) check_qubit(n, p);
  CliffordMap m(n);
  auto lift = [&](const PauliString& p) {
    return PauliString{spread(p.x, positions), spread(p.z, positions), p.phase, n};
  };
  for (int k = 0; k < local.qubits(); ++k) {
    m.set_images(positions[static_cast<std::size_t>(k)], lift(local.x_image(k)),
                 lift(local.z_image(k)));
  }
  return m;
}

CliffordMap then(const CliffordMap& first, const CliffordMap& second) {
  if (first.qubits() != second.qubits()) throw std::invalid_argument("Clifford width mismatch");
  CliffordMap out(first.qubits());
  for (int k = 0; k < first.qubits(); ++k) {
    out.set_images(k, second.apply(first.x_image(k)), second.apply(first.z_image(k)));
  }
  return out;
}

}  // namespace ghzsim
