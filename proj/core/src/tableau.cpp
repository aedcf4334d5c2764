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

#include "ghzsim/tableau.hpp"

#include <stdexcept>

namespace ghzsim {

StabilizerTableau::StabilizerTableau(int n, std::vector<PauliString> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n < 0 || n > kMaxOracleQubits) throw std::invalid_argument("tableau width out of range");
  for (const auto& r : rows_) {
    if (r.qubits != n) throw std::invalid_argument("tableau row width mismatch");
  }
}

int StabilizerTableau::rank() const { return GroupSolver(*this).rank(); }

bool StabilizerTableau::is_valid() const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (!rows_[a].is_hermitian()) return false;
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      if (!rows_[a].commutes_with(rows_[b])) return false;
    }
  }
  return rank() == static_cast<int>(rows_.size());
}

std::string StabilizerTableau::to_string() const {
  std::string out;
  for (const auto& r : rows_) {
    if (!out.empty()) out += '\n';
    out += r.to_string();
  }
  return out;
}

GroupSolver::GroupSolver(const StabilizerTableau& tableau)
    : n_(tableau.qubits()), generators_(tableau.rows()) {
  if (generators_.size() > 64) throw std::invalid_argument("tableau has more than 64 rows");
  std::vector<Row> rows;
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    rows.push_back({generators_[k].x, generators_[k].z, std::uint64_t{1} << k});
  }
  std::size_t next = 0;
  for (int pos = 0; pos < 2 * n_ && next < rows.size(); ++pos) {
    std::size_t pick = next;
    while (pick < rows.size() && !bit(rows[pick], pos)) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && bit(rows[r], pos)) {
        rows[r].x ^= rows[next].x;
        rows[r].z ^= rows[next].z;
        rows[r].combo ^= rows[next].combo;
      }
    }
    pivots_.push_back(pos);
    ++next;
  }
  rows.resize(next);
  rows_ = std::move(rows);
}

bool GroupSolver::bit(const Row& r, int pos) const {
  return pos < n_ ? (r.x >> pos) & 1u : (r.z >> (pos - n_)) & 1u;
}

std::optional<std::uint64_t> GroupSolver::solve(const PauliString& p) const {
  if (p.qubits != n_) throw std::invalid_argument("Pauli width mismatch");
  Row target{p.x, p.z, 0};
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (bit(target, pivots_[k])) {
      target.x ^= rows_[k].x;
      target.z ^= rows_[k].z;
      target.combo ^= rows_[k].combo;
    }
  }
  if (target.x != 0 || target.z != 0) return std::nullopt;
  return target.combo;
}

bool GroupSolver::in_span(const PauliString& p) const { return solve(p).has_value(); }

std::optional<int> GroupSolver::sign_of(const PauliString& p) const {
  const auto combo = solve(p);
  if (!combo) return std::nullopt;
  PauliString product = PauliString::identity(n_);
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if ((*combo >> k) & 1u) product = product * generators_[k];
  }
  const int relative = ((product.phase - p.phase) % 4 + 4) % 4;
  if (relative == 0) return 1;
  if (relative == 2) return -1;
  throw std::logic_error("generators do not commute");
}

StabilizerTableau conjugate(const StabilizerTableau& tableau, const CliffordMap& clifford) {
  if (tableau.qubits() != clifford.qubits()) {
    throw std::invalid_argument("tableau and Clifford map widths differ");
  }
  std::vector<PauliString> rows;
  rows.reserve(tableau.rows().size());
  for (const auto& r : tableau.rows()) rows.push_back(clifford.apply(r));
  return StabilizerTableau(tableau.qubits(), std::move(rows));
}

std::optional<int> sign_in_group(const StabilizerTableau& tableau, const PauliString& p) {
  return GroupSolver(tableau).sign_of(p);
}

bool in_span(const StabilizerTableau& tableau, const PauliString& p) {
  return GroupSolver(tableau).in_span(p);
}

bool same_group(const StabilizerTableau& a, const StabilizerTableau& b) {
  const GroupSolver solver(a);
  if (a.qubits() != b.qubits() || solver.rank() != b.rank()) return false;
  for (const auto& r : b.rows()) {
    if (!r.is_hermitian()) return false;
    const auto s = solver.sign_of(r.unsigned_part());
    if (!s || *s != r.sign()) return false;
  }
  return true;
}

bool same_group_phaseless(const StabilizerTableau& a, const StabilizerTableau& b) {
  const GroupSolver solver(a);
  if (a.qubits() != b.qubits() || solver.rank() != b.rank()) return false;
  for (const auto& r : b.rows()) {
    if (!solver.in_span(r)) return false;
  }
  return true;
}

}  // namespace ghzsim
