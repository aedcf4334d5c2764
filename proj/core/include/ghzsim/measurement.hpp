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

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ghzsim/noise.hpp"
#include "ghzsim/phase_bits.hpp"

namespace ghzsim {

enum class Basis : std::uint8_t { Z, X };

char to_char(Basis basis);
Basis parse_basis(std::string_view text);

/// Whether a copy passes the coincidence check for a given set of flipped
/// raw outcomes. Bit (n - q) of `flips` is the flip at node q, so node 1 is
/// the most significant of n bits.
bool measurement_passes(PhaseBits bits, Basis basis, std::uint32_t flips);

/// Every node measures its qubit of the copy; each outcome flips with
/// probability eta. The slot is freed either way. Returns success.
bool measure_copy(SystemState& state, int slot, Basis basis, const NoiseModel& model, Rng& rng);

/// Success probability of each of the 2^n patterns.
std::vector<double> success_probabilities(int n, Basis basis, double eta);

}  // namespace ghzsim
