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

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "ghzsim/phase_bits.hpp"

namespace ghzsim {
namespace {

TEST(PhaseBits, LayoutPutsXSignFirst) {
  const PhaseBits b(4, 0b1010);
  EXPECT_TRUE(b.x_bit());
  EXPECT_FALSE(b.z_bit(1));
  EXPECT_TRUE(b.z_bit(2));
  EXPECT_FALSE(b.z_bit(3));
  EXPECT_EQ(b.z_bits(), 0b010u);
  EXPECT_EQ(b.to_string(), "x=1,z=010");
}

TEST(PhaseBits, RejectsOutOfRangeValues) {
  EXPECT_THROW(PhaseBits(3, 8), std::invalid_argument);
  EXPECT_THROW(PhaseBits(0, 0), std::invalid_argument);
  EXPECT_THROW(PhaseBits(kMaxQubits + 1, 0), std::invalid_argument);
  EXPECT_THROW(PhaseBits(3, 0).z_bit(3), std::out_of_range);
}

TEST(PhaseBits, PauliCharsRoundTrip) {
  for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) EXPECT_EQ(parse_pauli(to_char(p)), p);
  EXPECT_THROW(parse_pauli('Q'), std::invalid_argument);
}

// The flip masks must agree with what a physical Pauli does to the GHZ basis
// vector: the image is again a basis vector, whose label we look up.
TEST(PhaseBits, FlipMasksMatchPhysicalPaulis) {
  for (int n = 2; n <= 5; ++n) {
    for (int q = 1; q <= n; ++q) {
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        const std::uint32_t mask = pauli_flip_mask(p, q, n).value();
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
          auto v = testing::ghz_basis_vector(n, s);
          const std::size_t bit = std::size_t{1} << (q - 1);
          std::vector<testing::cplx> w(v.size());
          for (std::size_t i = 0; i < v.size(); ++i) {
            const bool one = (i & bit) != 0;
            switch (p) {
              case Pauli::X: w[i ^ bit] = v[i]; break;
              case Pauli::Z: w[i] = one ? -v[i] : v[i]; break;
              case Pauli::Y: w[i ^ bit] = (one ? testing::cplx(0, -1) : testing::cplx(0, 1)) * v[i]; break;
              default: break;
            }
          }
          const auto expected = testing::ghz_basis_vector(n, s ^ mask);
          testing::cplx overlap = 0;
          for (std::size_t i = 0; i < w.size(); ++i) overlap += std::conj(expected[i]) * w[i];
          EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12) << "n=" << n << " q=" << q << " s=" << s;
        }
      }
    }
  }
}

TEST(PhaseBits, ZOnAnyQubitFlipsOnlyTheXSign) {
  for (int n = 2; n <= 6; ++n) {
    for (int q = 1; q <= n; ++q) {
      EXPECT_EQ(pauli_flip_mask(Pauli::Z, q, n).value(), 1u << (n - 1));
    }
  }
}

TEST(SystemState, TracksLiveSlots) {
  SystemState s(3, 3);
  EXPECT_EQ(s.live_count(), 0);
  s.load(1, PhaseBits(3, 2));
  EXPECT_TRUE(s.live(1));
  EXPECT_EQ(s.copy(1).value(), 2u);
  EXPECT_THROW(s.load(1, PhaseBits(3, 0)), std::logic_error);
  apply_pauli(s, 1, 1, Pauli::Z);
  EXPECT_EQ(s.copy(1).value(), 6u);
  s.release(1);
  EXPECT_FALSE(s.live(1));
  EXPECT_THROW(s.copy(1), std::logic_error);
  EXPECT_THROW(s.copy(5), std::out_of_range);
}

}  // namespace
}  // namespace ghzsim
