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
#include <string>

#include "ghzsim/circuit.hpp"
#include "ghzsim/simulator.hpp"

namespace ghzsim {

/// One result row of the estimate CSV.
struct CsvRow {
  std::string protocol;
  CircuitConfig config;
  Estimate estimate;
  std::uint64_t seed = 0;
};

/// "protocol,n,N,K,R,p_gate,eta,f_in,f_out,f_out_se,p_succ,p_succ_se,samples,seed,f_out_joint"
std::string csv_header();
std::string csv_line(const CsvRow& row);

/// Shortest decimal that round-trips; "nan" for NaN.
std::string format_double(double v);

}  // namespace ghzsim
