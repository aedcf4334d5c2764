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

#include "ghzsim/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace ghzsim {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  std::array<char, 64> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), v);
  return std::string(buffer.data(), result.ptr);
}

std::string csv_header() {
  return "protocol,n,N,K,R,p_gate,eta,f_in,f_out,f_out_se,p_succ,p_succ_se,samples,seed,f_out_joint";
}

std::string csv_line(const CsvRow& row) {
  const auto& c = row.config;
  const auto& e = row.estimate;
  std::string out = row.protocol;
  for (const std::string& field :
       {std::to_string(c.n), std::to_string(c.N), std::to_string(c.K), std::to_string(c.R),
        format_double(c.noise.p_gate), format_double(c.noise.eta), format_double(c.f_in),
        format_double(e.f_out), format_double(e.f_out_se), format_double(e.p_succ),
        format_double(e.p_succ_se), std::to_string(e.samples), std::to_string(row.seed),
        format_double(e.f_out_joint)}) {
    out += ',';
    out += field;
  }
  return out;
}

}  // namespace ghzsim
