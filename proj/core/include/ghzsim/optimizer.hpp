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
#include <optional>
#include <vector>

#include "ghzsim/circuit.hpp"
#include "ghzsim/simulator.hpp"

namespace ghzsim {

enum class CostMode : std::uint8_t { FidelityMax, FidelityUnderSuccessFloor };

struct CostFunction {
  CostMode mode = CostMode::FidelityMax;
  double p_min = 0;     ///< success floor in the constrained mode
  double penalty = 10;  ///< lambda in f_out - lambda (p_min - p_succ)

  void validate() const;
  /// 0 when no run is accepted.
  double score(const Estimate& estimate) const;
  bool feasible(const Estimate& estimate) const;
};

enum class FitnessEvaluator : std::uint8_t { MonteCarlo, Exact };

struct GAConfig {
  int population = 200;
  int generations = 200;
  int max_length = 30;
  int elite = 4;
  int tournament = 3;
  double crossover = 0.7;
  double p_replace = 0.08;  ///< per gene
  double p_insert = 0.05;   ///< per genome
  double p_delete = 0.05;   ///< per genome
  double t0 = 0.05;
  /// Geometric decay factor; 0 picks alpha with T(generations) = t0 / 100.
  double alpha = 0;
  std::uint64_t budget = 2000;  ///< trajectories per fitness evaluation
  bool allow_pauli = false;
  FitnessEvaluator evaluator = FitnessEvaluator::MonteCarlo;
  int final_pool = 10;  ///< distinct top genomes re-scored at the end
  int threads = 0;

  void validate() const;
  double temperature(int generation) const;
};

/// Genes are circuit elements over register slots. Refills are implicit:
/// decode inserts one after a measurement while raw copies remain.
using Genome = std::vector<Element>;

/// Always-valid circuit: genes touching dead slots, repeated operands,
/// invalid node pairs and surplus measurements are dropped; missing
/// measurements are appended in the Z basis on the highest live slots.
Circuit decode(const Genome& genome, const CircuitConfig& config);

/// One gene drawn from the alphabet; operands are arbitrary slots.
Element random_gene(const CircuitConfig& config, bool allow_pauli, Rng& rng);

/// Genes drawn to reference live slots only, length in [N - K, max_length].
Genome random_genome(const CircuitConfig& config, const GAConfig& ga, Rng& rng);

/// Estimate of the decoded circuit, by Monte Carlo or exactly.
Estimate evaluate(const Genome& genome, const CircuitConfig& config, FitnessEvaluator evaluator,
                  std::uint64_t budget, std::uint64_t seed);

double fitness(const Genome& genome, const CircuitConfig& config, const CostFunction& cost,
               std::uint64_t budget, std::uint64_t seed);

/// Metropolis rule: accepts improvements and ties, otherwise accepts with
/// probability exp((candidate - current) / T).
bool anneal_accept(double current_fitness, double candidate_fitness, double temperature, Rng& rng);

struct GenerationStats {
  int generation;
  double best_fitness;
  double mean_fitness;
  double temperature;
};

struct EvolveResult {
  Genome genome;
  Circuit best;
  double fitness = 0;      ///< score of the final estimate
  Estimate final_estimate;
  bool exact_final = false;
  std::vector<GenerationStats> history;
};

/// Elitist GA with tournament selection, single-point crossover, mutation
/// and annealed replacement of each parent by its child. All fitness
/// evaluations in one generation share a seed. Deterministic for a fixed
/// seed and independent of the thread count.
EvolveResult evolve(const GAConfig& ga, const CostFunction& cost, const CircuitConfig& config,
                    std::uint64_t seed);

}  // namespace ghzsim
