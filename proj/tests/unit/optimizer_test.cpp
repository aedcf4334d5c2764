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

#include <cmath>

#include "ghzsim/exact.hpp"
#include "ghzsim/optimizer.hpp"
#include "ghzsim/protocols.hpp"

namespace ghzsim {
namespace {

CircuitConfig small_config() {
  CircuitConfig c;
  c.n = 3;
  c.N = 4;
  c.K = 1;
  c.R = 3;
  c.f_in = 0.85;
  c.noise.p_gate = 0.01;
  c.noise.eta = 0.01;
  return c;
}

GAConfig quick() {
  GAConfig ga;
  ga.population = 16;
  ga.generations = 6;
  ga.max_length = 10;
  ga.budget = 500;
  ga.final_pool = 3;
  ga.threads = 1;
  return ga;
}

TEST(Decode, AlwaysYieldsValidCircuits) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    CircuitConfig c = small_config();
    c.N = 2 + trial % 5;
    c.K = 1 + trial % 2;
    c.R = 2 + trial % 3;
    if (c.K > c.N) c.K = 1;
    GAConfig ga;
    ga.max_length = 12;
    ga.allow_pauli = trial % 2 == 0;
    Genome g = random_genome(c, ga, rng);
    // Corrupt the genome with arbitrary genes; decode must still cope.
    for (int k = 0; k < 4; ++k) g.push_back(random_gene(c, true, rng));
    g.push_back(Measure{7, Basis::Z});
    g.push_back(Refill{0});
    const Circuit circuit = decode(g, c);
    EXPECT_TRUE(validate(circuit, c).empty()) << "trial " << trial;
  }
}

TEST(Decode, EmptyGenomeMeasuresDownToK) {
  const auto c = small_config();
  const Circuit circuit = decode({}, c);
  EXPECT_TRUE(validate(circuit, c).empty());
}

TEST(Annealing, AcceptanceFollowsTheMetropolisRule) {
  Rng rng(5);
  EXPECT_TRUE(anneal_accept(0.5, 0.6, 0.0, rng));
  EXPECT_TRUE(anneal_accept(0.5, 0.5, 0.0, rng));
  EXPECT_FALSE(anneal_accept(0.5, 0.4, 0.0, rng));
  const double t = 0.05, delta = 0.03;
  int accepted = 0;
  const int draws = 100000;
  for (int k = 0; k < draws; ++k) accepted += anneal_accept(0.5, 0.5 - delta, t, rng) ? 1 : 0;
  const double p = std::exp(-delta / t);
  EXPECT_NEAR(accepted / double(draws), p, 5 * std::sqrt(p * (1 - p) / draws));
}

TEST(GAConfig, TemperatureScheduleAndValidation) {
  GAConfig ga;
  ga.t0 = 0.1;
  ga.generations = 50;
  EXPECT_DOUBLE_EQ(ga.temperature(0), 0.1);
  EXPECT_NEAR(ga.temperature(50), 0.001, 1e-15);
  ga.alpha = 0.5;
  EXPECT_DOUBLE_EQ(ga.temperature(2), 0.025);
  ga.elite = ga.population;
  EXPECT_THROW(ga.validate(), std::invalid_argument);
  GAConfig bad;
  bad.budget = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(CostFunction, Scores) {
  Estimate e;
  e.samples = 100;
  e.accepted = 40;
  e.p_succ = 0.4;
  e.f_out = 0.9;
  CostFunction max;
  EXPECT_DOUBLE_EQ(max.score(e), 0.9);
  CostFunction floor{CostMode::FidelityUnderSuccessFloor, 0.5, 10};
  EXPECT_NEAR(floor.score(e), 0.9 - 10 * 0.1, 1e-12);
  EXPECT_FALSE(floor.feasible(e));
  e.p_succ = 0.6;
  EXPECT_DOUBLE_EQ(floor.score(e), 0.9);
  e.accepted = 0;
  e.f_out = std::nan("");
  EXPECT_EQ(floor.score(e), 0.0);
  EXPECT_THROW((CostFunction{CostMode::FidelityMax, 1.5, 1}.validate()), std::invalid_argument);
}

TEST(Evolve, DeterministicForAFixedSeed) {
  const auto c = small_config();
  const auto a = evolve(quick(), CostFunction{}, c, 42);
  const auto b = evolve(quick(), CostFunction{}, c, 42);
  EXPECT_EQ(a.best, b.best);
  EXPECT_EQ(a.fitness, b.fitness);
  ASSERT_EQ(a.history.size(), b.history.size());
  for (std::size_t g = 0; g < a.history.size(); ++g) {
    EXPECT_EQ(a.history[g].best_fitness, b.history[g].best_fitness);
  }
  EXPECT_TRUE(validate(a.best, c).empty());
  EXPECT_TRUE(a.exact_final);
  // The reported estimate is the exact value of the returned circuit.
  EXPECT_DOUBLE_EQ(a.final_estimate.f_out, exact_diagonal_oracle(a.best, c).f_out);
}

TEST(Evolve, HistoryCoversEveryGenerationAndElitesSurvive) {
  const auto c = small_config();
  GAConfig ga = quick();
  ga.evaluator = FitnessEvaluator::Exact;
  const auto r = evolve(ga, CostFunction{}, c, 7);
  ASSERT_EQ(r.history.size(), static_cast<std::size_t>(ga.generations + 1));
  for (std::size_t g = 1; g < r.history.size(); ++g) {
    // Exact fitness is noise-free, so elitism makes the best non-decreasing.
    EXPECT_GE(r.history[g].best_fitness, r.history[g - 1].best_fitness);
    EXPECT_LE(r.history[g].temperature, r.history[g - 1].temperature);
  }
}

TEST(Evolve, ZeroGenerationsStillReturnsAValidCircuit) {
  const auto c = small_config();
  GAConfig ga = quick();
  ga.generations = 0;
  const auto r = evolve(ga, CostFunction{}, c, 1);
  EXPECT_EQ(r.history.size(), 1u);
  EXPECT_TRUE(validate(r.best, c).empty());
}

TEST(Evolve, BeatsPumpingOnASmallNoiselessProblem) {
  CircuitConfig c = small_config();
  c.noise = {};
  GAConfig ga = quick();
  ga.population = 40;
  ga.generations = 30;
  ga.evaluator = FitnessEvaluator::Exact;
  const auto r = evolve(ga, CostFunction{}, c, 11);
  BaselineParams params;
  params.n = c.n;
  params.f_in = c.f_in;
  const auto p = pumping(PumpingConfig{3}, params);
  EXPECT_GE(r.final_estimate.f_out, exact_diagonal_oracle(p.circuit, p.config).f_out - 1e-12);
}

}  // namespace
}  // namespace ghzsim
