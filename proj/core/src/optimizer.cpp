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

#include "ghzsim/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>

#include "ghzsim/exact.hpp"
#include "ghzsim/parallel.hpp"
#include "overloaded.hpp"

namespace ghzsim {

using detail::Overloaded;

void CostFunction::validate() const {
  if (!(p_min >= 0 && p_min <= 1)) throw std::invalid_argument("p_min must lie in [0, 1]");
  if (!(penalty >= 0)) throw std::invalid_argument("penalty must be non-negative");
}

double CostFunction::score(const Estimate& estimate) const {
  if (estimate.accepted == 0 && estimate.samples > 0) return 0;
  if (!estimate.f_out_defined()) return 0;
  if (mode == CostMode::FidelityMax) return estimate.f_out;
  const double shortfall = std::max(0.0, p_min - estimate.p_succ);
  return estimate.f_out - penalty * shortfall;
}

bool CostFunction::feasible(const Estimate& estimate) const {
  return mode == CostMode::FidelityMax || estimate.p_succ >= p_min;
}

void GAConfig::validate() const {
  if (population < 2) throw std::invalid_argument("population must be at least 2");
  if (generations < 0) throw std::invalid_argument("generations must be non-negative");
  if (max_length < 1) throw std::invalid_argument("max_length must be positive");
  if (elite < 0 || elite >= population) throw std::invalid_argument("elite must be in [0, population)");
  if (tournament < 1) throw std::invalid_argument("tournament size must be positive");
  for (double p : {crossover, p_replace, p_insert, p_delete}) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("GA rates must lie in [0, 1]");
  }
  if (!(t0 >= 0)) throw std::invalid_argument("t0 must be non-negative");
  if (!(alpha >= 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (budget == 0) throw std::invalid_argument("budget must be positive");
  if (final_pool < 1) throw std::invalid_argument("final_pool must be positive");
}

double GAConfig::temperature(int generation) const {
  double a = alpha;
  if (a == 0) a = generations > 0 ? std::pow(0.01, 1.0 / generations) : 1.0;
  return t0 * std::pow(a, generation);
}

namespace {

// Register bookkeeping shared by decode and random_genome.
struct Register {
  explicit Register(const CircuitConfig& config)
      : live(static_cast<std::size_t>(config.R), false),
        sampled(config.initial_fill()),
        max_measures(config.N - config.K),
        N(config.N),
        n(config.n) {
    for (int s = 0; s < sampled; ++s) live[static_cast<std::size_t>(s)] = true;
  }

  bool is_live(int slot) const {
    return slot >= 0 && slot < static_cast<int>(live.size()) && live[static_cast<std::size_t>(slot)];
  }

  bool accepts(const Element& gene) const {
    return std::visit(
        Overloaded{
            [&](const HApply& e) { return e.a != e.b && is_live(e.a) && is_live(e.b); },
            [&](const BApply& e) {
              return e.a != e.b && is_live(e.a) && is_live(e.b) && e.gate.node_i >= 1 &&
                     e.gate.node_i < e.gate.node_j && e.gate.node_j <= n;
            },
            [&](const PauliOp& e) { return is_live(e.copy) && e.qubit >= 1 && e.qubit <= n; },
            [&](const Measure& e) { return is_live(e.copy) && measures < max_measures; },
            [](const Refill&) { return false; },
            [](const Twirl&) { return false; },
        },
        gene);
  }

  // Emits the gene (and the implicit refill) into `out`; gene must be accepted.
  void emit(const Element& gene, Circuit& out) {
    out.elements.push_back(gene);
    if (const auto* m = std::get_if<Measure>(&gene)) {
      ++measures;
      if (sampled < N) {
        out.elements.push_back(Refill{m->copy});
        ++sampled;
      } else {
        live[static_cast<std::size_t>(m->copy)] = false;
      }
    }
  }

  int highest_live() const {
    for (int s = static_cast<int>(live.size()) - 1; s >= 0; --s) {
      if (live[static_cast<std::size_t>(s)]) return s;
    }
    return -1;
  }

  std::vector<bool> live;
  int sampled;
  int measures = 0;
  int max_measures;
  int N;
  int n;
};

template <class T>
T pick(const std::vector<T>& values, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
  return values[d(rng)];
}

int uniform_int(int lo, int hi, Rng& rng) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Element random_gene_on(const std::vector<int>& slots, const CircuitConfig& config,
                       bool allow_pauli, bool allow_measure, bool allow_pair, Rng& rng) {
  const int kinds = allow_pauli ? 4 : 3;
  for (;;) {
    const int kind = uniform_int(0, kinds - 1, rng);
    if (kind == 2) {
      if (!allow_measure) continue;
      return Measure{pick(slots, rng), uniform01(rng) < 0.5 ? Basis::Z : Basis::X};
    }
    if (kind == 3) {
      static constexpr Pauli kPaulis[] = {Pauli::X, Pauli::Y, Pauli::Z};
      return PauliOp{pick(slots, rng), uniform_int(1, config.n, rng), kPaulis[uniform_int(0, 2, rng)]};
    }
    if (!allow_pair || slots.size() < 2) continue;
    const int a = pick(slots, rng);
    int b = a;
    while (b == a) b = pick(slots, rng);
    if (kind == 0) {
      // Identity is excluded: it never changes a state.
      return HApply{kAllHKinds[static_cast<std::size_t>(uniform_int(1, 5, rng))], a, b};
    }
    const int i = uniform_int(1, config.n - 1, rng);
    const int j = uniform_int(i + 1, config.n, rng);
    return BApply{BGate::from_code(uniform_int(1, 7, rng), i, j), a, b};
  }
}

std::vector<int> all_slots(const CircuitConfig& config) {
  std::vector<int> slots(static_cast<std::size_t>(config.R));
  std::iota(slots.begin(), slots.end(), 0);
  return slots;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6761u};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

struct Individual {
  Genome genome;
  double fitness = 0;
};

std::size_t tournament(const std::vector<Individual>& pop, int size, Rng& rng) {
  std::uniform_int_distribution<std::size_t> d(0, pop.size() - 1);
  std::size_t best = d(rng);
  for (int k = 1; k < size; ++k) {
    const std::size_t c = d(rng);
    if (pop[c].fitness > pop[best].fitness) best = c;
  }
  return best;
}

Genome crossover(const Genome& a, const Genome& b, int max_length, Rng& rng) {
  const std::size_t ca = std::uniform_int_distribution<std::size_t>(0, a.size())(rng);
  const std::size_t cb = std::uniform_int_distribution<std::size_t>(0, b.size())(rng);
  Genome child(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(ca));
  child.insert(child.end(), b.begin() + static_cast<std::ptrdiff_t>(cb), b.end());
  if (child.size() > static_cast<std::size_t>(max_length)) child.resize(static_cast<std::size_t>(max_length));
  return child;
}

void mutate(Genome& genome, const CircuitConfig& config, const GAConfig& ga, Rng& rng) {
  for (auto& gene : genome) {
    if (uniform01(rng) < ga.p_replace) gene = random_gene(config, ga.allow_pauli, rng);
  }
  if (uniform01(rng) < ga.p_insert && genome.size() < static_cast<std::size_t>(ga.max_length)) {
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, genome.size())(rng);
    genome.insert(genome.begin() + static_cast<std::ptrdiff_t>(at),
                  random_gene(config, ga.allow_pauli, rng));
  }
  if (uniform01(rng) < ga.p_delete && genome.size() > 1) {
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, genome.size() - 1)(rng);
    genome.erase(genome.begin() + static_cast<std::ptrdiff_t>(at));
  }
}

GenerationStats stats(int generation, const std::vector<Individual>& pop, double temperature) {
  double best = pop.front().fitness, sum = 0;
  for (const auto& ind : pop) {
    best = std::max(best, ind.fitness);
    sum += ind.fitness;
  }
  return {generation, best, sum / static_cast<double>(pop.size()), temperature};
}

}  // namespace

Circuit decode(const Genome& genome, const CircuitConfig& config) {
  Register reg(config);
  Circuit out;
  for (const auto& gene : genome) {
    if (reg.accepts(gene)) reg.emit(gene, out);
  }
  while (reg.measures < reg.max_measures) {
    reg.emit(Measure{reg.highest_live(), Basis::Z}, out);
  }
  return out;
}

Element random_gene(const CircuitConfig& config, bool allow_pauli, Rng& rng) {
  return random_gene_on(all_slots(config), config, allow_pauli, true, config.R >= 2, rng);
}

Genome random_genome(const CircuitConfig& config, const GAConfig& ga, Rng& rng) {
  const int min_length = std::min(ga.max_length, std::max(1, config.N - config.K));
  const int length = uniform_int(min_length, ga.max_length, rng);
  Register reg(config);
  Genome genome;
  Circuit scratch;
  while (static_cast<int>(genome.size()) < length) {
    std::vector<int> slots;
    for (int s = 0; s < config.R; ++s) {
      if (reg.is_live(s)) slots.push_back(s);
    }
    const bool can_measure = reg.measures < reg.max_measures;
    const bool can_pair = slots.size() >= 2;
    if (!can_pair && !can_measure && !ga.allow_pauli) break;
    const Element gene = random_gene_on(slots, config, ga.allow_pauli, can_measure, can_pair, rng);
    reg.emit(gene, scratch);
    genome.push_back(gene);
  }
  return genome;
}

Estimate evaluate(const Genome& genome, const CircuitConfig& config, FitnessEvaluator evaluator,
                  std::uint64_t budget, std::uint64_t seed) {
  const Circuit circuit = decode(genome, config);
  if (evaluator == FitnessEvaluator::Exact) return exact_diagonal_oracle(circuit, config);
  return estimate(circuit, config, budget, seed, 1);
}

double fitness(const Genome& genome, const CircuitConfig& config, const CostFunction& cost,
               std::uint64_t budget, std::uint64_t seed) {
  return cost.score(evaluate(genome, config, FitnessEvaluator::MonteCarlo, budget, seed));
}

bool anneal_accept(double current_fitness, double candidate_fitness, double temperature, Rng& rng) {
  if (candidate_fitness >= current_fitness) return true;
  if (!(temperature > 0)) return false;
  return uniform01(rng) < std::exp((candidate_fitness - current_fitness) / temperature);
}

EvolveResult evolve(const GAConfig& ga, const CostFunction& cost, const CircuitConfig& config,
                    std::uint64_t seed) {
  ga.validate();
  cost.validate();
  config.validate();
  if (ga.evaluator == FitnessEvaluator::Exact && !exact_feasible(config)) {
    throw std::invalid_argument("register too large for exact fitness evaluation");
  }

  Rng rng(mix(seed, 0));
  const auto pop_size = static_cast<std::size_t>(ga.population);

  auto score_all = [&](std::vector<Individual>& inds, std::uint64_t eval_seed) {
    parallel_for(inds.size(), ga.threads, [&](std::size_t i) {
      inds[i].fitness =
          cost.score(evaluate(inds[i].genome, config, ga.evaluator, ga.budget, eval_seed));
    });
  };

  std::vector<Individual> pop(pop_size);
  for (auto& ind : pop) ind.genome = random_genome(config, ga, rng);
  score_all(pop, mix(seed, 1));

  EvolveResult result;
  result.history.push_back(stats(0, pop, ga.temperature(0)));

  auto by_fitness = [](const Individual& a, const Individual& b) { return a.fitness > b.fitness; };

  for (int g = 1; g <= ga.generations; ++g) {
    const double temperature = ga.temperature(g);
    std::stable_sort(pop.begin(), pop.end(), by_fitness);

    std::vector<Individual> children(pop_size - static_cast<std::size_t>(ga.elite));
    for (auto& child : children) {
      const auto& first = pop[tournament(pop, ga.tournament, rng)].genome;
      if (uniform01(rng) < ga.crossover) {
        const auto& second = pop[tournament(pop, ga.tournament, rng)].genome;
        child.genome = crossover(first, second, ga.max_length, rng);
      } else {
        child.genome = first;
      }
      mutate(child.genome, config, ga, rng);
      if (child.genome.empty()) child.genome.push_back(random_gene(config, ga.allow_pauli, rng));
    }
    score_all(children, mix(seed, static_cast<std::uint64_t>(g) + 1));

    for (std::size_t i = 0; i < children.size(); ++i) {
      auto& parent = pop[static_cast<std::size_t>(ga.elite) + i];
      if (anneal_accept(parent.fitness, children[i].fitness, temperature, rng)) {
        parent = std::move(children[i]);
      }
    }
    result.history.push_back(stats(g, pop, temperature));
  }

  // Re-score the best distinct circuits without the selection bias of the
  // shared per-generation seed.
  std::stable_sort(pop.begin(), pop.end(), by_fitness);
  std::vector<std::pair<Genome, Circuit>> pool;
  for (const auto& ind : pop) {
    if (static_cast<int>(pool.size()) >= ga.final_pool) break;
    Circuit c = decode(ind.genome, config);
    const bool seen = std::any_of(pool.begin(), pool.end(),
                                  [&](const auto& entry) { return entry.second == c; });
    if (!seen) pool.emplace_back(ind.genome, std::move(c));
  }
  result.exact_final = exact_feasible(config);
  const std::uint64_t final_seed = mix(seed, static_cast<std::uint64_t>(ga.generations) + 2);
  std::vector<Estimate> finals(pool.size());
  parallel_for(pool.size(), ga.threads, [&](std::size_t i) {
    finals[i] = result.exact_final ? exact_diagonal_oracle(pool[i].second, config)
                                   : estimate(pool[i].second, config, ga.budget * 10, final_seed, 1);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (cost.score(finals[i]) > cost.score(finals[best])) best = i;
  }
  result.genome = pool[best].first;
  result.best = pool[best].second;
  result.final_estimate = finals[best];
  result.fitness = cost.score(finals[best]);
  return result;
}

}  // namespace ghzsim
