/*
 * Copyright (c) 2026, the infosyn authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*!
  \file search.hpp
  \brief (1+lambda) evolution of gate-level circuits toward a target
         function: full functionality first, then fewer active gates.

  Selection uses neutral drift (an offspring of equal fitness replaces the
  parent), so the incumbent's fitness is non-decreasing across
  generations.  A run stops either when the evaluation budget is exhausted
  or when the circuit is fully functional and the active-gate count has
  not improved for stagnation_window evaluations.  All randomness comes
  from the seed; rerunning a configuration reproduces the result exactly.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "genotype.hpp"
#include "netlist.hpp"

namespace infosyn
{

struct SearchParams
{
  uint64_t seed{ 0 };
  uint32_t lambda{ 4 };
  double mutation_rate{ 0.05 };
  uint64_t max_evaluations{ 100000 };
  uint64_t stagnation_window{ 10000 };
  bool use_crossover{ false };
  bool use_resize{ false };
  double resize_rate{ 0.02 };
  uint32_t max_levels{ 0 }; // 0 = unbounded growth
};

/*! \brief Throws unless the parameters are usable. */
void validate_params( SearchParams const& params );

/*! \brief State of the incumbent after one generation. */
struct HistoryEntry
{
  uint64_t generation{ 0 };
  uint64_t evaluations{ 0 };
  double functionality{ 0.0 };
  uint32_t active_gates{ 0 };
  double output_entropy_bits{ 0.0 }; // joint entropy of the incumbent's outputs
  double logical_work_bits{ 0.0 };   // sum of active gates' information measures
};

struct SearchResult
{
  Netlist best;
  Fitness best_fitness;
  Genotype best_genotype;
  std::vector<HistoryEntry> history;
  uint64_t evaluations{ 0 };
  std::optional<uint64_t> evaluations_to_functional;
};

/*! \brief Evolves a circuit for \p target on the given geometry/library.
 *
 * The geometry's input and output counts must match the target's shape.
 * The initial parent always costs one evaluation, even under a zero
 * budget (the result still reports the initial best).
 */
SearchResult evolve( TruthTable const& target, Geometry const& geometry, GateLibrary const& library, SearchParams const& params );

} // namespace infosyn
