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
  \file netlist.hpp
  \brief Decoded feed-forward circuits, exhaustive simulation, and fitness.

  Signals are referenced by id: ids 0..n_inputs-1 are the primary inputs,
  id n_inputs+k is gate k of the netlist.  Gates are stored in topological
  order (every source id is smaller than the gate's own id), which the
  feed-forward cell array guarantees by construction.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "gate_library.hpp"
#include "truth_table.hpp"

namespace infosyn
{

/*! \brief Signal reference with connection polarity (inverted input). */
struct Source
{
  uint32_t id{ 0 };
  bool inverted{ false };

  bool operator==( Source const& other ) const = default;
};

struct NetGate
{
  GateKind kind;
  std::vector<Source> sources; // one per gate input, first input first

  bool operator==( NetGate const& other ) const = default;
};

/*! \brief Active-gate circuit: what remains of a genotype after decoding. */
struct Netlist
{
  uint32_t n_inputs{ 1 };
  std::vector<NetGate> gates;
  std::vector<uint32_t> outputs; // signal id per primary output

  uint32_t active_gate_count() const { return static_cast<uint32_t>( gates.size() ); }
  uint32_t n_outputs() const { return static_cast<uint32_t>( outputs.size() ); }

  bool operator==( Netlist const& other ) const = default;
};

/*! \brief Throws unless ids are in range, topologically ordered, and arities match. */
void validate_netlist( Netlist const& nl );

/*! \brief Exhaustively evaluates the circuit over all 2^n input rows. */
TruthTable simulate( Netlist const& nl );

/*! \brief Two-fold fitness: functionality first, then realization cost. */
struct Fitness
{
  double functionality{ 0.0 }; // fraction of correct output bits, 1.0 = exact
  uint32_t active_gates{ 0 };
};

/*! \brief Selection rule: does an offspring replace the incumbent?
 *
 * Higher functionality always wins.  At equal functionality the offspring
 * is preferred (neutral drift), except that once functionality is 1.0 an
 * offspring using more gates is rejected.
 */
bool offspring_replaces( Fitness const& offspring, Fitness const& incumbent );

/*! \brief Functionality of the circuit against a target of the same shape. */
Fitness fitness( Netlist const& nl, TruthTable const& target );

/*! \brief Same, from an already simulated table (avoids re-simulating). */
Fitness fitness_of_simulation( TruthTable const& simulated, TruthTable const& target, uint32_t active_gates );

/*! \brief Information-based fitness signal: sum over outputs of the error
 * column's entropy.  Minimized; 0 for an exact match but also for an exact
 * complement, so it is exposed for experimentation rather than used as the
 * default objective.
 */
double fitness_info( Netlist const& nl, TruthTable const& target );

} // namespace infosyn
