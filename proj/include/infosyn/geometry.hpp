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
  \file geometry.hpp
  \brief Rectangular cell-array geometries and their information capacity.

  Capacity estimates score a geometry before any evolution runs: each cell
  can destroy at most the library's best per-gate information measure, and
  in attenuated mode that budget halves with every level away from the
  primary inputs.  The resulting figures drive the a-priori geometry
  ranking in advise().
*/

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gate_library.hpp"
#include "truth_table.hpp"

namespace infosyn
{

/*! \brief Shape of the uncommitted cell array a circuit is evolved on.
 *
 * The convention throughout the library (and the "PxQ" syntax of the CLI)
 * is levels x gates-per-level: `levels` counts columns from the primary
 * inputs toward the outputs, and `gates_per_level` cells sit in each.
 * Cells in level l may connect to primary inputs or to cells in the
 * preceding `levels_back` levels.
 */
struct Geometry
{
  uint32_t levels{ 1 };          // p
  uint32_t gates_per_level{ 1 }; // q
  uint32_t levels_back{ 1 };
  uint32_t n_inputs{ 1 };
  uint32_t n_outputs{ 1 };

  /*! \brief The one place the levels x gates-per-level convention is fixed. */
  static Geometry of( uint32_t levels, uint32_t gates_per_level, uint32_t levels_back, uint32_t n_inputs, uint32_t n_outputs );

  uint64_t total_cells() const { return uint64_t( levels ) * gates_per_level; }

  bool operator==( Geometry const& other ) const = default;
};

/*! \brief Throws unless all Geometry invariants hold. */
void validate_geometry( Geometry const& geom );

enum class CapacityMode
{
  attenuated, // per-cell budget halves each level away from the inputs
  flat        // every cell counts the full per-cell budget
};

/*! \brief Capacity breakdown of a geometry over a gate library. */
struct CapacityReport
{
  Geometry geometry;
  CapacityMode mode{ CapacityMode::attenuated };
  double library_capacity_bits{ 0.0 };
  double cell_capacity_bits{ 0.0 };          // tabulated per-cell equivalent used below
  std::vector<double> per_level_cell_bits{}; // per-cell capacity at each level
  double total_bits{ 0.0 };
};

/*! \brief Library capacity: sum of gate information measures. */
double library_capacity( GateLibrary const& lib );

/*! \brief Cell capacity: the library's maximal gate information measure. */
double cell_capacity( GateLibrary const& lib );

/*! \brief Cell capacity quantized to 0.01 bit.
 *
 * Capacity compositions quote per-gate equivalents at the 0.01-bit
 * precision customary in primitive-gate tables, so composed geometry
 * totals follow the same two-decimal arithmetic (e.g. 3x3 over
 * {NOT,AND,OR} = 3*1.19*1.75 = 6.2475 rather than 6.2408 from the
 * unrounded measure).
 */
double tabulated_cell_capacity( GateLibrary const& lib );

/*! \brief Capacity of a full geometry.
 *
 * Attenuated mode assigns a cell in level l (1-indexed from the inputs)
 * the capacity I_cell * 2^-(l-1); flat mode uses p*q*I_cell.  Attenuated
 * is the mode the worked estimates use; flat is kept for comparison.
 */
CapacityReport geometry_capacity( Geometry const& geom, GateLibrary const& lib, CapacityMode mode = CapacityMode::attenuated );

/*! \brief Cell position inside a geometry; level 0 is adjacent to the inputs. */
struct CellCoord
{
  uint32_t level{ 0 };
  uint32_t pos{ 0 };

  bool operator==( CellCoord const& other ) const = default;
};

/*! \brief Attenuated capacity summed over only the utilized cells. */
double effective_capacity( Geometry const& geom, GateLibrary const& lib, std::span<CellCoord const> used_cells );

/*! \brief Input/output counts of the function a geometry is ranked for. */
struct TargetShape
{
  uint32_t n_inputs{ 1 };
  uint32_t n_outputs{ 1 };
};

struct GeometryCandidate
{
  Geometry geometry;
  GateLibrary library;
};

struct RankedCandidate
{
  uint32_t rank{ 0 };
  Geometry geometry;
  GateLibrary library;
  CapacityReport report;         // full attenuated capacity
  double effective_bits{ 0.0 };  // capacity of the cells the target shape can utilize
  uint32_t utilized_per_level{ 0 };
  bool feasible{ true };
};

/*! \brief Ranks candidate geometry/library pairs for a target shape.
 *
 * Each candidate is scored by the attenuated capacity of the cells a
 * circuit of the given shape can utilize: min(q, max(ceil(n_I / max
 * arity), n_O)) cells per level.  Infeasible candidates (undrivable
 * outputs, or no 2-input gate for a multi-input target) rank last.  Ties
 * break toward fewer cells, then smaller libraries; the final order does
 * not depend on the input order of the candidates.
 */
std::vector<RankedCandidate> advise( TargetShape const& target, std::span<GeometryCandidate const> candidates );

} // namespace infosyn
