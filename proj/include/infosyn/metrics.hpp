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
  \file metrics.hpp
  \brief Network-level information measures of a synthesis run: network
         information, logical work, information potential and vitality.

  Logical work is operationalized as the sum of the active gates'
  information measures; the information potential is reported as the
  minimum logical work observed over fully functional circuits, an upper
  bound on the true infimum over all realizations.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netlist.hpp"
#include "search.hpp"
#include "truth_table.hpp"

namespace infosyn
{

/*! \brief Information lost through the network: I_NW = H(X) - H(f).
 *
 * Uses the joint output entropy for multi-output functions.  Always >= 0;
 * zero exactly for a lossless (e.g. identity) mapping.
 */
double network_information( TruthTable const& target );

/*! \brief Logical work of a concrete circuit: sum of the active gates'
 * information measures.  Zero for wire-only circuits. */
double logical_work( Netlist const& nl );

/*! \brief Minimum logical work over the fully functional circuits in the
 * history; empty when no functional circuit was seen. */
std::optional<double> information_potential( std::span<HistoryEntry const> history );

/*! \brief Information vitality T = Q / H(f).  Throws when H(f) = 0. */
double vitality( double potential_bits, TruthTable const& target );

/*! \brief Network metrics of a finished run. */
struct NetworkMetrics
{
  double network_information_bits{ 0.0 };
  double logical_work_bits{ 0.0 };
  std::optional<double> information_potential_bits;
  std::optional<double> vitality;
};

NetworkMetrics compute_metrics( Netlist const& best, std::span<HistoryEntry const> history, TruthTable const& target );

/*! \brief One point of the entropy-vs-vitality trace. */
struct HtPoint
{
  uint64_t generation{ 0 };
  double h_best{ 0.0 };            // joint output entropy of the incumbent
  std::optional<double> t_running; // absent until the first functional hit
};

/*! \brief Per-generation entropy/vitality trace of a run.
 *
 * The vitality column uses the running information potential over the
 * functional circuits seen so far; it stays absent for targets with zero
 * output entropy.
 */
std::vector<HtPoint> ht_trace( std::span<HistoryEntry const> history, TruthTable const& target );

} // namespace infosyn
