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
  \file io.hpp
  \brief File formats: PLA subset, truth-vector files, netlist JSON,
         gate-definition files, run configuration, and CSV emitters.

  All parsers reject malformed input with std::runtime_error carrying a
  line-oriented message.  The PLA dialect accepts only completely
  specified functions: every input row must be listed exactly once and
  don't-care symbols are not supported.
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gate_library.hpp"
#include "geometry.hpp"
#include "metrics.hpp"
#include "netlist.hpp"
#include "search.hpp"
#include "truth_table.hpp"

namespace infosyn
{

/*! \brief Parses a completely specified PLA file (.i/.o/.p/rows/.e). */
TruthTable parse_pla( std::string_view text );

/*! \brief Parses the truth-vector format:
 *    n=<N> m=<M>
 *    out0=<2^N bits>
 *    ...
 */
TruthTable parse_truth_vectors( std::string_view text );

/*! \brief Emits the truth-vector format; parse_truth_vectors round-trips it. */
std::string emit_truth_vectors( TruthTable const& tt );

/*! \brief Parses either supported function format (PLA if the first
 * meaningful line starts with '.'). */
TruthTable parse_function( std::string_view text );

/*! \brief Netlist as JSON with stable key order:
 * {"inputs": n, "outputs": [ids], "gates": [{"id", "kind", "sources":
 * [{"from", "invert"}]}]}.  Gate ids are n..n+k-1 in topological order. */
std::string emit_netlist_json( Netlist const& nl );

/*! \brief Reads netlist JSON back, resolving gate kinds by name in \p lib. */
Netlist parse_netlist_json( std::string_view text, GateLibrary const& lib );

/*! \brief Parses a gate-definition file: one `NAME = <truth vector>` per
 * line, arity inferred from the vector length; '#' starts a comment. */
std::vector<GateKind> parse_gate_definitions( std::string_view text );

/*! \brief Builds a library from a comma-separated name list, resolving
 * names against the standard gates plus \p extra definitions.  An empty
 * list selects all known gates. */
GateLibrary make_library( std::string_view names_csv, std::span<GateKind const> extra = {}, bool allow_inverted_inputs = true );

/*! \brief Parses "PxQ" (levels x gates-per-level), e.g. "3x3". */
std::pair<uint32_t, uint32_t> parse_geometry_spec( std::string_view spec );

/*! \brief Run configuration for the synth subcommand (flat key = value file). */
struct RunConfig
{
  std::string target_path;
  uint32_t levels{ 0 };
  uint32_t gates_per_level{ 0 };
  uint32_t levels_back{ 0 }; // 0 = same as levels
  std::string library_names; // empty = all known gates
  std::string library_file;  // optional gate-definition file
  std::optional<uint64_t> seed;
  uint32_t lambda{ 4 };
  double mutation_rate{ 0.05 };
  uint64_t max_evaluations{ 100000 };
  uint64_t stagnation_window{ 10000 };
  bool polarity{ true };
  bool resize{ false };
  double resize_rate{ 0.02 };
  uint32_t max_levels{ 0 };
  bool crossover{ false };
  CapacityMode capacity_mode{ CapacityMode::attenuated };
  std::string netlist_out{ "netlist.json" };
  std::string history_out{ "history.csv" };
};

/*! \brief Parses and validates a run configuration file. */
RunConfig parse_run_config( std::string_view text );

SearchParams search_params_from( RunConfig const& config );

/*! \brief History CSV: generation, evaluations, functionality,
 * active_gates, H_best, Q_running, T_running (running columns empty until
 * the first functional circuit). */
std::string history_csv( std::span<HistoryEntry const> history, TruthTable const& target );

/*! \brief Per-level capacity breakdown as CSV. */
std::string capacity_csv( CapacityReport const& report );

/*! \brief Ranked advise output as CSV. */
std::string advise_csv( std::span<RankedCandidate const> ranked );

/*! \brief Reads a whole file; throws std::runtime_error when unreadable. */
std::string read_file( std::filesystem::path const& path );

/*! \brief Writes via a temporary file and rename, so failed runs never
 * leave partial output behind. */
void write_file_atomic( std::filesystem::path const& path, std::string_view content );

} // namespace infosyn
