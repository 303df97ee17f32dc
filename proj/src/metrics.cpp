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

#include <infosyn/metrics.hpp>

#include <algorithm>
#include <stdexcept>

namespace infosyn
{

double network_information( TruthTable const& target )
{
  return input_entropy( target.n_inputs() ) - joint_output_entropy( target );
}

double logical_work( Netlist const& nl )
{
  double work = 0.0;
  for ( auto const& gate : nl.gates )
    work += gate_info_measure( gate.kind );
  return work;
}

std::optional<double> information_potential( std::span<HistoryEntry const> history )
{
  std::optional<double> best;
  for ( auto const& entry : history )
  {
    if ( entry.functionality != 1.0 )
      continue;
    if ( !best || entry.logical_work_bits < *best )
      best = entry.logical_work_bits;
  }
  return best;
}

double vitality( double potential_bits, TruthTable const& target )
{
  double const h = joint_output_entropy( target );
  if ( h == 0.0 )
    throw std::domain_error( "vitality is undefined for a constant target (H(f) = 0)" );
  return potential_bits / h;
}

NetworkMetrics compute_metrics( Netlist const& best, std::span<HistoryEntry const> history, TruthTable const& target )
{
  NetworkMetrics m;
  m.network_information_bits = network_information( target );
  m.logical_work_bits = logical_work( best );
  m.information_potential_bits = information_potential( history );
  if ( m.information_potential_bits && joint_output_entropy( target ) > 0.0 )
    m.vitality = vitality( *m.information_potential_bits, target );
  return m;
}

std::vector<HtPoint> ht_trace( std::span<HistoryEntry const> history, TruthTable const& target )
{
  if ( history.empty() )
    throw std::invalid_argument( "ht_trace requires a non-empty history" );
  double const h_target = joint_output_entropy( target );

  std::vector<HtPoint> trace;
  trace.reserve( history.size() );
  std::optional<double> running_q;
  for ( auto const& entry : history )
  {
    if ( entry.functionality == 1.0 && ( !running_q || entry.logical_work_bits < *running_q ) )
      running_q = entry.logical_work_bits;
    HtPoint point{ entry.generation, entry.output_entropy_bits, std::nullopt };
    if ( running_q && h_target > 0.0 )
      point.t_running = *running_q / h_target;
    trace.push_back( point );
  }
  return trace;
}

} // namespace infosyn
