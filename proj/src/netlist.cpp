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

#include <infosyn/netlist.hpp>

#include <bit>
#include <stdexcept>
#include <string>

namespace infosyn
{

void validate_netlist( Netlist const& nl )
{
  if ( nl.n_inputs < 1 || nl.n_inputs > TruthTable::max_inputs )
    throw std::invalid_argument( "netlist input count out of range" );
  if ( nl.outputs.empty() )
    throw std::invalid_argument( "netlist must drive at least one output" );
  for ( std::size_t k = 0; k < nl.gates.size(); ++k )
  {
    auto const& gate = nl.gates[k];
    validate_gate( gate.kind );
    if ( gate.sources.size() != gate.kind.arity )
      throw std::invalid_argument( "gate " + std::to_string( k ) + " has " + std::to_string( gate.sources.size() ) + " sources for arity " + std::to_string( gate.kind.arity ) );
    for ( auto const& src : gate.sources )
    {
      if ( src.id >= nl.n_inputs + k )
        throw std::invalid_argument( "gate " + std::to_string( k ) + " references signal " + std::to_string( src.id ) + " that is not yet defined" );
    }
  }
  for ( uint32_t const id : nl.outputs )
  {
    if ( id >= nl.n_inputs + nl.gates.size() )
      throw std::invalid_argument( "output references undefined signal " + std::to_string( id ) );
  }
}

namespace
{

uint64_t row_tail_mask( uint32_t n_inputs )
{
  uint64_t const rows = uint64_t( 1 ) << n_inputs;
  return rows >= 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << rows ) - 1 );
}

} // namespace

TruthTable simulate( Netlist const& nl )
{
  validate_netlist( nl );
  uint32_t const n = nl.n_inputs;
  uint64_t const words = words_per_column( n );

  std::vector<std::vector<uint64_t>> signals;
  signals.reserve( n + nl.gates.size() );
  for ( uint32_t i = 0; i < n; ++i )
    signals.push_back( variable_column( n, i ) );

  uint64_t const tail = row_tail_mask( n );
  for ( auto const& gate : nl.gates )
  {
    std::vector<uint64_t> out( words, 0 );
    uint32_t const arity = gate.kind.arity;
    for ( uint64_t w = 0; w < words; ++w )
    {
      uint64_t acc = 0;
      for ( uint32_t row = 0; row < gate.kind.n_rows(); ++row )
      {
        if ( !gate.kind.output( row ) )
          continue;
        uint64_t term = ~uint64_t( 0 );
        for ( uint32_t j = 0; j < arity; ++j )
        {
          auto const& src = gate.sources[j];
          uint64_t v = signals[src.id][w];
          if ( src.inverted )
            v = ~v;
          // first gate input is the most significant bit of the row index
          if ( ( row >> ( arity - 1 - j ) ) & 1 )
            term &= v;
          else
            term &= ~v;
        }
        acc |= term;
      }
      out[w] = acc;
    }
    out.back() &= tail;
    signals.push_back( std::move( out ) );
  }

  std::vector<std::vector<uint64_t>> columns;
  columns.reserve( nl.outputs.size() );
  for ( uint32_t const id : nl.outputs )
    columns.push_back( signals[id] );
  return TruthTable::from_packed_columns( n, std::move( columns ) );
}

bool offspring_replaces( Fitness const& offspring, Fitness const& incumbent )
{
  if ( offspring.functionality != incumbent.functionality )
    return offspring.functionality > incumbent.functionality;
  if ( incumbent.functionality == 1.0 )
    return offspring.active_gates <= incumbent.active_gates;
  return true; // neutral drift below full functionality
}

Fitness fitness( Netlist const& nl, TruthTable const& target )
{
  if ( nl.n_inputs != target.n_inputs() || nl.n_outputs() != target.n_outputs() )
    throw std::invalid_argument( "netlist shape does not match target shape" );
  return fitness_of_simulation( simulate( nl ), target, nl.active_gate_count() );
}

Fitness fitness_of_simulation( TruthTable const& simulated, TruthTable const& target, uint32_t active_gates )
{
  if ( simulated.n_inputs() != target.n_inputs() || simulated.n_outputs() != target.n_outputs() )
    throw std::invalid_argument( "simulated shape does not match target shape" );
  uint64_t mismatches = 0;
  for ( uint32_t j = 0; j < target.n_outputs(); ++j )
  {
    auto const a = simulated.column_words( j );
    auto const b = target.column_words( j );
    for ( std::size_t w = 0; w < a.size(); ++w )
      mismatches += std::popcount( a[w] ^ b[w] );
  }
  uint64_t const total = target.n_rows() * target.n_outputs();
  Fitness fit;
  fit.functionality = static_cast<double>( total - mismatches ) / static_cast<double>( total );
  fit.active_gates = active_gates;
  return fit;
}

double fitness_info( Netlist const& nl, TruthTable const& target )
{
  if ( nl.n_inputs != target.n_inputs() || nl.n_outputs() != target.n_outputs() )
    throw std::invalid_argument( "netlist shape does not match target shape" );
  TruthTable const sim = simulate( nl );
  double h = 0.0;
  for ( uint32_t j = 0; j < target.n_outputs(); ++j )
  {
    auto const a = sim.column_words( j );
    auto const b = target.column_words( j );
    uint64_t mismatches = 0;
    for ( std::size_t w = 0; w < a.size(); ++w )
      mismatches += std::popcount( a[w] ^ b[w] );
    h += binary_entropy( static_cast<double>( mismatches ) / static_cast<double>( target.n_rows() ) );
  }
  return h;
}

} // namespace infosyn
