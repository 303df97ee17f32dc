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

#include <infosyn/gate_library.hpp>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

// Gate measures are computed directly on the packed truth bits here; the
// test suite cross-checks them against the TruthTable entropy machinery.

namespace infosyn
{

namespace
{

double plog2p( double p )
{
  return p > 0.0 ? p * std::log2( p ) : 0.0;
}

double entropy_of_counts( uint32_t ones, uint32_t total )
{
  double const p = static_cast<double>( ones ) / static_cast<double>( total );
  double const h = -plog2p( p ) - plog2p( 1.0 - p );
  return h == 0.0 ? 0.0 : h; // avoid -0.0 for constant outputs
}

} // namespace

GateKind GateKind::from_truth_vector( std::string name, std::string_view bits )
{
  GateKind g;
  g.name = std::move( name );
  auto const rows = bits.size();
  if ( rows < 2 || ( rows & ( rows - 1 ) ) != 0 || rows > ( 1u << max_gate_arity ) )
    throw std::invalid_argument( "gate truth vector length must be 2, 4, 8 or 16, got " + std::to_string( rows ) );
  g.arity = static_cast<uint32_t>( std::countr_zero( rows ) );
  for ( std::size_t i = 0; i < rows; ++i )
  {
    if ( bits[i] != '0' && bits[i] != '1' )
      throw std::invalid_argument( std::string( "non-binary character '" ) + bits[i] + "' in gate truth vector" );
    if ( bits[i] == '1' )
      g.truth_bits |= 1u << i;
  }
  validate_gate( g );
  return g;
}

std::string GateKind::truth_vector() const
{
  std::string s( n_rows(), '0' );
  for ( uint32_t i = 0; i < n_rows(); ++i )
  {
    if ( output( i ) )
      s[i] = '1';
  }
  return s;
}

void validate_gate( GateKind const& g )
{
  if ( g.name.empty() )
    throw std::invalid_argument( "gate name must not be empty" );
  if ( g.arity < 1 || g.arity > max_gate_arity )
    throw std::invalid_argument( "gate arity must be in [1, " + std::to_string( max_gate_arity ) + "]" );
  if ( g.truth_bits >> g.n_rows() )
    throw std::invalid_argument( "gate truth bits exceed 2^arity rows" );
}

GateKind not_gate()
{
  return GateKind::from_truth_vector( "NOT", "10" );
}

GateKind and_gate()
{
  return GateKind::from_truth_vector( "AND", "0001" );
}

GateKind or_gate()
{
  return GateKind::from_truth_vector( "OR", "0111" );
}

GateKind exor_gate()
{
  return GateKind::from_truth_vector( "EXOR", "0110" );
}

std::optional<std::size_t> GateLibrary::find( std::string_view name ) const
{
  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    if ( gates[i].name == name )
      return i;
  }
  return std::nullopt;
}

uint32_t GateLibrary::max_arity() const
{
  uint32_t a = 0;
  for ( auto const& g : gates )
    a = std::max( a, g.arity );
  return a;
}

GateLibrary standard_library()
{
  return GateLibrary{ { not_gate(), and_gate(), or_gate(), exor_gate() }, true };
}

void validate_library( GateLibrary const& lib )
{
  if ( lib.empty() )
    throw std::invalid_argument( "gate library must not be empty" );
  std::unordered_set<std::string> names;
  for ( auto const& g : lib.gates )
  {
    validate_gate( g );
    if ( !names.insert( g.name ).second )
      throw std::invalid_argument( "duplicate gate name '" + g.name + "' in library" );
  }
}

double gate_output_entropy( GateKind const& g )
{
  validate_gate( g );
  uint32_t const ones = std::popcount( g.truth_bits & ( ( 1u << g.n_rows() ) - 1 ) );
  return entropy_of_counts( ones, g.n_rows() );
}

double gate_info_measure( GateKind const& g )
{
  return static_cast<double>( g.arity ) - gate_output_entropy( g );
}

double gate_transmission( GateKind const& g, uint32_t input )
{
  validate_gate( g );
  if ( input >= g.arity )
    throw std::out_of_range( "gate input index " + std::to_string( input ) + " out of range for arity " + std::to_string( g.arity ) );
  uint32_t const bit = g.arity - 1 - input; // first input is the most significant index bit
  uint32_t ones_where_set = 0;
  uint32_t ones_where_clear = 0;
  for ( uint32_t row = 0; row < g.n_rows(); ++row )
  {
    if ( !g.output( row ) )
      continue;
    if ( ( row >> bit ) & 1 )
      ++ones_where_set;
    else
      ++ones_where_clear;
  }
  uint32_t const half = g.n_rows() / 2;
  return 0.5 * entropy_of_counts( ones_where_set, half ) + 0.5 * entropy_of_counts( ones_where_clear, half );
}

} // namespace infosyn
