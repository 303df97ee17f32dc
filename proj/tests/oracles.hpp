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
  \file oracles.hpp
  \brief Test-only naive reference implementations.

  Everything here recomputes quantities by direct row enumeration and the
  textbook formulas, independent of the packed-word fast paths in the
  library, so the two routes check each other.
*/

#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <infosyn/netlist.hpp>
#include <infosyn/rng.hpp>
#include <infosyn/truth_table.hpp>

namespace infosyn::test
{

inline double naive_entropy( TruthTable const& tt, uint32_t output )
{
  uint64_t counts[2] = { 0, 0 };
  for ( uint64_t row = 0; row < tt.n_rows(); ++row )
    ++counts[tt.get( output, row ) ? 1 : 0];
  double h = 0.0;
  for ( uint64_t const c : counts )
  {
    if ( c == 0 )
      continue;
    double const p = static_cast<double>( c ) / static_cast<double>( tt.n_rows() );
    h -= p * std::log2( p );
  }
  return h;
}

// H(A|B) = -sum_{a,b} p(a,b) * log2( p(a,b) / p(b) ), with B the joint
// assignment of the conditioning variables
inline double naive_conditional_entropy( TruthTable const& tt, uint32_t output, std::span<uint32_t const> vars )
{
  std::map<uint64_t, std::array<uint64_t, 2>> buckets;
  uint32_t const n = tt.n_inputs();
  for ( uint64_t row = 0; row < tt.n_rows(); ++row )
  {
    uint64_t key = 0;
    for ( uint32_t const v : vars )
      key = ( key << 1 ) | ( ( row >> ( n - 1 - v ) ) & 1 );
    ++buckets[key][tt.get( output, row ) ? 1 : 0];
  }
  double const total = static_cast<double>( tt.n_rows() );
  double h = 0.0;
  for ( auto const& [key, counts] : buckets )
  {
    double const pb = static_cast<double>( counts[0] + counts[1] ) / total;
    for ( uint64_t const c : counts )
    {
      if ( c == 0 )
        continue;
      double const pab = static_cast<double>( c ) / total;
      h -= pab * std::log2( pab / pb );
    }
  }
  return h;
}

inline double naive_conditional_entropy( TruthTable const& tt, uint32_t output, uint32_t var )
{
  uint32_t const vars[1] = { var };
  return naive_conditional_entropy( tt, output, vars );
}

inline double naive_joint_output_entropy( TruthTable const& tt )
{
  std::map<std::vector<bool>, uint64_t> counts;
  for ( uint64_t row = 0; row < tt.n_rows(); ++row )
  {
    std::vector<bool> tuple;
    for ( uint32_t j = 0; j < tt.n_outputs(); ++j )
      tuple.push_back( tt.get( j, row ) );
    ++counts[tuple];
  }
  double const total = static_cast<double>( tt.n_rows() );
  double h = 0.0;
  for ( auto const& [tuple, c] : counts )
  {
    double const p = static_cast<double>( c ) / total;
    h -= p * std::log2( p );
  }
  return h;
}

inline TruthTable random_table( Rng& rng, uint32_t n_inputs, uint32_t n_outputs )
{
  TruthTable tt( n_inputs, n_outputs );
  for ( uint32_t j = 0; j < n_outputs; ++j )
  {
    for ( uint64_t row = 0; row < tt.n_rows(); ++row )
      tt.set( j, row, rng.below( 2 ) == 1 );
  }
  return tt;
}

// row-at-a-time circuit evaluation, independent of the packed simulator
inline TruthTable naive_simulate( Netlist const& nl )
{
  TruthTable tt( nl.n_inputs, std::max<uint32_t>( nl.n_outputs(), 1 ) );
  for ( uint64_t row = 0; row < tt.n_rows(); ++row )
  {
    std::vector<bool> signals;
    for ( uint32_t i = 0; i < nl.n_inputs; ++i )
      signals.push_back( ( row >> ( nl.n_inputs - 1 - i ) ) & 1 );
    for ( auto const& gate : nl.gates )
    {
      uint32_t idx = 0;
      for ( auto const& src : gate.sources )
      {
        bool v = signals[src.id];
        if ( src.inverted )
          v = !v;
        idx = ( idx << 1 ) | ( v ? 1 : 0 );
      }
      signals.push_back( gate.kind.output( idx ) );
    }
    for ( uint32_t j = 0; j < nl.n_outputs(); ++j )
      tt.set( j, row, signals[nl.outputs[j]] );
  }
  return tt;
}

} // namespace infosyn::test
