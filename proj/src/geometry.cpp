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

#include <infosyn/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace infosyn
{

Geometry Geometry::of( uint32_t levels, uint32_t gates_per_level, uint32_t levels_back, uint32_t n_inputs, uint32_t n_outputs )
{
  Geometry g{ levels, gates_per_level, levels_back, n_inputs, n_outputs };
  validate_geometry( g );
  return g;
}

void validate_geometry( Geometry const& geom )
{
  if ( geom.levels < 1 )
    throw std::invalid_argument( "geometry must have at least one level" );
  if ( geom.gates_per_level < 1 )
    throw std::invalid_argument( "geometry must have at least one gate per level" );
  if ( geom.levels_back < 1 || geom.levels_back > geom.levels )
    throw std::invalid_argument( "levels_back must be in [1, levels]" );
  if ( geom.n_inputs < 1 )
    throw std::invalid_argument( "geometry must have at least one primary input" );
  if ( geom.n_outputs < 1 )
    throw std::invalid_argument( "geometry must have at least one primary output" );
  if ( geom.n_outputs > geom.total_cells() )
    throw std::invalid_argument( "geometry cannot drive " + std::to_string( geom.n_outputs ) + " outputs with " + std::to_string( geom.total_cells() ) + " cells" );
}

double library_capacity( GateLibrary const& lib )
{
  validate_library( lib );
  double sum = 0.0;
  for ( auto const& g : lib.gates )
    sum += gate_info_measure( g );
  return sum;
}

double cell_capacity( GateLibrary const& lib )
{
  validate_library( lib );
  double best = 0.0;
  for ( auto const& g : lib.gates )
    best = std::max( best, gate_info_measure( g ) );
  return best;
}

double tabulated_cell_capacity( GateLibrary const& lib )
{
  return std::round( cell_capacity( lib ) * 100.0 ) / 100.0;
}

CapacityReport geometry_capacity( Geometry const& geom, GateLibrary const& lib, CapacityMode mode )
{
  validate_geometry( geom );
  CapacityReport report;
  report.geometry = geom;
  report.mode = mode;
  report.library_capacity_bits = library_capacity( lib );
  report.cell_capacity_bits = tabulated_cell_capacity( lib );
  report.per_level_cell_bits.reserve( geom.levels );
  double total = 0.0;
  for ( uint32_t level = 0; level < geom.levels; ++level )
  {
    double const per_cell = mode == CapacityMode::attenuated
                                ? report.cell_capacity_bits * std::exp2( -static_cast<double>( level ) )
                                : report.cell_capacity_bits;
    report.per_level_cell_bits.push_back( per_cell );
    total += per_cell * geom.gates_per_level;
  }
  report.total_bits = total;
  return report;
}

double effective_capacity( Geometry const& geom, GateLibrary const& lib, std::span<CellCoord const> used_cells )
{
  validate_geometry( geom );
  double const per_cell = tabulated_cell_capacity( lib );
  std::set<std::pair<uint32_t, uint32_t>> seen;
  double total = 0.0;
  for ( auto const& cell : used_cells )
  {
    if ( cell.level >= geom.levels || cell.pos >= geom.gates_per_level )
      throw std::out_of_range( "cell (" + std::to_string( cell.level ) + ", " + std::to_string( cell.pos ) + ") outside geometry" );
    if ( !seen.insert( { cell.level, cell.pos } ).second )
      throw std::invalid_argument( "cell (" + std::to_string( cell.level ) + ", " + std::to_string( cell.pos ) + ") listed twice" );
    total += per_cell * std::exp2( -static_cast<double>( cell.level ) );
  }
  return total;
}

namespace
{

std::string joined_gate_names( GateLibrary const& lib )
{
  std::string s;
  for ( auto const& g : lib.gates )
  {
    if ( !s.empty() )
      s += ',';
    s += g.name;
  }
  return s;
}

} // namespace

std::vector<RankedCandidate> advise( TargetShape const& target, std::span<GeometryCandidate const> candidates )
{
  if ( candidates.empty() )
    throw std::invalid_argument( "at least one candidate required" );
  if ( target.n_inputs < 1 || target.n_outputs < 1 )
    throw std::invalid_argument( "target shape must have at least one input and one output" );

  std::vector<RankedCandidate> ranked;
  ranked.reserve( candidates.size() );
  for ( auto const& cand : candidates )
  {
    validate_library( cand.library );
    Geometry geom = cand.geometry;
    // structural fields must hold; an undrivable output count is not an
    // error here, it routes the candidate to the infeasible bucket
    if ( geom.levels < 1 || geom.gates_per_level < 1 || geom.levels_back < 1 || geom.levels_back > geom.levels )
      throw std::invalid_argument( "candidate geometry has invalid levels/gates/levels_back" );

    RankedCandidate entry;
    entry.geometry = geom;
    entry.library = cand.library;
    Geometry capacity_geom = geom;
    capacity_geom.n_inputs = std::max( 1u, geom.n_inputs );
    capacity_geom.n_outputs = static_cast<uint32_t>( std::min<uint64_t>( std::max( 1u, geom.n_outputs ), geom.total_cells() ) );
    entry.report = geometry_capacity( capacity_geom, cand.library, CapacityMode::attenuated );
    entry.report.geometry = geom;

    uint32_t const amax = cand.library.max_arity();
    uint32_t const input_cells = ( target.n_inputs + amax - 1 ) / amax;
    entry.utilized_per_level = std::min( geom.gates_per_level, std::max( input_cells, target.n_outputs ) );

    double const per_cell = entry.report.cell_capacity_bits;
    double attenuation_sum = 0.0;
    for ( uint32_t level = 0; level < geom.levels; ++level )
      attenuation_sum += std::exp2( -static_cast<double>( level ) );
    entry.effective_bits = entry.utilized_per_level * per_cell * attenuation_sum;

    entry.feasible = target.n_outputs <= geom.total_cells() && ( target.n_inputs <= 1 || amax >= 2 );
    ranked.push_back( std::move( entry ) );
  }

  std::sort( ranked.begin(), ranked.end(), []( RankedCandidate const& a, RankedCandidate const& b ) {
    if ( a.feasible != b.feasible )
      return a.feasible;
    if ( a.effective_bits != b.effective_bits )
      return a.effective_bits > b.effective_bits;
    if ( a.geometry.total_cells() != b.geometry.total_cells() )
      return a.geometry.total_cells() < b.geometry.total_cells();
    if ( a.library.size() != b.library.size() )
      return a.library.size() < b.library.size();
    if ( a.geometry.levels != b.geometry.levels )
      return a.geometry.levels < b.geometry.levels;
    if ( a.geometry.gates_per_level != b.geometry.gates_per_level )
      return a.geometry.gates_per_level < b.geometry.gates_per_level;
    return joined_gate_names( a.library ) < joined_gate_names( b.library );
  } );

  for ( std::size_t i = 0; i < ranked.size(); ++i )
    ranked[i].rank = static_cast<uint32_t>( i + 1 );
  return ranked;
}

} // namespace infosyn
