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

#include <infosyn/genotype.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace infosyn
{

namespace
{

uint32_t reachable_levels( Geometry const& geom, uint32_t level )
{
  return std::min( geom.levels_back, level );
}

} // namespace

Genotype::Genotype( Geometry geometry, std::shared_ptr<GateLibrary const> library, std::vector<uint32_t> genes )
    : geometry_( geometry ), library_( std::move( library ) ), genes_( std::move( genes ) )
{
  if ( !library_ )
    throw std::invalid_argument( "genotype requires a gate library" );
  validate_genotype( geometry_, *library_, genes_ );
}

std::size_t Genotype::cell_gene_offset( uint32_t level, uint32_t pos ) const
{
  return ( std::size_t( level ) * geometry_.gates_per_level + pos ) * genes_per_cell();
}

std::size_t Genotype::output_gene_offset() const
{
  return geometry_.total_cells() * genes_per_cell();
}

std::size_t Genotype::expected_gene_count() const
{
  return output_gene_offset() + geometry_.n_outputs;
}

uint32_t Genotype::connection_domain( uint32_t level ) const
{
  return geometry_.n_inputs + geometry_.gates_per_level * reachable_levels( geometry_, level );
}

uint32_t Genotype::output_domain() const
{
  return geometry_.n_inputs + static_cast<uint32_t>( geometry_.total_cells() );
}

uint32_t Genotype::source_id( uint32_t level, uint32_t gene_value ) const
{
  if ( gene_value < geometry_.n_inputs )
    return gene_value;
  uint32_t const first_level = level - reachable_levels( geometry_, level );
  return geometry_.n_inputs + first_level * geometry_.gates_per_level + ( gene_value - geometry_.n_inputs );
}

bool Genotype::operator==( Genotype const& other ) const
{
  return geometry_ == other.geometry_ && *library_ == *other.library_ && genes_ == other.genes_;
}

void validate_genotype( Geometry const& geometry, GateLibrary const& library, std::vector<uint32_t> const& genes )
{
  validate_geometry( geometry );
  validate_library( library );

  uint32_t const amax = library.max_arity();
  uint32_t const per_cell = 1 + 2 * amax;
  std::size_t const expected = geometry.total_cells() * per_cell + geometry.n_outputs;
  if ( genes.size() != expected )
    throw std::invalid_argument( "genotype has " + std::to_string( genes.size() ) + " genes, expected " + std::to_string( expected ) );

  std::size_t idx = 0;
  for ( uint32_t level = 0; level < geometry.levels; ++level )
  {
    uint32_t const domain = geometry.n_inputs + geometry.gates_per_level * reachable_levels( geometry, level );
    for ( uint32_t pos = 0; pos < geometry.gates_per_level; ++pos )
    {
      if ( genes[idx] >= library.size() )
        throw std::invalid_argument( "gate gene of cell (" + std::to_string( level ) + ", " + std::to_string( pos ) + ") out of library range" );
      ++idx;
      for ( uint32_t k = 0; k < amax; ++k, ++idx )
      {
        if ( genes[idx] >= domain )
          throw std::invalid_argument( "connection gene of cell (" + std::to_string( level ) + ", " + std::to_string( pos ) + ") violates levels-back" );
      }
      for ( uint32_t k = 0; k < amax; ++k, ++idx )
      {
        if ( genes[idx] > 1 )
          throw std::invalid_argument( "polarity gene must be 0 or 1" );
        if ( genes[idx] == 1 && !library.allow_inverted_inputs )
          throw std::invalid_argument( "polarity gene set but library forbids inverted inputs" );
      }
    }
  }
  uint32_t const out_domain = geometry.n_inputs + static_cast<uint32_t>( geometry.total_cells() );
  for ( uint32_t o = 0; o < geometry.n_outputs; ++o, ++idx )
  {
    if ( genes[idx] >= out_domain )
      throw std::invalid_argument( "output gene " + std::to_string( o ) + " out of range" );
  }
}

bool is_valid( Genotype const& g )
{
  try
  {
    validate_genotype( g.geometry(), g.library(), g.genes() );
    return true;
  }
  catch ( std::exception const& )
  {
    return false;
  }
}

namespace
{

void append_random_cell( std::vector<uint32_t>& genes, Geometry const& geom, GateLibrary const& lib, uint32_t level, Rng& rng )
{
  uint32_t const amax = lib.max_arity();
  uint32_t const domain = geom.n_inputs + geom.gates_per_level * reachable_levels( geom, level );
  genes.push_back( static_cast<uint32_t>( rng.below( lib.size() ) ) );
  for ( uint32_t k = 0; k < amax; ++k )
    genes.push_back( static_cast<uint32_t>( rng.below( domain ) ) );
  for ( uint32_t k = 0; k < amax; ++k )
    genes.push_back( lib.allow_inverted_inputs ? static_cast<uint32_t>( rng.below( 2 ) ) : 0 );
}

} // namespace

Genotype random_genotype( Geometry const& geometry, std::shared_ptr<GateLibrary const> library, Rng& rng )
{
  if ( !library )
    throw std::invalid_argument( "genotype requires a gate library" );
  validate_geometry( geometry );
  validate_library( *library );

  std::vector<uint32_t> genes;
  genes.reserve( geometry.total_cells() * ( 1 + 2 * library->max_arity() ) + geometry.n_outputs );
  for ( uint32_t level = 0; level < geometry.levels; ++level )
  {
    for ( uint32_t pos = 0; pos < geometry.gates_per_level; ++pos )
      append_random_cell( genes, geometry, *library, level, rng );
  }
  uint32_t const out_domain = geometry.n_inputs + static_cast<uint32_t>( geometry.total_cells() );
  for ( uint32_t o = 0; o < geometry.n_outputs; ++o )
    genes.push_back( static_cast<uint32_t>( rng.below( out_domain ) ) );
  return Genotype( geometry, std::move( library ), std::move( genes ) );
}

Genotype random_genotype( Geometry const& geometry, std::shared_ptr<GateLibrary const> library, uint64_t seed )
{
  Rng rng( seed );
  return random_genotype( geometry, std::move( library ), rng );
}

Genotype mutate( Genotype const& g, double rate, Rng& rng )
{
  if ( !( rate > 0.0 ) || rate > 1.0 )
    throw std::invalid_argument( "mutation rate must be in (0, 1]" );

  Geometry const& geom = g.geometry();
  GateLibrary const& lib = g.library();
  uint32_t const amax = lib.max_arity();
  std::vector<uint32_t> genes = g.genes();

  std::size_t idx = 0;
  for ( uint32_t level = 0; level < geom.levels; ++level )
  {
    uint32_t const domain = g.connection_domain( level );
    for ( uint32_t pos = 0; pos < geom.gates_per_level; ++pos )
    {
      if ( rng.bernoulli( rate ) )
        genes[idx] = static_cast<uint32_t>( rng.below( lib.size() ) );
      ++idx;
      for ( uint32_t k = 0; k < amax; ++k, ++idx )
      {
        if ( rng.bernoulli( rate ) )
          genes[idx] = static_cast<uint32_t>( rng.below( domain ) );
      }
      for ( uint32_t k = 0; k < amax; ++k, ++idx )
      {
        if ( lib.allow_inverted_inputs && rng.bernoulli( rate ) )
          genes[idx] = static_cast<uint32_t>( rng.below( 2 ) );
      }
    }
  }
  for ( std::size_t o = g.output_gene_offset(); o < genes.size(); ++o )
  {
    if ( rng.bernoulli( rate ) )
      genes[o] = static_cast<uint32_t>( rng.below( g.output_domain() ) );
  }
  return Genotype( geom, g.library_ptr(), std::move( genes ) );
}

Genotype crossover( Genotype const& a, Genotype const& b, Rng& rng )
{
  if ( !( a.geometry() == b.geometry() ) || !( a.library() == b.library() ) )
    throw std::invalid_argument( "crossover requires identical geometry and library" );

  Geometry const& geom = a.geometry();
  uint32_t const per_cell = a.genes_per_cell();
  std::vector<uint32_t> genes = a.genes();
  for ( uint32_t level = 0; level < geom.levels; ++level )
  {
    for ( uint32_t pos = 0; pos < geom.gates_per_level; ++pos )
    {
      if ( rng.bernoulli( 0.5 ) )
        continue; // keep the block from a
      std::size_t const off = a.cell_gene_offset( level, pos );
      std::copy_n( b.genes().begin() + off, per_cell, genes.begin() + off );
    }
  }
  for ( std::size_t o = a.output_gene_offset(); o < genes.size(); ++o )
  {
    if ( !rng.bernoulli( 0.5 ) )
      genes[o] = b.genes()[o];
  }
  return Genotype( geom, a.library_ptr(), std::move( genes ) );
}

Genotype grow_one_level( Genotype const& g, Rng& rng )
{
  Geometry geom = g.geometry();
  uint32_t const new_level = geom.levels;
  geom.levels += 1;

  std::vector<uint32_t> genes( g.genes().begin(), g.genes().begin() + g.output_gene_offset() );
  genes.reserve( g.genes().size() + std::size_t( geom.gates_per_level ) * g.genes_per_cell() );
  for ( uint32_t pos = 0; pos < geom.gates_per_level; ++pos )
    append_random_cell( genes, geom, g.library(), new_level, rng );
  genes.insert( genes.end(), g.genes().begin() + g.output_gene_offset(), g.genes().end() );
  return Genotype( geom, g.library_ptr(), std::move( genes ) );
}

Genotype shrink_one_level( Genotype const& g )
{
  Geometry geom = g.geometry();
  if ( geom.levels == 1 )
    throw std::invalid_argument( "cannot shrink a single-level geometry" );
  geom.levels -= 1;
  geom.levels_back = std::min( geom.levels_back, geom.levels );

  uint32_t const q = geom.gates_per_level;
  uint32_t const first_removed_id = geom.n_inputs + geom.levels * q;

  std::vector<uint32_t> genes( g.genes().begin(), g.genes().begin() + std::size_t( geom.levels ) * q * g.genes_per_cell() );
  for ( std::size_t o = g.output_gene_offset(); o < g.genes().size(); ++o )
  {
    uint32_t v = g.genes()[o];
    if ( v >= first_removed_id )
      v -= q; // same position, one level closer to the inputs
    genes.push_back( v );
  }
  return Genotype( geom, g.library_ptr(), std::move( genes ) );
}

Genotype resize_mutation( Genotype const& g, Rng& rng, double rate, uint32_t max_levels )
{
  if ( rate < 0.0 || rate > 1.0 )
    throw std::invalid_argument( "resize rate must be in [0, 1]" );
  if ( !rng.bernoulli( rate ) )
    return g;

  bool const can_shrink = g.geometry().levels > 1;
  bool const can_grow = max_levels == 0 || g.geometry().levels < max_levels;
  if ( !can_shrink && !can_grow )
    return g;
  bool const grow = !can_shrink ? true : ( !can_grow ? false : rng.bernoulli( 0.5 ) );
  return grow ? grow_one_level( g, rng ) : shrink_one_level( g );
}

Netlist decode( Genotype const& g )
{
  Geometry const& geom = g.geometry();
  GateLibrary const& lib = g.library();
  uint32_t const q = geom.gates_per_level;
  uint32_t const n_cells = static_cast<uint32_t>( geom.total_cells() );

  std::vector<char> active( n_cells, 0 );
  std::vector<uint32_t> stack;
  auto mark = [&]( uint32_t id ) {
    if ( id >= geom.n_inputs )
    {
      uint32_t const cell = id - geom.n_inputs;
      if ( !active[cell] )
      {
        active[cell] = 1;
        stack.push_back( cell );
      }
    }
  };

  for ( uint32_t o = 0; o < geom.n_outputs; ++o )
    mark( g.genes()[g.output_gene_offset() + o] );

  while ( !stack.empty() )
  {
    uint32_t const cell = stack.back();
    stack.pop_back();
    uint32_t const level = cell / q;
    std::size_t const off = g.cell_gene_offset( level, cell % q );
    GateKind const& kind = lib.at( g.genes()[off] );
    for ( uint32_t k = 0; k < kind.arity; ++k )
      mark( g.source_id( level, g.genes()[off + 1 + k] ) );
  }

  // level-major cell order is topological: sources always sit in lower levels
  Netlist nl;
  nl.n_inputs = geom.n_inputs;
  std::vector<uint32_t> netlist_id( n_cells, 0 );
  uint32_t const amax = lib.max_arity();
  for ( uint32_t cell = 0; cell < n_cells; ++cell )
  {
    if ( !active[cell] )
      continue;
    uint32_t const level = cell / q;
    std::size_t const off = g.cell_gene_offset( level, cell % q );
    GateKind const& kind = lib.at( g.genes()[off] );

    NetGate gate;
    gate.kind = kind;
    gate.sources.reserve( kind.arity );
    for ( uint32_t k = 0; k < kind.arity; ++k )
    {
      uint32_t const src = g.source_id( level, g.genes()[off + 1 + k] );
      bool const inverted = g.genes()[off + 1 + amax + k] != 0;
      uint32_t const id = src < geom.n_inputs ? src : netlist_id[src - geom.n_inputs];
      gate.sources.push_back( Source{ id, inverted } );
    }
    netlist_id[cell] = nl.n_inputs + nl.active_gate_count();
    nl.gates.push_back( std::move( gate ) );
  }

  nl.outputs.reserve( geom.n_outputs );
  for ( uint32_t o = 0; o < geom.n_outputs; ++o )
  {
    uint32_t const id = g.genes()[g.output_gene_offset() + o];
    nl.outputs.push_back( id < geom.n_inputs ? id : netlist_id[id - geom.n_inputs] );
  }
  return nl;
}

} // namespace infosyn
