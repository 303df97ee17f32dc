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

#include <infosyn/search.hpp>

#include <infosyn/metrics.hpp>

#include <stdexcept>
#include <utility>

namespace infosyn
{

void validate_params( SearchParams const& params )
{
  if ( params.lambda < 1 )
    throw std::invalid_argument( "lambda must be at least 1" );
  if ( !( params.mutation_rate > 0.0 ) || params.mutation_rate > 1.0 )
    throw std::invalid_argument( "mutation rate must be in (0, 1]" );
  if ( params.resize_rate < 0.0 || params.resize_rate > 1.0 )
    throw std::invalid_argument( "resize rate must be in [0, 1]" );
}

namespace
{

struct Incumbent
{
  Genotype genotype;
  Netlist netlist;
  Fitness fit;
  double output_entropy{ 0.0 };
  double logical_work{ 0.0 };
};

Incumbent make_incumbent( Genotype genotype, TruthTable const& target )
{
  Netlist nl = decode( genotype );
  TruthTable const sim = simulate( nl );
  Fitness const fit = fitness_of_simulation( sim, target, nl.active_gate_count() );
  double const h = joint_output_entropy( sim );
  double const work = logical_work( nl );
  return Incumbent{ std::move( genotype ), std::move( nl ), fit, h, work };
}

} // namespace

SearchResult evolve( TruthTable const& target, Geometry const& geometry, GateLibrary const& library, SearchParams const& params )
{
  validate_params( params );
  validate_geometry( geometry );
  validate_library( library );
  if ( geometry.n_inputs != target.n_inputs() || geometry.n_outputs != target.n_outputs() )
    throw std::invalid_argument( "geometry input/output counts do not match the target shape" );

  Rng rng( params.seed );
  auto lib = std::make_shared<GateLibrary const>( library );

  Incumbent parent = make_incumbent( random_genotype( geometry, lib, rng ), target );
  uint64_t evaluations = 1;
  std::optional<uint64_t> evaluations_to_functional;
  uint64_t last_cost_improvement = evaluations;
  if ( parent.fit.functionality == 1.0 )
    evaluations_to_functional = evaluations;

  std::vector<HistoryEntry> history;
  history.push_back( { 0, evaluations, parent.fit.functionality, parent.fit.active_gates, parent.output_entropy, parent.logical_work } );

  // previous generation's best offspring, kept as a crossover mate
  std::optional<Genotype> mate;

  uint64_t generation = 0;
  while ( evaluations < params.max_evaluations )
  {
    if ( parent.fit.functionality == 1.0 && evaluations - last_cost_improvement >= params.stagnation_window )
      break;
    ++generation;

    std::optional<Incumbent> best_offspring;
    for ( uint32_t i = 0; i < params.lambda && evaluations < params.max_evaluations; ++i )
    {
      Genotype child = parent.genotype;
      if ( params.use_crossover && mate && mate->geometry() == child.geometry() )
        child = crossover( child, *mate, rng );
      if ( params.use_resize )
        child = resize_mutation( child, rng, params.resize_rate, params.max_levels );
      child = mutate( child, params.mutation_rate, rng );

      Incumbent offspring = make_incumbent( std::move( child ), target );
      ++evaluations;
      if ( offspring.fit.functionality == 1.0 && !evaluations_to_functional )
        evaluations_to_functional = evaluations;
      if ( !best_offspring || offspring_replaces( offspring.fit, best_offspring->fit ) )
        best_offspring = std::move( offspring );
    }
    if ( !best_offspring )
      break; // budget exhausted before any offspring this generation

    if ( params.use_crossover )
      mate = best_offspring->genotype;

    if ( offspring_replaces( best_offspring->fit, parent.fit ) )
    {
      bool const cost_improved =
          best_offspring->fit.functionality == 1.0 &&
          ( parent.fit.functionality < 1.0 || best_offspring->fit.active_gates < parent.fit.active_gates );
      parent = std::move( *best_offspring );
      if ( cost_improved )
        last_cost_improvement = evaluations;
    }

    history.push_back( { generation, evaluations, parent.fit.functionality, parent.fit.active_gates, parent.output_entropy, parent.logical_work } );
  }

  SearchResult result{ std::move( parent.netlist ), parent.fit, std::move( parent.genotype ), std::move( history ), evaluations, evaluations_to_functional };
  return result;
}

} // namespace infosyn
