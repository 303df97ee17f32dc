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

#include <doctest.h>

#include <stdexcept>

#include <infosyn/metrics.hpp>

#include "oracles.hpp"

using namespace infosyn;

namespace
{

Netlist half_adder_netlist()
{
  Netlist nl;
  nl.n_inputs = 2;
  nl.gates.push_back( NetGate{ exor_gate(), { Source{ 0, false }, Source{ 1, false } } } );
  nl.gates.push_back( NetGate{ and_gate(), { Source{ 0, false }, Source{ 1, false } } } );
  nl.outputs = { 2, 3 };
  return nl;
}

} // namespace

TEST_SUITE( "metrics" )
{

TEST_CASE( "network information" )
{
  TruthTable const example = TruthTable::from_truth_vectors( { "10001111" } );
  CHECK( network_information( example ) == doctest::Approx( 2.0455659970750348 ).epsilon( 1e-12 ) );

  // a wire loses nothing
  TruthTable const wire = TruthTable::from_truth_vectors( { "01" } );
  CHECK( network_information( wire ) == doctest::Approx( 0.0 ).epsilon( 1e-12 ) );

  // a constant output destroys all three input bits
  CHECK( network_information( TruthTable( 3, 1 ) ) == doctest::Approx( 3.0 ).epsilon( 1e-12 ) );

  Rng rng( 41 );
  for ( int i = 0; i < 50; ++i )
  {
    TruthTable const tt = test::random_table( rng, 1 + static_cast<uint32_t>( rng.below( 6 ) ), 1 + static_cast<uint32_t>( rng.below( 3 ) ) );
    CHECK( network_information( tt ) >= -1e-12 );
  }
}

TEST_CASE( "logical work of concrete circuits" )
{
  CHECK( logical_work( half_adder_netlist() ) == doctest::Approx( 2.1887218755408671 ).epsilon( 1e-12 ) );

  Netlist empty;
  empty.n_inputs = 2;
  empty.outputs = { 0 };
  CHECK( logical_work( empty ) == 0.0 );

  // reordering gates (same multiset) does not change the work
  Netlist reordered;
  reordered.n_inputs = 2;
  reordered.gates.push_back( NetGate{ and_gate(), { Source{ 0, false }, Source{ 1, false } } } );
  reordered.gates.push_back( NetGate{ exor_gate(), { Source{ 0, false }, Source{ 1, false } } } );
  reordered.outputs = { 3, 2 };
  CHECK( logical_work( reordered ) == doctest::Approx( logical_work( half_adder_netlist() ) ).epsilon( 1e-12 ) );
}

TEST_CASE( "information potential over a run history" )
{
  std::vector<HistoryEntry> history;
  history.push_back( { 0, 1, 0.75, 3, 1.2, 3.0 } );
  CHECK( !information_potential( history ).has_value() );

  history.push_back( { 1, 5, 1.0, 3, 1.5, 2.1887218755408671 } );
  auto const q = information_potential( history );
  REQUIRE( q.has_value() );
  CHECK( *q == doctest::Approx( 2.1887218755408671 ).epsilon( 1e-12 ) );

  // the running minimum never increases as the history grows
  history.push_back( { 2, 9, 1.0, 4, 1.5, 3.5 } );
  history.push_back( { 3, 13, 1.0, 2, 1.5, 1.9 } );
  std::optional<double> previous;
  for ( std::size_t prefix = 1; prefix <= history.size(); ++prefix )
  {
    auto const running = information_potential( std::span( history.data(), prefix ) );
    if ( previous && running )
      CHECK( *running <= *previous + 1e-12 );
    if ( running )
      previous = running;
  }
  CHECK( *information_potential( history ) == doctest::Approx( 1.9 ).epsilon( 1e-12 ) );
}

TEST_CASE( "vitality" )
{
  TruthTable const half_adder = TruthTable::from_truth_vectors( { "0110", "0001" } );
  CHECK( vitality( 2.1887218755408671, half_adder ) == doctest::Approx( 1.4591479170272448 ).epsilon( 1e-12 ) );
  CHECK( vitality( 0.0, half_adder ) == 0.0 );
  CHECK_THROWS_AS( vitality( 1.0, TruthTable( 2, 1 ) ), std::domain_error );
}

TEST_CASE( "full metrics of a finished run" )
{
  TruthTable const target = TruthTable::from_truth_vectors( { "0110", "0001" } );
  Netlist const best = half_adder_netlist();
  std::vector<HistoryEntry> history{
      { 0, 1, 0.5, 4, 1.0, 3.0 },
      { 1, 5, 1.0, 2, 1.5, 2.1887218755408671 } };
  NetworkMetrics const m = compute_metrics( best, history, target );
  CHECK( m.network_information_bits == doctest::Approx( 0.5 ).epsilon( 1e-12 ) );
  CHECK( m.logical_work_bits == doctest::Approx( 2.1887218755408671 ).epsilon( 1e-12 ) );
  REQUIRE( m.information_potential_bits.has_value() );
  REQUIRE( m.vitality.has_value() );
  CHECK( *m.vitality == doctest::Approx( 1.4591479170272448 ).epsilon( 1e-12 ) );

  std::vector<HistoryEntry> unfinished{ { 0, 1, 0.5, 4, 1.0, 3.0 } };
  NetworkMetrics const partial = compute_metrics( best, unfinished, target );
  CHECK( !partial.information_potential_bits.has_value() );
  CHECK( !partial.vitality.has_value() );
}

TEST_CASE( "entropy-vitality trace" )
{
  TruthTable const target = TruthTable::from_truth_vectors( { "0110", "0001" } );

  std::vector<HistoryEntry> history{
      { 0, 1, 0.5, 4, 1.0, 3.0 },
      { 1, 5, 0.75, 4, 1.2, 3.0 },
      { 2, 9, 1.0, 2, 1.5, 2.1887218755408671 },
      { 3, 13, 1.0, 2, 1.5, 2.1887218755408671 } };
  auto const trace = ht_trace( history, target );
  REQUIRE( trace.size() == history.size() );
  CHECK( !trace[0].t_running.has_value() );
  CHECK( !trace[1].t_running.has_value() );
  REQUIRE( trace[2].t_running.has_value() );
  CHECK( *trace[2].t_running == doctest::Approx( 1.4591479170272448 ).epsilon( 1e-12 ) );
  // once functional, the entropy column sits at the target's entropy
  CHECK( trace[2].h_best == doctest::Approx( 1.5 ).epsilon( 1e-12 ) );
  CHECK( trace[3].h_best == doctest::Approx( 1.5 ).epsilon( 1e-12 ) );

  // constant history, constant trace
  std::vector<HistoryEntry> flat( 5, HistoryEntry{ 0, 1, 0.5, 4, 1.0, 3.0 } );
  auto const flat_trace = ht_trace( flat, target );
  for ( auto const& point : flat_trace )
  {
    CHECK( point.h_best == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );
    CHECK( !point.t_running.has_value() );
  }

  CHECK_THROWS_AS( ht_trace( std::span<HistoryEntry const>{}, target ), std::invalid_argument );
}

TEST_CASE( "trace of a live run is internally consistent" )
{
  TruthTable const target = TruthTable::from_truth_vectors( { "0110", "0001" } );
  Geometry const geom = Geometry::of( 2, 2, 2, 2, 2 );
  SearchParams params;
  params.seed = 5;
  params.max_evaluations = 50000;
  SearchResult const result = evolve( target, geom, standard_library(), params );
  auto const trace = ht_trace( result.history, target );
  REQUIRE( trace.size() == result.history.size() );

  std::optional<double> last_t;
  for ( auto const& point : trace )
  {
    if ( point.t_running )
    {
      if ( last_t )
        CHECK( *point.t_running <= *last_t + 1e-12 );
      last_t = point.t_running;
    }
  }
  if ( result.best_fitness.functionality == 1.0 )
    CHECK( trace.back().h_best == doctest::Approx( joint_output_entropy( target ) ).epsilon( 1e-12 ) );
}

} // TEST_SUITE metrics
