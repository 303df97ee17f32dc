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

#include <infosyn/gate_library.hpp>
#include <infosyn/truth_table.hpp>

#include "oracles.hpp"

using namespace infosyn;

namespace
{

GateKind random_gate( Rng& rng )
{
  uint32_t const arity = 1 + static_cast<uint32_t>( rng.below( max_gate_arity ) );
  std::string bits( 1u << arity, '0' );
  for ( auto& c : bits )
    c = rng.below( 2 ) ? '1' : '0';
  return GateKind::from_truth_vector( "G", bits );
}

} // namespace

TEST_SUITE( "gatelib" )
{

TEST_CASE( "standard cells carry the fixed truth vectors" )
{
  CHECK( not_gate().truth_vector() == "10" );
  CHECK( and_gate().truth_vector() == "0001" );
  CHECK( or_gate().truth_vector() == "0111" );
  CHECK( exor_gate().truth_vector() == "0110" );
  CHECK( not_gate().arity == 1 );
  CHECK( and_gate().arity == 2 );
}

TEST_CASE( "standard cell measures" )
{
  // reference figures at two decimals: H(X), H(f), I_gate
  CHECK( input_entropy( not_gate().arity ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );
  CHECK( input_entropy( and_gate().arity ) == doctest::Approx( 2.0 ).epsilon( 1e-12 ) );

  CHECK( gate_output_entropy( not_gate() ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );
  CHECK( gate_output_entropy( and_gate() ) == doctest::Approx( 0.81127812445913283 ).epsilon( 1e-12 ) );
  CHECK( gate_output_entropy( or_gate() ) == doctest::Approx( 0.81127812445913283 ).epsilon( 1e-12 ) );
  CHECK( gate_output_entropy( exor_gate() ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );

  CHECK( gate_info_measure( not_gate() ) == doctest::Approx( 0.0 ).epsilon( 1e-12 ) );
  CHECK( gate_info_measure( and_gate() ) == doctest::Approx( 1.1887218755408671 ).epsilon( 1e-12 ) );
  CHECK( gate_info_measure( or_gate() ) == doctest::Approx( 1.1887218755408671 ).epsilon( 1e-12 ) );
  CHECK( gate_info_measure( exor_gate() ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );

  // two-decimal reference values hold within 0.01
  CHECK( std::abs( gate_output_entropy( and_gate() ) - 0.81 ) < 0.01 );
  CHECK( std::abs( gate_info_measure( and_gate() ) - 1.19 ) < 0.01 );
}

TEST_CASE( "transmission per input" )
{
  CHECK( gate_transmission( and_gate(), 0 ) == doctest::Approx( 0.5 ).epsilon( 1e-12 ) );
  CHECK( gate_transmission( and_gate(), 1 ) == doctest::Approx( 0.5 ).epsilon( 1e-12 ) );
  CHECK( gate_transmission( or_gate(), 0 ) == doctest::Approx( 0.5 ).epsilon( 1e-12 ) );
  CHECK( gate_transmission( exor_gate(), 0 ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );
  CHECK( gate_transmission( exor_gate(), 1 ) == doctest::Approx( 1.0 ).epsilon( 1e-12 ) );

  // an inverter's output is fully determined by its sole input; gate
  // tables customarily list 1.0 here, the conditional entropy is 0
  CHECK( gate_transmission( not_gate(), 0 ) == 0.0 );

  CHECK_THROWS_AS( gate_transmission( not_gate(), 1 ), std::out_of_range );
}

TEST_CASE( "gate measures agree with the truth-table machinery" )
{
  Rng rng( 11 );
  for ( int i = 0; i < 200; ++i )
  {
    GateKind const g = random_gate( rng );
    TruthTable const tt = TruthTable::from_truth_vectors( { g.truth_vector() } );
    CHECK( gate_output_entropy( g ) == doctest::Approx( entropy( tt, 0 ) ).epsilon( 1e-12 ) );
    for ( uint32_t input = 0; input < g.arity; ++input )
      CHECK( gate_transmission( g, input ) ==
             doctest::Approx( conditional_entropy( tt, 0, input ) ).epsilon( 1e-12 ) );
  }
}

TEST_CASE( "information measure is nonnegative, transmission bounded" )
{
  Rng rng( 13 );
  for ( int i = 0; i < 500; ++i )
  {
    GateKind const g = random_gate( rng );
    CHECK( gate_info_measure( g ) >= 0.0 );
    for ( uint32_t input = 0; input < g.arity; ++input )
      CHECK( gate_transmission( g, input ) <= gate_output_entropy( g ) + 1e-12 );
  }
}

TEST_CASE( "user-defined gates up to arity 4" )
{
  GateKind const nand = GateKind::from_truth_vector( "NAND", "1110" );
  CHECK( gate_info_measure( nand ) == doctest::Approx( 1.1887218755408671 ).epsilon( 1e-12 ) );

  GateKind const maj3 = GateKind::from_truth_vector( "MAJ3", "00010111" );
  CHECK( maj3.arity == 3 );
  CHECK( gate_info_measure( maj3 ) == doctest::Approx( 2.0 ).epsilon( 1e-12 ) );

  CHECK_THROWS_AS( GateKind::from_truth_vector( "BAD", "101" ), std::invalid_argument );
  CHECK_THROWS_AS( GateKind::from_truth_vector( "BAD", "01100110011001100110011001100110" ), std::invalid_argument );
  CHECK_THROWS_AS( GateKind::from_truth_vector( "BAD", "01x0" ), std::invalid_argument );
}

TEST_CASE( "library lookup and validation" )
{
  GateLibrary const lib = standard_library();
  CHECK( lib.size() == 4 );
  CHECK( lib.max_arity() == 2 );
  CHECK( lib.find( "EXOR" ).value() == 3 );
  CHECK( !lib.find( "NAND" ).has_value() );
  CHECK_NOTHROW( validate_library( lib ) );

  CHECK_THROWS_AS( validate_library( GateLibrary{} ), std::invalid_argument );
  GateLibrary dup{ { not_gate(), not_gate() }, true };
  CHECK_THROWS_AS( validate_library( dup ), std::invalid_argument );
}

} // TEST_SUITE gatelib
