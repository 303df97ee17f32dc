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

#include <filesystem>
#include <sstream>

#include <infosyn/cli.hpp>
#include <infosyn/io.hpp>

using namespace infosyn;

#ifndef INFOSYN_TEST_DATA_DIR
#define INFOSYN_TEST_DATA_DIR "tests/data"
#endif

namespace
{

struct CliRun
{
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  int const code = run_cli( std::move( args ), out, err );
  return { code, out.str(), err.str() };
}

std::string data_path( std::string const& name )
{
  return ( std::filesystem::path( INFOSYN_TEST_DATA_DIR ) / name ).string();
}

struct TempDir
{
  std::filesystem::path path;
  explicit TempDir( std::string const& name ) : path( std::filesystem::temp_directory_path() / name )
  {
    std::filesystem::remove_all( path );
    std::filesystem::create_directories( path );
  }
  ~TempDir() { std::filesystem::remove_all( path ); }
};

} // namespace

TEST_SUITE( "cli" )
{

TEST_CASE( "measure prints the entropy breakdown" )
{
  CliRun const r = run( { "measure", data_path( "example1.pla" ) } );
  CHECK( r.exit_code == 0 );
  CHECK( r.out.find( "H(f) = 0.954" ) != std::string::npos );
  CHECK( r.out.find( "H(f|x1) = 0.406" ) != std::string::npos );
  CHECK( r.out.find( "H(f|x2) = 0.906" ) != std::string::npos );
  CHECK( r.out.find( "H(f|x3) = 0.906" ) != std::string::npos );
  CHECK( r.out.find( "I_NW = 2.046" ) != std::string::npos );
}

TEST_CASE( "capacity prints attenuated and flat reports" )
{
  CliRun const r = run( { "capacity", "--geometry", "3x3", "--library", "NOT,AND,OR" } );
  CHECK( r.exit_code == 0 );
  CHECK( r.out.find( "6.2475" ) != std::string::npos );
  CHECK( r.out.find( "attenuated" ) != std::string::npos );
  CHECK( r.out.find( "flat" ) != std::string::npos );
  CHECK( r.out.find( "10.7100" ) != std::string::npos );

  TempDir const tmp( "infosyn_cli_capacity" );
  auto const csv = ( tmp.path / "capacity.csv" ).string();
  CliRun const with_csv = run( { "capacity", "--geometry", "2x2", "--library", "NOT,EXOR", "--csv", csv } );
  CHECK( with_csv.exit_code == 0 );
  CHECK( read_file( csv ).find( "1,1.000000,2,2.000000" ) != std::string::npos );
}

TEST_CASE( "advise ranks the candidates file" )
{
  CliRun const r = run( { "advise", "--target-shape", "4,2", "--candidates", data_path( "candidates.txt" ) } );
  CHECK( r.exit_code == 0 );
  auto const first = r.out.find( "2x2" );
  auto const second = r.out.find( "3x3" );
  REQUIRE( first != std::string::npos );
  REQUIRE( second != std::string::npos );
  CHECK( first < second ); // the 2x2 candidate outranks the 3x3 one
  CHECK( r.out.find( "3.5700" ) != std::string::npos );
  CHECK( r.out.find( "3.5000" ) != std::string::npos );
}

TEST_CASE( "synth writes deterministic artifacts" )
{
  TempDir const tmp( "infosyn_cli_synth" );
  auto const netlist = ( tmp.path / "netlist.json" ).string();
  auto const history = ( tmp.path / "history.csv" ).string();
  auto const config_path = ( tmp.path / "run.conf" ).string();
  std::string const config =
      "target = " + data_path( "half_adder.pla" ) + "\n" +
      "levels = 2\n"
      "gates_per_level = 2\n"
      "library = NOT,AND,OR,EXOR\n"
      "seed = 7\n"
      "max_evaluations = 50000\n"
      "stagnation_window = 2000\n"
      "netlist_out = " + netlist + "\n" +
      "history_out = " + history + "\n";
  write_file_atomic( config_path, config );

  CliRun const first = run( { "synth", "--config", config_path } );
  CHECK( first.exit_code == 0 );
  CHECK( first.out.find( "functionality 1.000000" ) != std::string::npos );
  CHECK( first.out.find( "verified exact" ) != std::string::npos );
  std::string const netlist_once = read_file( netlist );
  std::string const history_once = read_file( history );

  CliRun const second = run( { "synth", "--config", config_path } );
  CHECK( second.exit_code == 0 );
  CHECK( read_file( netlist ) == netlist_once );
  CHECK( read_file( history ) == history_once );
  CHECK( history_once.rfind( "generation,evaluations", 0 ) == 0 );

  // the emitted netlist re-simulates to the half adder through the CLI
  CliRun const sim = run( { "simulate", "--netlist", netlist } );
  CHECK( sim.exit_code == 0 );
  CHECK( sim.out.find( "out0=0110" ) != std::string::npos );
  CHECK( sim.out.find( "out1=0001" ) != std::string::npos );

  // a different seed changes the search trajectory
  CliRun const reseeded = run( { "synth", "--config", config_path, "--seed", "8" } );
  CHECK( reseeded.exit_code == 0 );
  CHECK( read_file( history ) != history_once );
}

TEST_CASE( "synth requires a seed" )
{
  TempDir const tmp( "infosyn_cli_seedless" );
  auto const config_path = ( tmp.path / "run.conf" ).string();
  write_file_atomic( config_path, "target = " + data_path( "half_adder.pla" ) + "\nlevels = 2\ngates_per_level = 2\n" );
  CliRun const r = run( { "synth", "--config", config_path } );
  CHECK( r.exit_code == 2 );
  CHECK( r.err.find( "seed" ) != std::string::npos );
}

TEST_CASE( "exit codes distinguish usage and data errors" )
{
  CHECK( run( {} ).exit_code == 1 );
  CHECK( run( { "frobnicate" } ).exit_code == 1 );
  CHECK( run( { "capacity" } ).exit_code == 1 );                                        // missing required option
  CHECK( run( { "measure", "/nonexistent/file.pla" } ).exit_code == 2 );                // unreadable file
  CHECK( run( { "capacity", "--geometry", "0x3", "--library", "NOT" } ).exit_code == 2 );
  CHECK( run( { "--help" } ).exit_code == 0 );

  TempDir const tmp( "infosyn_cli_badpla" );
  auto const bad = ( tmp.path / "bad.pla" ).string();
  write_file_atomic( bad, ".i 2\n.o 1\n0- 1\n" );
  CliRun const r = run( { "measure", bad } );
  CHECK( r.exit_code == 2 );
  CHECK( r.err.find( "incomplete specification unsupported" ) != std::string::npos );
}

TEST_CASE( "failed synth leaves no partial outputs" )
{
  TempDir const tmp( "infosyn_cli_partial" );
  auto const netlist = ( tmp.path / "netlist.json" ).string();
  auto const config_path = ( tmp.path / "run.conf" ).string();
  // geometry cannot drive the two target outputs with a single cell
  write_file_atomic( config_path,
                     "target = " + data_path( "half_adder.pla" ) + "\nlevels = 1\ngates_per_level = 1\nseed = 1\n" +
                         "netlist_out = " + netlist + "\n" );
  CliRun const r = run( { "synth", "--config", config_path } );
  CHECK( r.exit_code == 2 );
  CHECK( !std::filesystem::exists( netlist ) );
}

} // TEST_SUITE cli
