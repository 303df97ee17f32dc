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

#include <infosyn/cli.hpp>

#include <algorithm>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <infosyn/io.hpp>
#include <infosyn/metrics.hpp>
#include <infosyn/search.hpp>

namespace infosyn
{

namespace
{

std::string fmt( double value, int digits )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.*f", digits, value );
  return buf;
}

std::string library_names( GateLibrary const& lib )
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

std::vector<GateKind> load_extra_gates( std::string const& library_file )
{
  if ( library_file.empty() )
    return {};
  return parse_gate_definitions( read_file( library_file ) );
}

std::pair<uint32_t, uint32_t> parse_shape( std::string const& spec )
{
  auto const comma = spec.find( ',' );
  if ( comma == std::string::npos )
    throw std::runtime_error( "target shape must be '<inputs>,<outputs>', e.g. 4,2" );
  uint64_t nI = 0, nO = 0;
  try
  {
    nI = std::stoull( spec.substr( 0, comma ) );
    nO = std::stoull( spec.substr( comma + 1 ) );
  }
  catch ( std::exception const& )
  {
    throw std::runtime_error( "target shape must be '<inputs>,<outputs>', e.g. 4,2" );
  }
  if ( nI < 1 || nO < 1 )
    throw std::runtime_error( "target shape counts must be positive" );
  return { static_cast<uint32_t>( nI ), static_cast<uint32_t>( nO ) };
}

void cmd_measure( std::string const& path, std::ostream& out )
{
  TruthTable const tt = parse_function( read_file( path ) );
  out << "function: " << tt.n_inputs() << " inputs, " << tt.n_outputs() << ( tt.n_outputs() == 1 ? " output\n" : " outputs\n" );
  out << "input entropy H(X) = " << fmt( input_entropy( tt.n_inputs() ), 3 ) << " bits\n";
  for ( uint32_t j = 0; j < tt.n_outputs(); ++j )
  {
    out << "output " << j << ": H(f) = " << fmt( entropy( tt, j ), 3 ) << " bits"
        << ", p(f=1) = " << fmt( output_probability( tt, j, true ), 3 ) << "\n";
    for ( uint32_t v = 0; v < tt.n_inputs(); ++v )
      out << "  H(f|x" << ( v + 1 ) << ") = " << fmt( conditional_entropy( tt, j, v ), 3 ) << " bits\n";
  }
  out << "joint output entropy = " << fmt( joint_output_entropy( tt ), 3 ) << " bits\n";
  out << "network information I_NW = " << fmt( network_information( tt ), 3 ) << " bits\n";
}

void print_capacity_report( CapacityReport const& report, std::ostream& out )
{
  out << "mode: " << ( report.mode == CapacityMode::attenuated ? "attenuated" : "flat" ) << "\n";
  for ( std::size_t level = 0; level < report.per_level_cell_bits.size(); ++level )
  {
    double const per_cell = report.per_level_cell_bits[level];
    out << "  level " << ( level + 1 ) << ": per-cell " << fmt( per_cell, 4 )
        << " bits, cells " << report.geometry.gates_per_level
        << ", subtotal " << fmt( per_cell * report.geometry.gates_per_level, 4 ) << " bits\n";
  }
  out << "  total " << fmt( report.total_bits, 4 ) << " bits\n";
}

void cmd_capacity( std::string const& geometry_spec, std::string const& names, std::string const& library_file,
                   uint32_t levels_back, std::string const& csv_path, std::ostream& out )
{
  auto const [levels, gates_per_level] = parse_geometry_spec( geometry_spec );
  uint32_t const lb = levels_back == 0 ? levels : levels_back;
  auto const extra = load_extra_gates( library_file );
  GateLibrary const lib = make_library( names, extra );
  Geometry const geom = Geometry::of( levels, gates_per_level, lb, 1, 1 );

  out << "geometry: " << levels << "x" << gates_per_level << " (levels x gates-per-level), levels_back " << lb << "\n";
  out << "library: " << library_names( lib ) << "\n";
  out << "library capacity = " << fmt( library_capacity( lib ), 4 ) << " bits\n";
  out << "cell capacity = " << fmt( cell_capacity( lib ), 4 ) << " bits (tabulated " << fmt( tabulated_cell_capacity( lib ), 2 ) << ")\n";

  CapacityReport const attenuated = geometry_capacity( geom, lib, CapacityMode::attenuated );
  CapacityReport const flat = geometry_capacity( geom, lib, CapacityMode::flat );
  print_capacity_report( attenuated, out );
  print_capacity_report( flat, out );

  if ( !csv_path.empty() )
  {
    write_file_atomic( csv_path, capacity_csv( attenuated ) );
    out << "per-level csv written to " << csv_path << "\n";
  }
}

std::vector<GeometryCandidate> parse_candidates( std::string_view text, TargetShape const& shape, std::span<GateKind const> extra )
{
  std::vector<GeometryCandidate> candidates;
  std::size_t line_no = 0;
  std::istringstream in{ std::string( text ) };
  std::string raw;
  while ( std::getline( in, raw ) )
  {
    ++line_no;
    if ( auto const hash = raw.find( '#' ); hash != std::string::npos )
      raw.resize( hash );
    std::istringstream fields( raw );
    std::string geom_spec, names, extra_field;
    if ( !( fields >> geom_spec ) )
      continue;
    if ( !( fields >> names ) )
      throw std::runtime_error( "candidates line " + std::to_string( line_no ) + ": expected '<PxQ> <gate,names> [lb=K]'" );

    auto const [levels, gates_per_level] = parse_geometry_spec( geom_spec );
    uint32_t lb = levels;
    if ( fields >> extra_field )
    {
      if ( extra_field.rfind( "lb=", 0 ) != 0 )
        throw std::runtime_error( "candidates line " + std::to_string( line_no ) + ": unknown field '" + extra_field + "'" );
      try
      {
        lb = static_cast<uint32_t>( std::stoul( extra_field.substr( 3 ) ) );
      }
      catch ( std::exception const& )
      {
        throw std::runtime_error( "candidates line " + std::to_string( line_no ) + ": malformed '" + extra_field + "'" );
      }
      std::string trailing;
      if ( fields >> trailing )
        throw std::runtime_error( "candidates line " + std::to_string( line_no ) + ": unexpected field '" + trailing + "'" );
    }
    GeometryCandidate cand;
    cand.geometry = Geometry{ levels, gates_per_level, lb, shape.n_inputs, shape.n_outputs };
    cand.library = make_library( names, extra );
    candidates.push_back( std::move( cand ) );
  }
  return candidates;
}

void cmd_advise( std::string const& shape_spec, std::string const& candidates_path, std::string const& library_file,
                 std::string const& csv_path, std::ostream& out )
{
  auto const [n_inputs, n_outputs] = parse_shape( shape_spec );
  TargetShape const shape{ n_inputs, n_outputs };
  auto const extra = load_extra_gates( library_file );
  auto const candidates = parse_candidates( read_file( candidates_path ), shape, extra );
  if ( candidates.empty() )
    throw std::runtime_error( "candidates file lists no geometries" );
  auto const ranked = advise( shape, candidates );

  out << "target shape: " << n_inputs << " inputs, " << n_outputs << " outputs\n";
  out << std::left << std::setw( 5 ) << "rank" << std::setw( 10 ) << "geometry" << std::setw( 4 ) << "lb"
      << std::setw( 22 ) << "library" << std::setw( 10 ) << "feasible"
      << std::right << std::setw( 12 ) << "attenuated" << std::setw( 11 ) << "effective" << std::setw( 12 ) << "used/level" << "\n";
  for ( auto const& entry : ranked )
  {
    std::string const geom_str = std::to_string( entry.geometry.levels ) + "x" + std::to_string( entry.geometry.gates_per_level );
    out << std::left << std::setw( 5 ) << entry.rank << std::setw( 10 ) << geom_str
        << std::setw( 4 ) << entry.geometry.levels_back << std::setw( 22 ) << library_names( entry.library )
        << std::setw( 10 ) << ( entry.feasible ? "yes" : "no" )
        << std::right << std::setw( 12 ) << fmt( entry.report.total_bits, 4 )
        << std::setw( 11 ) << fmt( entry.effective_bits, 4 )
        << std::setw( 12 ) << entry.utilized_per_level << "\n";
  }

  if ( !csv_path.empty() )
  {
    write_file_atomic( csv_path, advise_csv( ranked ) );
    out << "csv written to " << csv_path << "\n";
  }
}

void cmd_synth( std::string const& config_path, std::optional<uint64_t> seed_override, std::ostream& out )
{
  RunConfig config = parse_run_config( read_file( config_path ) );
  if ( seed_override )
    config.seed = seed_override;
  if ( !config.seed )
    throw std::runtime_error( "synth requires a seed: set 'seed = <n>' in the config or pass --seed" );

  TruthTable const target = parse_function( read_file( config.target_path ) );
  auto const extra = load_extra_gates( config.library_file );
  GateLibrary const lib = make_library( config.library_names, extra, config.polarity );
  uint32_t const lb = config.levels_back == 0 ? config.levels : config.levels_back;
  Geometry const geom = Geometry::of( config.levels, config.gates_per_level, lb, target.n_inputs(), target.n_outputs() );

  out << "target: " << config.target_path << " (" << target.n_inputs() << " inputs, " << target.n_outputs() << " outputs)\n";
  out << "geometry: " << geom.levels << "x" << geom.gates_per_level << ", levels_back " << lb << "\n";
  out << "library: " << library_names( lib ) << ( lib.allow_inverted_inputs ? " (inverted inputs on)" : " (inverted inputs off)" ) << "\n";
  CapacityReport const capacity = geometry_capacity( geom, lib, config.capacity_mode );
  out << "a-priori capacity = " << fmt( capacity.total_bits, 4 ) << " bits ("
      << ( config.capacity_mode == CapacityMode::attenuated ? "attenuated" : "flat" ) << ")\n";
  out << "seed: " << *config.seed << "\n";

  SearchResult const result = evolve( target, geom, lib, search_params_from( config ) );

  if ( result.best_fitness.functionality == 1.0 )
  {
    // independent verification pass: the reported circuit must reproduce
    // the target bit-exactly
    if ( !( simulate( result.best ) == target ) )
      throw std::logic_error( "internal error: functional circuit failed re-simulation" );
  }

  NetworkMetrics const metrics = compute_metrics( result.best, result.history, target );
  write_file_atomic( config.netlist_out, emit_netlist_json( result.best ) );
  write_file_atomic( config.history_out, history_csv( result.history, target ) );

  out << "result: functionality " << fmt( result.best_fitness.functionality, 6 )
      << ", active gates " << result.best_fitness.active_gates
      << ", evaluations " << result.evaluations << "\n";
  if ( result.evaluations_to_functional )
    out << "first functional circuit at evaluation " << *result.evaluations_to_functional << " (verified exact)\n";
  else
    out << "no fully functional circuit found within the budget\n";
  out << "netlist written to " << config.netlist_out << "\n";
  out << "history written to " << config.history_out << "\n";
  out << "network information I_NW = " << fmt( metrics.network_information_bits, 4 ) << " bits\n";
  out << "logical work (best) = " << fmt( metrics.logical_work_bits, 4 ) << " bits\n";
  if ( metrics.information_potential_bits )
    out << "information potential Q = " << fmt( *metrics.information_potential_bits, 4 ) << " bits\n";
  else
    out << "information potential Q = n/a (no functional circuit)\n";
  if ( metrics.vitality )
    out << "information vitality T = " << fmt( *metrics.vitality, 4 ) << "\n";
  else
    out << "information vitality T = n/a\n";
}

void cmd_simulate( std::string const& netlist_path, std::string const& names, std::string const& library_file, std::ostream& out )
{
  auto const extra = load_extra_gates( library_file );
  GateLibrary const lib = make_library( names, extra );
  Netlist const nl = parse_netlist_json( read_file( netlist_path ), lib );
  out << emit_truth_vectors( simulate( nl ) );
}

} // namespace

int run_cli( std::vector<std::string> args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "information measures and geometry selection for gate-level evolutionary circuit synthesis", "infosyn" };
  app.require_subcommand( 1 );

  std::string measure_path;
  auto* measure = app.add_subcommand( "measure", "entropy measures of a function file (PLA or truth-vector format). "
                                                 "PLA input must be completely specified: every row listed once, no don't-cares" );
  measure->add_option( "fn-file", measure_path, "function file" )->required();

  std::string capacity_geometry, capacity_library, capacity_library_file, capacity_csv_path;
  uint32_t capacity_levels_back = 0;
  auto* capacity = app.add_subcommand( "capacity", "information capacity of a geometry over a gate library" );
  capacity->add_option( "--geometry", capacity_geometry, "PxQ, levels x gates-per-level" )->required();
  capacity->add_option( "--library", capacity_library, "comma-separated gate names (default: all known gates)" );
  capacity->add_option( "--library-file", capacity_library_file, "gate-definition file with extra gates" );
  capacity->add_option( "--levels-back", capacity_levels_back, "levels-back parameter (default: levels)" );
  capacity->add_option( "--csv", capacity_csv_path, "write the per-level breakdown as CSV" );

  std::string advise_shape, advise_candidates, advise_library_file, advise_csv_path;
  auto* advise_cmd = app.add_subcommand( "advise", "rank candidate geometries for a target shape" );
  advise_cmd->add_option( "--target-shape", advise_shape, "nI,nO of the target function" )->required();
  advise_cmd->add_option( "--candidates", advise_candidates, "file with '<PxQ> <gate,names> [lb=K]' lines" )->required();
  advise_cmd->add_option( "--library-file", advise_library_file, "gate-definition file with extra gates" );
  advise_cmd->add_option( "--csv", advise_csv_path, "write the ranking as CSV" );

  std::string synth_config;
  uint64_t synth_seed = 0;
  bool synth_seed_set = false;
  auto* synth = app.add_subcommand( "synth", "evolve a circuit for a target function" );
  synth->add_option( "--config", synth_config, "run configuration file (key = value lines)" )->required();
  auto* seed_opt = synth->add_option( "--seed", synth_seed, "override the config seed" );

  std::string simulate_path, simulate_library, simulate_library_file;
  auto* simulate_cmd = app.add_subcommand( "simulate", "evaluate a netlist JSON file into a truth table" );
  simulate_cmd->add_option( "--netlist", simulate_path, "netlist JSON file" )->required();
  simulate_cmd->add_option( "--library", simulate_library, "comma-separated gate names (default: all known gates)" );
  simulate_cmd->add_option( "--library-file", simulate_library_file, "gate-definition file with extra gates" );

  try
  {
    std::reverse( args.begin(), args.end() );
    app.parse( args );
  }
  catch ( CLI::CallForHelp const& e )
  {
    return app.exit( e, out, err );
  }
  catch ( CLI::CallForAllHelp const& e )
  {
    return app.exit( e, out, err );
  }
  catch ( CLI::ParseError const& e )
  {
    app.exit( e, out, err );
    return 1;
  }
  synth_seed_set = seed_opt->count() > 0;

  try
  {
    if ( app.got_subcommand( measure ) )
      cmd_measure( measure_path, out );
    else if ( app.got_subcommand( capacity ) )
      cmd_capacity( capacity_geometry, capacity_library, capacity_library_file, capacity_levels_back, capacity_csv_path, out );
    else if ( app.got_subcommand( advise_cmd ) )
      cmd_advise( advise_shape, advise_candidates, advise_library_file, advise_csv_path, out );
    else if ( app.got_subcommand( synth ) )
      cmd_synth( synth_config, synth_seed_set ? std::optional<uint64_t>( synth_seed ) : std::nullopt, out );
    else if ( app.got_subcommand( simulate_cmd ) )
      cmd_simulate( simulate_path, simulate_library, simulate_library_file, out );
  }
  catch ( std::exception const& e )
  {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

} // namespace infosyn
