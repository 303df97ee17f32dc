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

#include <infosyn/io.hpp>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace infosyn
{

namespace
{

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

// splits into lines, strips '#' comments and surrounding whitespace
std::vector<std::pair<std::size_t, std::string>> meaningful_lines( std::string_view text )
{
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    std::size_t end = text.find( '\n', start );
    if ( end == std::string_view::npos )
      end = text.size();
    ++line_no;
    std::string_view line = text.substr( start, end - start );
    if ( auto const hash = line.find( '#' ); hash != std::string_view::npos )
      line = line.substr( 0, hash );
    line = trim( line );
    if ( !line.empty() )
      lines.emplace_back( line_no, std::string( line ) );
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail( std::size_t line_no, std::string const& message )
{
  throw std::runtime_error( "line " + std::to_string( line_no ) + ": " + message );
}

std::vector<std::string> split_ws( std::string_view s )
{
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while ( i < s.size() )
  {
    while ( i < s.size() && std::isspace( static_cast<unsigned char>( s[i] ) ) )
      ++i;
    std::size_t j = i;
    while ( j < s.size() && !std::isspace( static_cast<unsigned char>( s[j] ) ) )
      ++j;
    if ( j > i )
      tokens.emplace_back( s.substr( i, j - i ) );
    i = j;
  }
  return tokens;
}

std::vector<std::string> split_csv( std::string_view s )
{
  std::vector<std::string> items;
  std::size_t start = 0;
  while ( start <= s.size() )
  {
    std::size_t end = s.find( ',', start );
    if ( end == std::string_view::npos )
      end = s.size();
    auto const item = trim( s.substr( start, end - start ) );
    if ( !item.empty() )
      items.emplace_back( item );
    start = end + 1;
  }
  return items;
}

uint64_t parse_u64( std::string_view s, std::string const& what )
{
  uint64_t value = 0;
  if ( s.empty() )
    throw std::runtime_error( what + " is empty" );
  for ( char const c : s )
  {
    if ( c < '0' || c > '9' )
      throw std::runtime_error( what + " is not a non-negative integer: '" + std::string( s ) + "'" );
    value = value * 10 + static_cast<uint64_t>( c - '0' );
  }
  return value;
}

double parse_double( std::string_view s, std::string const& what )
{
  try
  {
    std::size_t pos = 0;
    double const v = std::stod( std::string( s ), &pos );
    if ( pos != s.size() )
      throw std::invalid_argument( "trailing characters" );
    return v;
  }
  catch ( std::exception const& )
  {
    throw std::runtime_error( what + " is not a number: '" + std::string( s ) + "'" );
  }
}

bool parse_bool( std::string_view s, std::string const& what )
{
  if ( s == "true" || s == "on" || s == "1" || s == "yes" )
    return true;
  if ( s == "false" || s == "off" || s == "0" || s == "no" )
    return false;
  throw std::runtime_error( what + " is not a boolean: '" + std::string( s ) + "'" );
}

} // namespace

TruthTable parse_pla( std::string_view text )
{
  auto const lines = meaningful_lines( text );
  std::optional<uint32_t> n, m;
  std::optional<uint64_t> declared_rows;
  bool ended = false;
  std::vector<std::string> columns;
  std::vector<char> seen;
  uint64_t rows_seen = 0;

  for ( auto const& [line_no, line] : lines )
  {
    if ( ended )
      fail( line_no, "content after .e" );
    if ( line[0] == '.' )
    {
      auto const tokens = split_ws( line );
      if ( tokens[0] == ".i" )
      {
        if ( n || tokens.size() != 2 )
          fail( line_no, "malformed .i directive" );
        uint64_t const v = parse_u64( tokens[1], ".i value" );
        if ( v < 1 || v > TruthTable::max_inputs )
          fail( line_no, ".i must be in [1, " + std::to_string( TruthTable::max_inputs ) + "]" );
        n = static_cast<uint32_t>( v );
      }
      else if ( tokens[0] == ".o" )
      {
        if ( m || tokens.size() != 2 )
          fail( line_no, "malformed .o directive" );
        uint64_t const v = parse_u64( tokens[1], ".o value" );
        if ( v < 1 )
          fail( line_no, ".o must be at least 1" );
        m = static_cast<uint32_t>( v );
      }
      else if ( tokens[0] == ".p" )
      {
        if ( declared_rows || tokens.size() != 2 )
          fail( line_no, "malformed .p directive" );
        declared_rows = parse_u64( tokens[1], ".p value" );
      }
      else if ( tokens[0] == ".e" )
      {
        ended = true;
      }
      else
      {
        fail( line_no, "unsupported directive '" + tokens[0] + "'" );
      }
      continue;
    }

    if ( !n || !m )
      fail( line_no, "row before .i/.o header" );
    if ( columns.empty() )
    {
      columns.assign( *m, std::string( uint64_t( 1 ) << *n, '0' ) );
      seen.assign( uint64_t( 1 ) << *n, 0 );
    }

    auto const tokens = split_ws( line );
    if ( tokens.size() != 2 )
      fail( line_no, "expected '<input bits> <output bits>'" );
    std::string const& in_bits = tokens[0];
    std::string const& out_bits = tokens[1];
    if ( in_bits.size() != *n )
      fail( line_no, "expected " + std::to_string( *n ) + " input bits, got " + std::to_string( in_bits.size() ) );
    if ( out_bits.size() != *m )
      fail( line_no, "expected " + std::to_string( *m ) + " output bits, got " + std::to_string( out_bits.size() ) );

    uint64_t row = 0;
    for ( char const c : in_bits )
    {
      if ( c == '-' || c == '~' )
        fail( line_no, "incomplete specification unsupported (don't-care in input '" + in_bits + "')" );
      if ( c != '0' && c != '1' )
        fail( line_no, std::string( "non-binary input character '" ) + c + "'" );
      row = ( row << 1 ) | uint64_t( c - '0' ); // leftmost bit is x1, the most significant
    }
    if ( seen[row] )
      fail( line_no, "duplicate row '" + in_bits + "'" );
    seen[row] = 1;
    ++rows_seen;

    for ( uint32_t j = 0; j < *m; ++j )
    {
      char const c = out_bits[j];
      if ( c == '-' || c == '~' )
        fail( line_no, "incomplete specification unsupported (don't-care in output '" + out_bits + "')" );
      if ( c != '0' && c != '1' )
        fail( line_no, std::string( "non-binary output character '" ) + c + "'" );
      columns[j][row] = c;
    }
  }

  if ( !n || !m )
    throw std::runtime_error( "missing .i/.o header" );
  uint64_t const total = uint64_t( 1 ) << *n;
  if ( rows_seen != total )
  {
    std::string first_missing;
    for ( uint64_t row = 0; row < total; ++row )
    {
      if ( !seen[row] )
      {
        for ( uint32_t b = 0; b < *n; ++b )
          first_missing += ( ( row >> ( *n - 1 - b ) ) & 1 ) ? '1' : '0';
        break;
      }
    }
    throw std::runtime_error( "incomplete specification: " + std::to_string( total - rows_seen ) + " of " + std::to_string( total ) + " rows missing (first missing: '" + first_missing + "')" );
  }
  if ( declared_rows && *declared_rows != total )
    throw std::runtime_error( ".p declares " + std::to_string( *declared_rows ) + " rows but a complete specification has " + std::to_string( total ) );

  return TruthTable::from_truth_vectors( columns );
}

TruthTable parse_truth_vectors( std::string_view text )
{
  auto const lines = meaningful_lines( text );
  if ( lines.empty() )
    throw std::runtime_error( "empty truth-vector file" );

  auto const& [header_no, header] = lines.front();
  auto const tokens = split_ws( header );
  if ( tokens.size() != 2 || tokens[0].rfind( "n=", 0 ) != 0 || tokens[1].rfind( "m=", 0 ) != 0 )
    fail( header_no, "expected header 'n=<N> m=<M>'" );
  uint64_t const n = parse_u64( std::string_view( tokens[0] ).substr( 2 ), "n" );
  uint64_t const m = parse_u64( std::string_view( tokens[1] ).substr( 2 ), "m" );
  if ( n < 1 || n > TruthTable::max_inputs )
    fail( header_no, "n must be in [1, " + std::to_string( TruthTable::max_inputs ) + "]" );
  if ( m < 1 )
    fail( header_no, "m must be at least 1" );
  if ( lines.size() != 1 + m )
    throw std::runtime_error( "expected " + std::to_string( m ) + " output lines, got " + std::to_string( lines.size() - 1 ) );

  uint64_t const rows = uint64_t( 1 ) << n;
  std::vector<std::string> columns;
  for ( uint64_t j = 0; j < m; ++j )
  {
    auto const& [line_no, line] = lines[1 + j];
    std::string const prefix = "out" + std::to_string( j ) + "=";
    if ( line.rfind( prefix, 0 ) != 0 )
      fail( line_no, "expected '" + prefix + "<bits>'" );
    std::string const bits = line.substr( prefix.size() );
    if ( bits.size() != rows )
      fail( line_no, "expected " + std::to_string( rows ) + " bits, got " + std::to_string( bits.size() ) );
    for ( char const c : bits )
    {
      if ( c != '0' && c != '1' )
        fail( line_no, std::string( "non-binary character '" ) + c + "'" );
    }
    columns.push_back( bits );
  }
  return TruthTable::from_truth_vectors( columns );
}

std::string emit_truth_vectors( TruthTable const& tt )
{
  std::string out = "n=" + std::to_string( tt.n_inputs() ) + " m=" + std::to_string( tt.n_outputs() ) + "\n";
  for ( uint32_t j = 0; j < tt.n_outputs(); ++j )
    out += "out" + std::to_string( j ) + "=" + tt.column_string( j ) + "\n";
  return out;
}

TruthTable parse_function( std::string_view text )
{
  auto const lines = meaningful_lines( text );
  if ( lines.empty() )
    throw std::runtime_error( "empty function file" );
  if ( lines.front().second[0] == '.' )
    return parse_pla( text );
  return parse_truth_vectors( text );
}

std::string emit_netlist_json( Netlist const& nl )
{
  validate_netlist( nl );
  nlohmann::ordered_json j;
  j["inputs"] = nl.n_inputs;
  j["outputs"] = nl.outputs;
  auto gates = nlohmann::ordered_json::array();
  for ( std::size_t k = 0; k < nl.gates.size(); ++k )
  {
    auto const& gate = nl.gates[k];
    nlohmann::ordered_json entry;
    entry["id"] = nl.n_inputs + k;
    entry["kind"] = gate.kind.name;
    auto sources = nlohmann::ordered_json::array();
    for ( auto const& src : gate.sources )
      sources.push_back( { { "from", src.id }, { "invert", src.inverted } } );
    entry["sources"] = std::move( sources );
    gates.push_back( std::move( entry ) );
  }
  j["gates"] = std::move( gates );
  return j.dump( 2 ) + "\n";
}

Netlist parse_netlist_json( std::string_view text, GateLibrary const& lib )
{
  nlohmann::json j;
  try
  {
    j = nlohmann::json::parse( text );
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw std::runtime_error( std::string( "invalid netlist JSON: " ) + e.what() );
  }

  try
  {
    Netlist nl;
    nl.n_inputs = j.at( "inputs" ).get<uint32_t>();
    uint32_t expected_id = nl.n_inputs;
    for ( auto const& entry : j.at( "gates" ) )
    {
      if ( entry.at( "id" ).get<uint32_t>() != expected_id )
        throw std::runtime_error( "gate ids must be consecutive from " + std::to_string( nl.n_inputs ) );
      ++expected_id;
      std::string const kind_name = entry.at( "kind" ).get<std::string>();
      auto const kind_idx = lib.find( kind_name );
      if ( !kind_idx )
        throw std::runtime_error( "unknown gate kind '" + kind_name + "'" );
      NetGate gate;
      gate.kind = lib.at( *kind_idx );
      for ( auto const& src : entry.at( "sources" ) )
        gate.sources.push_back( Source{ src.at( "from" ).get<uint32_t>(), src.at( "invert" ).get<bool>() } );
      nl.gates.push_back( std::move( gate ) );
    }
    nl.outputs = j.at( "outputs" ).get<std::vector<uint32_t>>();
    validate_netlist( nl );
    return nl;
  }
  catch ( nlohmann::json::exception const& e )
  {
    throw std::runtime_error( std::string( "invalid netlist JSON: " ) + e.what() );
  }
  catch ( std::invalid_argument const& e )
  {
    throw std::runtime_error( std::string( "invalid netlist: " ) + e.what() );
  }
}

std::vector<GateKind> parse_gate_definitions( std::string_view text )
{
  std::vector<GateKind> gates;
  for ( auto const& [line_no, line] : meaningful_lines( text ) )
  {
    auto const eq = line.find( '=' );
    if ( eq == std::string::npos )
      fail( line_no, "expected 'NAME = <truth vector>'" );
    std::string const name{ trim( std::string_view( line ).substr( 0, eq ) ) };
    std::string const bits{ trim( std::string_view( line ).substr( eq + 1 ) ) };
    if ( name.empty() )
      fail( line_no, "gate name must not be empty" );
    try
    {
      gates.push_back( GateKind::from_truth_vector( name, bits ) );
    }
    catch ( std::invalid_argument const& e )
    {
      fail( line_no, e.what() );
    }
  }
  return gates;
}

GateLibrary make_library( std::string_view names_csv, std::span<GateKind const> extra, bool allow_inverted_inputs )
{
  GateLibrary known = standard_library();
  for ( auto const& g : extra )
  {
    if ( known.find( g.name ) )
      throw std::runtime_error( "gate '" + g.name + "' redefines a known gate" );
    known.gates.push_back( g );
  }

  GateLibrary lib;
  lib.allow_inverted_inputs = allow_inverted_inputs;
  auto const names = split_csv( names_csv );
  if ( names.empty() )
  {
    lib.gates = known.gates;
  }
  else
  {
    for ( auto const& name : names )
    {
      auto const idx = known.find( name );
      if ( !idx )
        throw std::runtime_error( "unknown gate '" + name + "'" );
      lib.gates.push_back( known.at( *idx ) );
    }
  }
  validate_library( lib );
  return lib;
}

std::pair<uint32_t, uint32_t> parse_geometry_spec( std::string_view spec )
{
  auto const x = spec.find( 'x' );
  if ( x == std::string_view::npos )
    throw std::runtime_error( "geometry must be '<levels>x<gates-per-level>', e.g. 3x3" );
  uint64_t const p = parse_u64( trim( spec.substr( 0, x ) ), "levels" );
  uint64_t const q = parse_u64( trim( spec.substr( x + 1 ) ), "gates per level" );
  if ( p < 1 || q < 1 )
    throw std::runtime_error( "geometry dimensions must be positive" );
  return { static_cast<uint32_t>( p ), static_cast<uint32_t>( q ) };
}

RunConfig parse_run_config( std::string_view text )
{
  RunConfig config;
  std::map<std::string, bool> assigned;
  for ( auto const& [line_no, line] : meaningful_lines( text ) )
  {
    auto const eq = line.find( '=' );
    if ( eq == std::string::npos )
      fail( line_no, "expected 'key = value'" );
    std::string const key{ trim( std::string_view( line ).substr( 0, eq ) ) };
    std::string const value{ trim( std::string_view( line ).substr( eq + 1 ) ) };
    if ( key.empty() || value.empty() )
      fail( line_no, "expected 'key = value'" );
    if ( assigned[key] )
      fail( line_no, "duplicate key '" + key + "'" );
    assigned[key] = true;

    try
    {
      if ( key == "target" )
        config.target_path = value;
      else if ( key == "levels" )
        config.levels = static_cast<uint32_t>( parse_u64( value, key ) );
      else if ( key == "gates_per_level" )
        config.gates_per_level = static_cast<uint32_t>( parse_u64( value, key ) );
      else if ( key == "levels_back" )
        config.levels_back = static_cast<uint32_t>( parse_u64( value, key ) );
      else if ( key == "library" )
        config.library_names = value;
      else if ( key == "library_file" )
        config.library_file = value;
      else if ( key == "seed" )
        config.seed = parse_u64( value, key );
      else if ( key == "lambda" )
        config.lambda = static_cast<uint32_t>( parse_u64( value, key ) );
      else if ( key == "mutation_rate" )
        config.mutation_rate = parse_double( value, key );
      else if ( key == "max_evaluations" )
        config.max_evaluations = parse_u64( value, key );
      else if ( key == "stagnation_window" )
        config.stagnation_window = parse_u64( value, key );
      else if ( key == "polarity" )
        config.polarity = parse_bool( value, key );
      else if ( key == "resize" )
        config.resize = parse_bool( value, key );
      else if ( key == "resize_rate" )
        config.resize_rate = parse_double( value, key );
      else if ( key == "max_levels" )
        config.max_levels = static_cast<uint32_t>( parse_u64( value, key ) );
      else if ( key == "crossover" )
        config.crossover = parse_bool( value, key );
      else if ( key == "capacity_mode" )
      {
        if ( value == "attenuated" )
          config.capacity_mode = CapacityMode::attenuated;
        else if ( value == "flat" )
          config.capacity_mode = CapacityMode::flat;
        else
          throw std::runtime_error( "capacity_mode must be 'attenuated' or 'flat'" );
      }
      else if ( key == "netlist_out" )
        config.netlist_out = value;
      else if ( key == "history_out" )
        config.history_out = value;
      else
        throw std::runtime_error( "unknown key '" + key + "'" );
    }
    catch ( std::runtime_error const& e )
    {
      fail( line_no, e.what() );
    }
  }

  if ( config.target_path.empty() )
    throw std::runtime_error( "config is missing 'target'" );
  if ( config.levels < 1 )
    throw std::runtime_error( "config is missing a positive 'levels'" );
  if ( config.gates_per_level < 1 )
    throw std::runtime_error( "config is missing a positive 'gates_per_level'" );
  if ( config.levels_back > config.levels )
    throw std::runtime_error( "levels_back must not exceed levels" );
  if ( config.lambda < 1 )
    throw std::runtime_error( "lambda must be positive" );
  if ( !( config.mutation_rate > 0.0 ) || config.mutation_rate > 1.0 )
    throw std::runtime_error( "mutation_rate must be in (0, 1]" );
  return config;
}

SearchParams search_params_from( RunConfig const& config )
{
  SearchParams params;
  params.seed = config.seed.value_or( 0 );
  params.lambda = config.lambda;
  params.mutation_rate = config.mutation_rate;
  params.max_evaluations = config.max_evaluations;
  params.stagnation_window = config.stagnation_window;
  params.use_crossover = config.crossover;
  params.use_resize = config.resize;
  params.resize_rate = config.resize_rate;
  params.max_levels = config.max_levels;
  return params;
}

namespace
{

std::string format_fixed( double value, int digits = 6 )
{
  char buf[64];
  std::snprintf( buf, sizeof buf, "%.*f", digits, value );
  return buf;
}

} // namespace

std::string history_csv( std::span<HistoryEntry const> history, TruthTable const& target )
{
  auto const trace = ht_trace( history, target );
  std::optional<double> running_q;
  std::string out = "generation,evaluations,functionality,active_gates,H_best,Q_running,T_running\n";
  for ( std::size_t i = 0; i < history.size(); ++i )
  {
    auto const& entry = history[i];
    if ( entry.functionality == 1.0 && ( !running_q || entry.logical_work_bits < *running_q ) )
      running_q = entry.logical_work_bits;
    out += std::to_string( entry.generation );
    out += ',' + std::to_string( entry.evaluations );
    out += ',' + format_fixed( entry.functionality );
    out += ',' + std::to_string( entry.active_gates );
    out += ',' + format_fixed( entry.output_entropy_bits );
    out += ',';
    if ( running_q )
      out += format_fixed( *running_q );
    out += ',';
    if ( trace[i].t_running )
      out += format_fixed( *trace[i].t_running );
    out += '\n';
  }
  return out;
}

std::string capacity_csv( CapacityReport const& report )
{
  std::string out = "level,per_cell_bits,cells,level_total_bits\n";
  for ( std::size_t level = 0; level < report.per_level_cell_bits.size(); ++level )
  {
    double const per_cell = report.per_level_cell_bits[level];
    out += std::to_string( level + 1 );
    out += ',' + format_fixed( per_cell );
    out += ',' + std::to_string( report.geometry.gates_per_level );
    out += ',' + format_fixed( per_cell * report.geometry.gates_per_level );
    out += '\n';
  }
  return out;
}

std::string advise_csv( std::span<RankedCandidate const> ranked )
{
  std::string out = "rank,levels,gates_per_level,levels_back,library,feasible,attenuated_bits,effective_bits,utilized_per_level\n";
  for ( auto const& entry : ranked )
  {
    std::string names;
    for ( auto const& g : entry.library.gates )
    {
      if ( !names.empty() )
        names += ' ';
      names += g.name;
    }
    out += std::to_string( entry.rank );
    out += ',' + std::to_string( entry.geometry.levels );
    out += ',' + std::to_string( entry.geometry.gates_per_level );
    out += ',' + std::to_string( entry.geometry.levels_back );
    out += ',' + names;
    out += ',' + std::string( entry.feasible ? "yes" : "no" );
    out += ',' + format_fixed( entry.report.total_bits );
    out += ',' + format_fixed( entry.effective_bits );
    out += ',' + std::to_string( entry.utilized_per_level );
    out += '\n';
  }
  return out;
}

std::string read_file( std::filesystem::path const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot read file '" + path.string() + "'" );
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move( ss ).str();
}

void write_file_atomic( std::filesystem::path const& path, std::string_view content )
{
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out( tmp, std::ios::binary | std::ios::trunc );
    if ( !out )
      throw std::runtime_error( "cannot write file '" + tmp.string() + "'" );
    out.write( content.data(), static_cast<std::streamsize>( content.size() ) );
    if ( !out )
      throw std::runtime_error( "write failed for '" + tmp.string() + "'" );
  }
  std::filesystem::rename( tmp, path );
}

} // namespace infosyn
