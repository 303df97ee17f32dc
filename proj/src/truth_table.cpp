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

#include <infosyn/truth_table.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace infosyn
{

namespace
{

// bit patterns of index bit b (b < 6) within a single 64-bit word
constexpr uint64_t word_patterns[6] = {
    0xAAAAAAAAAAAAAAAAull,
    0xCCCCCCCCCCCCCCCCull,
    0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull,
    0xFFFF0000FFFF0000ull,
    0xFFFFFFFF00000000ull };

uint64_t tail_mask( uint32_t n_inputs )
{
  uint64_t const rows = uint64_t( 1 ) << n_inputs;
  return rows >= 64 ? ~uint64_t( 0 ) : ( ( uint64_t( 1 ) << rows ) - 1 );
}

double plog2p( double p )
{
  return p > 0.0 ? p * std::log2( p ) : 0.0;
}

double entropy_of_counts( uint64_t ones, uint64_t total )
{
  double const p = static_cast<double>( ones ) / static_cast<double>( total );
  double const h = -plog2p( p ) - plog2p( 1.0 - p );
  return h == 0.0 ? 0.0 : h; // avoid -0.0 for constant columns
}

void check_var( uint32_t n_inputs, uint32_t var )
{
  if ( var >= n_inputs )
    throw std::out_of_range( "variable index " + std::to_string( var ) + " out of range for " + std::to_string( n_inputs ) + " inputs" );
}

} // namespace

TruthTable::TruthTable( uint32_t n_inputs, uint32_t n_outputs )
    : n_inputs_( n_inputs )
{
  if ( n_inputs < 1 || n_inputs > max_inputs )
    throw std::invalid_argument( "input count must be in [1, " + std::to_string( max_inputs ) + "], got " + std::to_string( n_inputs ) );
  if ( n_outputs < 1 )
    throw std::invalid_argument( "output count must be at least 1" );
  columns_.assign( n_outputs, std::vector<uint64_t>( words_per_column( n_inputs ), 0 ) );
}

TruthTable TruthTable::from_truth_vectors( std::vector<std::string> const& columns )
{
  if ( columns.empty() )
    throw std::invalid_argument( "at least one truth vector required" );
  uint64_t const rows = columns.front().size();
  if ( rows < 2 || ( rows & ( rows - 1 ) ) != 0 )
    throw std::invalid_argument( "truth vector length must be a power of two >= 2, got " + std::to_string( rows ) );
  uint32_t const n = static_cast<uint32_t>( std::countr_zero( rows ) );
  TruthTable tt( n, static_cast<uint32_t>( columns.size() ) );
  for ( uint32_t j = 0; j < columns.size(); ++j )
  {
    if ( columns[j].size() != rows )
      throw std::invalid_argument( "truth vectors disagree in length" );
    for ( uint64_t i = 0; i < rows; ++i )
    {
      char const c = columns[j][i];
      if ( c != '0' && c != '1' )
        throw std::invalid_argument( std::string( "non-binary character '" ) + c + "' in truth vector" );
      if ( c == '1' )
        tt.set( j, i, true );
    }
  }
  return tt;
}

TruthTable TruthTable::from_packed_columns( uint32_t n_inputs, std::vector<std::vector<uint64_t>> columns )
{
  if ( columns.empty() )
    throw std::invalid_argument( "at least one column required" );
  TruthTable tt( n_inputs, static_cast<uint32_t>( columns.size() ) );
  uint64_t const words = words_per_column( n_inputs );
  for ( auto& col : columns )
  {
    if ( col.size() != words )
      throw std::invalid_argument( "packed column has wrong word count" );
    col.back() &= tail_mask( n_inputs );
  }
  tt.columns_ = std::move( columns );
  return tt;
}

bool TruthTable::get( uint32_t output, uint64_t row ) const
{
  check_output( output );
  if ( row >= n_rows() )
    throw std::out_of_range( "row index out of range" );
  return ( columns_[output][row >> 6] >> ( row & 63 ) ) & 1;
}

void TruthTable::set( uint32_t output, uint64_t row, bool value )
{
  check_output( output );
  if ( row >= n_rows() )
    throw std::out_of_range( "row index out of range" );
  uint64_t const bit = uint64_t( 1 ) << ( row & 63 );
  if ( value )
    columns_[output][row >> 6] |= bit;
  else
    columns_[output][row >> 6] &= ~bit;
}

uint64_t TruthTable::ones_count( uint32_t output ) const
{
  check_output( output );
  uint64_t ones = 0;
  for ( uint64_t const w : columns_[output] )
    ones += std::popcount( w );
  return ones;
}

std::span<uint64_t const> TruthTable::column_words( uint32_t output ) const
{
  check_output( output );
  return columns_[output];
}

std::string TruthTable::column_string( uint32_t output ) const
{
  check_output( output );
  std::string s( n_rows(), '0' );
  for ( uint64_t i = 0; i < n_rows(); ++i )
  {
    if ( ( columns_[output][i >> 6] >> ( i & 63 ) ) & 1 )
      s[i] = '1';
  }
  return s;
}

void TruthTable::check_output( uint32_t output ) const
{
  if ( output >= columns_.size() )
    throw std::out_of_range( "output index " + std::to_string( output ) + " out of range for " + std::to_string( columns_.size() ) + " outputs" );
}

uint64_t words_per_column( uint32_t n_inputs )
{
  return ( ( uint64_t( 1 ) << n_inputs ) + 63 ) / 64;
}

std::vector<uint64_t> variable_column( uint32_t n_inputs, uint32_t var )
{
  check_var( n_inputs, var );
  uint32_t const bit = n_inputs - 1 - var; // x1 is the most significant index bit
  std::vector<uint64_t> words( words_per_column( n_inputs ) );
  if ( bit < 6 )
  {
    std::fill( words.begin(), words.end(), word_patterns[bit] );
  }
  else
  {
    for ( uint64_t w = 0; w < words.size(); ++w )
      words[w] = ( ( w >> ( bit - 6 ) ) & 1 ) ? ~uint64_t( 0 ) : 0;
  }
  words.back() &= tail_mask( n_inputs );
  return words;
}

void validate_distribution( Distribution const& d )
{
  if ( d.labels.size() != d.probabilities.size() )
    throw std::invalid_argument( "distribution labels and probabilities differ in size" );
  double sum = 0.0;
  for ( double const p : d.probabilities )
  {
    if ( p < 0.0 || p > 1.0 )
      throw std::invalid_argument( "probability outside [0, 1]" );
    sum += p;
  }
  if ( std::abs( sum - 1.0 ) > 1e-9 )
    throw std::invalid_argument( "probabilities sum to " + std::to_string( sum ) + ", expected 1" );
}

double entropy( Distribution const& d )
{
  validate_distribution( d );
  double h = 0.0;
  for ( double const p : d.probabilities )
    h -= plog2p( p );
  return h;
}

double binary_entropy( double p )
{
  if ( p < 0.0 || p > 1.0 )
    throw std::invalid_argument( "probability outside [0, 1]" );
  double const h = -plog2p( p ) - plog2p( 1.0 - p );
  return h == 0.0 ? 0.0 : h;
}

double output_probability( TruthTable const& tt, uint32_t output, bool value )
{
  uint64_t const ones = tt.ones_count( output );
  uint64_t const k = value ? ones : tt.n_rows() - ones;
  return static_cast<double>( k ) / static_cast<double>( tt.n_rows() );
}

Distribution output_distribution( TruthTable const& tt, uint32_t output )
{
  double const p1 = output_probability( tt, output, true );
  return Distribution{ { "0", "1" }, { 1.0 - p1, p1 } };
}

double entropy( TruthTable const& tt, uint32_t output )
{
  return entropy_of_counts( tt.ones_count( output ), tt.n_rows() );
}

double input_entropy( uint32_t n_inputs )
{
  if ( n_inputs == 0 )
    throw std::invalid_argument( "input count must be at least 1" );
  return static_cast<double>( n_inputs );
}

double conditional_entropy( TruthTable const& tt, uint32_t output, uint32_t var )
{
  check_var( tt.n_inputs(), var );
  auto const col = tt.column_words( output );
  auto const mask = variable_column( tt.n_inputs(), var );
  uint64_t ones_where_set = 0;
  for ( std::size_t w = 0; w < col.size(); ++w )
    ones_where_set += std::popcount( col[w] & mask[w] );
  uint64_t const ones_where_clear = tt.ones_count( output ) - ones_where_set;
  uint64_t const half = tt.n_rows() / 2;
  return 0.5 * entropy_of_counts( ones_where_set, half ) + 0.5 * entropy_of_counts( ones_where_clear, half );
}

double conditional_entropy( TruthTable const& tt, uint32_t output, std::span<uint32_t const> vars )
{
  if ( vars.empty() )
    return entropy( tt, output );

  std::vector<uint32_t> sorted( vars.begin(), vars.end() );
  std::sort( sorted.begin(), sorted.end() );
  for ( std::size_t i = 0; i < sorted.size(); ++i )
  {
    check_var( tt.n_inputs(), sorted[i] );
    if ( i > 0 && sorted[i] == sorted[i - 1] )
      throw std::invalid_argument( "duplicate variable in conditioning set" );
  }

  uint32_t const s = static_cast<uint32_t>( sorted.size() );
  std::vector<uint64_t> ones( uint64_t( 1 ) << s, 0 );
  uint32_t const n = tt.n_inputs();
  for ( uint64_t row = 0; row < tt.n_rows(); ++row )
  {
    uint64_t bucket = 0;
    for ( uint32_t const v : sorted )
      bucket = ( bucket << 1 ) | ( ( row >> ( n - 1 - v ) ) & 1 );
    ones[bucket] += tt.get( output, row ) ? 1 : 0;
  }

  uint64_t const rows_per_bucket = tt.n_rows() >> s;
  double const weight = 1.0 / static_cast<double>( uint64_t( 1 ) << s );
  double h = 0.0;
  for ( uint64_t const k : ones )
    h += weight * entropy_of_counts( k, rows_per_bucket );
  return h;
}

double joint_output_entropy( TruthTable const& tt )
{
  uint32_t const m = tt.n_outputs();
  if ( m > 64 )
    throw std::invalid_argument( "joint output entropy supports at most 64 outputs" );
  if ( m == 1 )
    return entropy( tt, 0 );

  std::vector<uint64_t> keys( tt.n_rows() );
  for ( uint64_t row = 0; row < tt.n_rows(); ++row )
  {
    uint64_t key = 0;
    for ( uint32_t j = 0; j < m; ++j )
      key |= uint64_t( tt.get( j, row ) ) << j;
    keys[row] = key;
  }
  std::sort( keys.begin(), keys.end() );

  double const total = static_cast<double>( tt.n_rows() );
  double h = 0.0;
  for ( std::size_t i = 0; i < keys.size(); )
  {
    std::size_t j = i;
    while ( j < keys.size() && keys[j] == keys[i] )
      ++j;
    h -= plog2p( static_cast<double>( j - i ) / total );
    i = j;
  }
  return h;
}

} // namespace infosyn
