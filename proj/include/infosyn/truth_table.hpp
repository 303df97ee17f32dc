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
  \file truth_table.hpp
  \brief Complete Boolean functions as packed truth tables, with entropy
         measures over their output distributions.

  Row-index encoding is fixed throughout the library: row i of a table over
  inputs x1..xn encodes the assignment with x1 as the MOST significant bit
  of i, so row 0 is the all-zeros assignment.  Variable indices in the API
  are 0-based: variable v corresponds to x(v+1) and to bit (n-1-v) of the
  row index.  All entropies are base-2 and assume inputs uniformly
  distributed over the 2^n assignments; 0*log(0) is taken as 0.
*/

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace infosyn
{

/*! \brief Complete multi-output Boolean function {0,1}^n -> {0,1}^m.
 *
 * Each output column is a truth vector of 2^n bits stored in packed 64-bit
 * words (bit i of the column is the function value on row i).  Unused bits
 * past row 2^n - 1 in the last word are kept at zero.
 */
class TruthTable
{
public:
  static constexpr uint32_t max_inputs = 20;

  /*! \brief All-zeros table with \p n_inputs inputs and \p n_outputs outputs. */
  TruthTable( uint32_t n_inputs, uint32_t n_outputs );

  /*! \brief Builds a table from one truth-vector string per output.
   *
   * Character j of each string is the value on row j (e.g. "10001111").
   * All strings must have the same power-of-two length 2^n, n in [1, 20].
   */
  static TruthTable from_truth_vectors( std::vector<std::string> const& columns );

  /*! \brief Adopts pre-packed column words (bit i of column = row i). */
  static TruthTable from_packed_columns( uint32_t n_inputs, std::vector<std::vector<uint64_t>> columns );

  uint32_t n_inputs() const { return n_inputs_; }
  uint32_t n_outputs() const { return static_cast<uint32_t>( columns_.size() ); }
  uint64_t n_rows() const { return uint64_t( 1 ) << n_inputs_; }

  bool get( uint32_t output, uint64_t row ) const;
  void set( uint32_t output, uint64_t row, bool value );

  /*! \brief Number of rows on which the output is 1. */
  uint64_t ones_count( uint32_t output ) const;

  std::span<uint64_t const> column_words( uint32_t output ) const;

  /*! \brief Truth vector of one output as a "0"/"1" string, row 0 first. */
  std::string column_string( uint32_t output ) const;

  bool operator==( TruthTable const& other ) const = default;

private:
  void check_output( uint32_t output ) const;

  uint32_t n_inputs_;
  std::vector<std::vector<uint64_t>> columns_;
};

/*! \brief Packed words needed for a column over 2^n rows. */
uint64_t words_per_column( uint32_t n_inputs );

/*! \brief Packed column of variable \p var itself over all 2^n rows.
 *
 * Bit i of the result is bit (n-1-var) of row index i, i.e. the value the
 * variable takes on that row.
 */
std::vector<uint64_t> variable_column( uint32_t n_inputs, uint32_t var );

/*! \brief Discrete probability distribution over labeled outcomes. */
struct Distribution
{
  std::vector<std::string> labels;
  std::vector<double> probabilities;
};

/*! \brief Throws unless probabilities are in [0,1] and sum to 1 (1e-9). */
void validate_distribution( Distribution const& d );

/*! \brief Shannon entropy (bits) of a distribution. */
double entropy( Distribution const& d );

/*! \brief -p*log2(p) - (1-p)*log2(1-p), with 0*log(0) = 0. */
double binary_entropy( double p );

/*! \brief p(f = value) for one output: rows with that value / 2^n. */
double output_probability( TruthTable const& tt, uint32_t output, bool value );

/*! \brief Value distribution {p(f=0), p(f=1)} of one output. */
Distribution output_distribution( TruthTable const& tt, uint32_t output );

/*! \brief Shannon entropy H(f) of one output column.  In [0, 1]. */
double entropy( TruthTable const& tt, uint32_t output );

/*! \brief Maximum input information H(X) = n for uniform inputs.  n >= 1. */
double input_entropy( uint32_t n_inputs );

/*! \brief Conditional entropy H(f | x_var) for a single variable.
 *
 * Averages the entropy of the two cofactors, each weighted 1/2 under the
 * uniform-input assumption.  Never exceeds entropy(tt, output).
 */
double conditional_entropy( TruthTable const& tt, uint32_t output, uint32_t var );

/*! \brief Conditional entropy H(f | x_S) given a set of variables.
 *
 * Equals entropy(tt, output) for the empty set and 0 for the full set.
 */
double conditional_entropy( TruthTable const& tt, uint32_t output, std::span<uint32_t const> vars );

/*! \brief Joint Shannon entropy of the m-bit output tuple distribution.
 *
 * Used by the network-level measures; supports up to 64 outputs.
 */
double joint_output_entropy( TruthTable const& tt );

} // namespace infosyn
