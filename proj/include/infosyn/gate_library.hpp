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
  \file gate_library.hpp
  \brief Primitive gates, gate libraries, and per-gate information measures.

  A gate's truth vector uses the same row encoding as TruthTable: row index
  i encodes the gate inputs with the FIRST input as the most significant
  bit.  Under that encoding the standard cells are NOT=[10], AND=[0001],
  OR=[0111], EXOR=[0110].
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace infosyn
{

/*! \brief Primitive cell: a named single-output gate of arity 1..4. */
struct GateKind
{
  std::string name;
  uint32_t arity{ 0 };
  uint32_t truth_bits{ 0 }; // bit i = f(row i)

  /*! \brief Builds a gate from its truth vector ("0001" for AND, ...). */
  static GateKind from_truth_vector( std::string name, std::string_view bits );

  bool output( uint32_t row ) const { return ( truth_bits >> row ) & 1u; }
  uint32_t n_rows() const { return 1u << arity; }
  std::string truth_vector() const;

  bool operator==( GateKind const& other ) const = default;
};

static constexpr uint32_t max_gate_arity = 4;

/*! \brief Throws unless the gate is well-formed (arity, name, truth bits). */
void validate_gate( GateKind const& g );

GateKind not_gate();
GateKind and_gate();
GateKind or_gate();
GateKind exor_gate();

/*! \brief Ordered set of cells available to evolution.
 *
 * allow_inverted_inputs models primary and inverted input connections as
 * per-connection polarity in the genotype rather than as extra library
 * gates, so library-level information measures are unaffected by it.
 */
struct GateLibrary
{
  std::vector<GateKind> gates;
  bool allow_inverted_inputs{ true };

  std::size_t size() const { return gates.size(); }
  bool empty() const { return gates.empty(); }
  GateKind const& at( std::size_t i ) const { return gates.at( i ); }
  std::optional<std::size_t> find( std::string_view name ) const;
  uint32_t max_arity() const;

  bool operator==( GateLibrary const& other ) const = default;
};

/*! \brief {NOT, AND, OR, EXOR} with inverted inputs allowed. */
GateLibrary standard_library();

/*! \brief Throws unless the library is non-empty with unique, valid gates. */
void validate_library( GateLibrary const& lib );

/*! \brief Output entropy H(f) of the gate under uniform inputs. */
double gate_output_entropy( GateKind const& g );

/*! \brief Information measure of the gate, H(X) - H(f).  Always >= 0. */
double gate_info_measure( GateKind const& g );

/*! \brief Transmission H(f | x_input) for one gate input (0-based). */
double gate_transmission( GateKind const& g, uint32_t input );

} // namespace infosyn
