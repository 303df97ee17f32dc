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
  \file genotype.hpp
  \brief Evolvable chromosome over a rectangular cell array.

  Every cell carries one gate gene, max-arity connection genes and
  max-arity polarity genes, so the chromosome length is a function of the
  geometry and of the library's arities only (it changes when the geometry
  is resized, giving the variable-length chromosome).  A gate of smaller
  arity simply ignores the trailing connection genes of its cell; those
  genes still mutate and can become active again later.

  A connection gene of a cell in level l (0-based) indexes the cell's
  source domain: values below n_inputs name primary inputs, the rest name
  cells of the preceding min(levels_back, l) levels in level-major order.
  Output genes index the unrestricted domain of all inputs and all cells.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gate_library.hpp"
#include "geometry.hpp"
#include "netlist.hpp"
#include "rng.hpp"

namespace infosyn
{

class Genotype
{
public:
  /*! \brief Wraps existing genes; throws unless every gene is in domain. */
  Genotype( Geometry geometry, std::shared_ptr<GateLibrary const> library, std::vector<uint32_t> genes );

  Geometry const& geometry() const { return geometry_; }
  GateLibrary const& library() const { return *library_; }
  std::shared_ptr<GateLibrary const> const& library_ptr() const { return library_; }
  std::vector<uint32_t> const& genes() const { return genes_; }

  uint32_t genes_per_cell() const { return 1 + 2 * library_->max_arity(); }
  std::size_t cell_gene_offset( uint32_t level, uint32_t pos ) const;
  std::size_t output_gene_offset() const;
  std::size_t expected_gene_count() const;

  /*! \brief Size of the source domain of a connection gene in \p level. */
  uint32_t connection_domain( uint32_t level ) const;
  /*! \brief Size of the source domain of an output gene. */
  uint32_t output_domain() const;

  /*! \brief Maps a connection gene value of \p level to a global signal id
   * (0..n_inputs-1 = inputs, then n_inputs + level-major cell index). */
  uint32_t source_id( uint32_t level, uint32_t gene_value ) const;

  bool operator==( Genotype const& other ) const;

private:
  Geometry geometry_;
  std::shared_ptr<GateLibrary const> library_;
  std::vector<uint32_t> genes_;
};

/*! \brief True iff all genotype invariants hold. */
bool is_valid( Genotype const& g );

/*! \brief Throws with a description of the first violated invariant. */
void validate_genotype( Geometry const& geometry, GateLibrary const& library, std::vector<uint32_t> const& genes );

/*! \brief Uniformly random valid genotype; deterministic given the rng state. */
Genotype random_genotype( Geometry const& geometry, std::shared_ptr<GateLibrary const> library, Rng& rng );
Genotype random_genotype( Geometry const& geometry, std::shared_ptr<GateLibrary const> library, uint64_t seed );

/*! \brief Point mutation: each gene independently resampled with
 * probability \p rate to a uniformly random valid value.  Polarity genes
 * take part only when the library allows inverted inputs. */
Genotype mutate( Genotype const& g, double rate, Rng& rng );

/*! \brief Uniform per-cell-block crossover (output genes drawn per gene).
 * Parents must share geometry and library. */
Genotype crossover( Genotype const& a, Genotype const& b, Rng& rng );

/*! \brief Appends one level of random cells at the output side;
 * existing genes are preserved verbatim. */
Genotype grow_one_level( Genotype const& g, Rng& rng );

/*! \brief Removes the last level; output genes that referenced it are
 * rewired to the same position one level earlier.  Throws if only one
 * level remains. */
Genotype shrink_one_level( Genotype const& g );

/*! \brief With probability \p rate grows or shrinks the geometry by one
 * level (respecting [1, max_levels]; max_levels 0 means unbounded). */
Genotype resize_mutation( Genotype const& g, Rng& rng, double rate = 0.02, uint32_t max_levels = 0 );

/*! \brief Extracts the active circuit: cells transitively reachable from
 * the output genes, in topological (level-major) order. */
Netlist decode( Genotype const& g );

} // namespace infosyn
