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
  \file rng.hpp
  \brief Seeded random source with portable bounded sampling.

  std::uniform_int_distribution is implementation-defined, so bounded draws
  are done here by rejection sampling on the (standard-specified)
  mt19937_64 stream; a given seed reproduces the same values everywhere.
*/

#pragma once

#include <cstdint>
#include <random>

namespace infosyn
{

class Rng
{
public:
  explicit Rng( uint64_t seed ) : engine_( seed ) {}

  uint64_t next_u64() { return engine_(); }

  /*! \brief Uniform integer in [0, bound); bound must be positive. */
  uint64_t below( uint64_t bound )
  {
    // rejection sampling keeps the draw unbiased
    uint64_t const limit = bound * ( ~uint64_t( 0 ) / bound );
    uint64_t v;
    do
    {
      v = engine_();
    } while ( v >= limit );
    return v % bound;
  }

  /*! \brief Uniform double in [0, 1) with 53 random bits. */
  double unit_real()
  {
    return static_cast<double>( engine_() >> 11 ) * 0x1.0p-53;
  }

  bool bernoulli( double p )
  {
    return unit_real() < p;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace infosyn
