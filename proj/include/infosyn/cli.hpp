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
  \file cli.hpp
  \brief Command dispatch for the infosyn tool, separated from main() so
         tests can drive it in-process.

  Exit codes: 0 success, 1 usage error, 2 data error (unreadable or
  malformed files, infeasible requests).  Output files are written
  atomically after all computation succeeded.
*/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infosyn
{

/*! \brief Runs the CLI on the given arguments (without the program name). */
int run_cli( std::vector<std::string> args, std::ostream& out, std::ostream& err );

} // namespace infosyn
