// Copyright 2026 The sppsolve Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPPSOLVE_ERROR_HPP
#define SPPSOLVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spp {

// Error codes for every failure mode the library reports. Grouped by the
// subsystem that raises them.
enum class Errc {
  // instance model
  EmptyColumn,
  NonPositiveCost,
  RowOutOfRange,
  ColumnIdMismatch,
  UnsortedRows,
  UnknownColumnId,
  DimensionMismatch,
  ParseError,
  // linear programming
  NumericalFailure,
  // exact solver
  ResourceLimit,
  TooLarge,
  // GTFS ingestion and duty enumeration
  MissingFile,
  MalformedRow,
  TripWithoutStopTimes,
  NotEnoughRoutes,
  CandidateCapExceeded,
  NoDuties,
  // experiments
  OracleViolation,
  InvalidConfig,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace spp

#endif  // SPPSOLVE_ERROR_HPP
