// Copyright 2026 The dqc Authors
//
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dqc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unsupported OpenQASM input. Carries a 1-based source position
/// when one is known (line 0 means "no position").
class QasmError : public Error {
 public:
  QasmError(const std::string& message, std::size_t line = 0,
            std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class CircuitError : public Error {
 public:
  using Error::Error;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

/// Partition constraints that cannot be met (capacities, pins, size limits).
class PartitionError : public Error {
 public:
  using Error::Error;
};

class HardwareSpecError : public Error {
 public:
  using Error::Error;
};

/// The circuit does not fit on the target hardware.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent mapping state or an unsatisfiable mapping request.
class MappingError : public Error {
 public:
  using Error::Error;
};

class SimulationError : public Error {
 public:
  using Error::Error;
};

}  // namespace dqc
