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

#include <string>
#include <string_view>

#include "dqc/circuit.hpp"

namespace dqc {

/// Parses the supported OpenQASM 2.0 subset: qreg, creg, x, z, s, sdg, t,
/// tdg, h, rx, rz, cx, ccx, measure, barrier and single-bit `if` guards.
/// `include "qelib1.inc";` is accepted and ignored. Registers are flattened
/// in declaration order. Throws QasmError with a source position.
Circuit parse_qasm(std::string_view text);

Circuit parse_qasm_file(const std::string& path);

struct EmitOptions {
  /// Write remote_cx as a plain cx tagged "// remote" and other markers as
  /// comment lines instead of rejecting them.
  bool markers_as_comments = false;
};

/// Emits OpenQASM 2.0. Classically controlled gates must reference bits that
/// live in one-bit registers; they are written as `if(<creg>==<v>) ...`.
/// Throws QasmError for marker gates or unrepresentable conditions.
std::string emit_qasm(const Circuit& circuit, const EmitOptions& options = {});

}  // namespace dqc
