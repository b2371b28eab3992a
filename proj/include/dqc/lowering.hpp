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

#include "dqc/circuit.hpp"

namespace dqc {

/// Lowers to {rx, rz, h, cx} plus measure and barrier. Equal to the input up
/// to a global phase. `ccx` uses the 6-cx textbook decomposition, t/s/z become
/// rz rotations and x becomes rx(pi). Classically controlled gates keep
/// their condition on every emitted gate. Marker gates are rejected.
Circuit decompose_to_basis(const Circuit& circuit);

/// The 15-gate Clifford+T Toffoli used by the lowering (and by the corpus
/// generator, which writes it with t/tdg rather than rz).
std::vector<Gate> toffoli_clifford_t(Qubit c0, Qubit c1, Qubit target);

}  // namespace dqc
