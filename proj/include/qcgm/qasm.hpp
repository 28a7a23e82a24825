// Copyright 2026 The QCGM Authors
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

/**
 * @file qasm.hpp
 * OpenQASM 3 text for compiled circuits, plus a reader and interpreter
 * for exactly the emitted subset. The reader exists so exports can be
 * validated end to end without an external toolchain: parse the text
 * back, rerun it on the generic gate set and compare distributions.
 *
 * Emitted subset: one qubit register, one bit register, h gates,
 * ctrl/negctrl modifier chains applied to rz, and measure statements.
 * Each clique phase lowers to a single multi-controlled rz on the
 * embedding qubit (angle -4*gamma, or +4*gamma for the adjoint leg),
 * controlled on the success ancilla and the clique qubits.
 *
 * The embedding qubit is never measured. Classical bits list the
 * vertex qubits first and the success ancillas after them, so bit 0 of
 * the readout is vertex 0.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "qcgm/circuit.hpp"
#include "qcgm/distribution.hpp"

namespace qcgm {

std::string export_qasm(const CircuitIR &circuit);

struct QasmGate {
  enum class Kind : std::uint8_t { H, ControlledRz };
  Kind kind = Kind::H;
  std::uint32_t target = 0;
  double angle = 0.0;
  std::vector<std::uint32_t> controls;
  /** Parallel to controls; true for ctrl, false for negctrl. */
  std::vector<bool> control_values;
};

struct QasmCircuit {
  std::uint32_t num_qubits = 0;
  std::uint32_t num_bits = 0;
  std::vector<QasmGate> gates;
  /** (classical bit, measured qubit) pairs in statement order. */
  std::vector<std::pair<std::uint32_t, std::uint32_t>> measurements;
};

/**
 * Parses text previously produced by export_qasm (or anything inside
 * the same subset). @throws std::runtime_error with the offending line
 * on malformed input.
 */
QasmCircuit parse_qasm(const std::string &text);

/**
 * Runs a parsed circuit from the all-zero state and returns the exact
 * readout distribution over the classical bits, bit 0 as the top bit
 * of the index. Unmeasured qubits are summed out.
 */
DenseDistribution simulate_qasm(const QasmCircuit &circuit,
                                std::uint32_t limit = 26);

}  // namespace qcgm
