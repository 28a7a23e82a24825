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

#include "qcgm/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "qcgm/statevector.hpp"
#include "qcgm/version.hpp"

namespace qcgm {

namespace {

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", angle);
  return buf;
}

}  // namespace

std::string export_qasm(const CircuitIR &circuit) {
  const QubitLayout &layout = circuit.layout;
  const std::uint32_t m = layout.total();
  const std::uint32_t num_bits = layout.n + layout.num_cliques;

  std::ostringstream out;
  out << "// qcgm " << kVersion << " circuit export\n";
  out << "// normalization shift " << format_angle(circuit.provenance.shift)
      << " applied to every parameter\n";
  out << "OPENQASM 3.0;\n";
  out << "include \"stdgates.inc\";\n\n";
  out << "qubit[" << m << "] q;\n";
  out << "bit[" << num_bits << "] c;\n\n";

  for (std::uint32_t q = 0; q < m; ++q) {
    out << "h q[" << q << "];\n";
  }

  for (const GateIR &gate : circuit.gates) {
    if (gate.kind == GateKind::Hadamard) {
      out << "h q[" << gate.qubit << "];\n";
      continue;
    }
    // Modifier order matches operand order: success ancilla first,
    // then the clique qubits, target last.
    out << (gate.success_value ? "ctrl @ " : "negctrl @ ");
    for (std::size_t k = 0; k < gate.clique_qubits.size(); ++k) {
      const std::uint32_t bit =
          bit_at(gate.y, static_cast<std::uint32_t>(k),
                 static_cast<std::uint32_t>(gate.clique_qubits.size()));
      out << (bit ? "ctrl @ " : "negctrl @ ");
    }
    const double angle = gate.adjoint ? 4.0 * gate.gamma : -4.0 * gate.gamma;
    out << "rz(" << format_angle(angle) << ") q[" << gate.success_qubit << "]";
    for (std::uint32_t cq : gate.clique_qubits) {
      out << ", q[" << cq << "]";
    }
    out << ", q[" << gate.embedding_qubit << "];\n";
  }

  out << "\n";
  for (std::uint32_t v = 0; v < layout.n; ++v) {
    out << "c[" << v << "] = measure q[" << v << "];\n";
  }
  for (std::uint32_t c = 0; c < layout.num_cliques; ++c) {
    out << "c[" << layout.n + c << "] = measure q[" << layout.success_qubit(c)
        << "];\n";
  }
  return out.str();
}

namespace {

struct Cursor {
  const std::string &line;
  std::size_t pos = 0;
  int number;

  [[noreturn]] void fail(const std::string &what) const {
    throw std::runtime_error("qasm line " + std::to_string(number) + ": " +
                             what + " in \"" + line + "\"");
  }

  void skip_space() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }

  bool eat(const std::string &token) {
    skip_space();
    if (line.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  void expect(const std::string &token) {
    if (!eat(token)) fail("expected \"" + token + "\"");
  }

  std::uint32_t index() {
    skip_space();
    std::size_t start = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
    if (pos == start) fail("expected an index");
    return static_cast<std::uint32_t>(std::stoul(line.substr(start, pos - start)));
  }

  std::uint32_t qubit_ref() {
    expect("q[");
    const std::uint32_t q = index();
    expect("]");
    return q;
  }

  double number_value() {
    skip_space();
    const char *begin = line.c_str() + pos;
    char *end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos += static_cast<std::size_t>(end - begin);
    return v;
  }

  bool done() {
    skip_space();
    return pos >= line.size();
  }
};

}  // namespace

QasmCircuit parse_qasm(const std::string &text) {
  QasmCircuit circuit;
  bool saw_version = false;
  std::istringstream stream(text);
  std::string raw;
  int number = 0;

  while (std::getline(stream, raw)) {
    ++number;
    const std::size_t comment = raw.find("//");
    std::string line = comment == std::string::npos ? raw : raw.substr(0, comment);
    Cursor cur{line, 0, number};
    if (cur.done()) continue;

    if (cur.eat("OPENQASM")) {
      cur.expect("3.0");
      cur.expect(";");
      saw_version = true;
      continue;
    }
    if (cur.eat("include")) {
      continue;  // stdgates only; nothing to resolve
    }
    if (!saw_version) cur.fail("statement before OPENQASM header");

    if (cur.eat("qubit[")) {
      circuit.num_qubits = cur.index();
      cur.expect("]");
      cur.expect("q");
      cur.expect(";");
      continue;
    }
    if (cur.eat("bit[")) {
      circuit.num_bits = cur.index();
      cur.expect("]");
      cur.expect("c");
      cur.expect(";");
      continue;
    }
    if (cur.eat("c[")) {
      const std::uint32_t bit = cur.index();
      cur.expect("]");
      cur.expect("=");
      cur.expect("measure");
      const std::uint32_t q = cur.qubit_ref();
      cur.expect(";");
      if (bit >= circuit.num_bits || q >= circuit.num_qubits) {
        cur.fail("measurement out of range");
      }
      circuit.measurements.emplace_back(bit, q);
      continue;
    }

    // Gate statement: optional modifier chain, then h or rz.
    QasmGate gate;
    while (true) {
      if (cur.eat("negctrl")) {
        cur.expect("@");
        gate.control_values.push_back(false);
      } else if (cur.eat("ctrl")) {
        cur.expect("@");
        gate.control_values.push_back(true);
      } else {
        break;
      }
    }
    if (cur.eat("h")) {
      if (!gate.control_values.empty()) cur.fail("controlled h not supported");
      gate.kind = QasmGate::Kind::H;
      gate.target = cur.qubit_ref();
      cur.expect(";");
    } else if (cur.eat("rz(")) {
      gate.kind = QasmGate::Kind::ControlledRz;
      gate.angle = cur.number_value();
      cur.expect(")");
      std::vector<std::uint32_t> operands;
      operands.push_back(cur.qubit_ref());
      while (cur.eat(",")) operands.push_back(cur.qubit_ref());
      cur.expect(";");
      if (operands.size() != gate.control_values.size() + 1) {
        cur.fail("operand count does not match the modifier chain");
      }
      gate.target = operands.back();
      operands.pop_back();
      gate.controls = std::move(operands);
    } else {
      cur.fail("unsupported statement");
    }
    if (!cur.done()) cur.fail("trailing characters");
    for (std::uint32_t q : gate.controls) {
      if (q >= circuit.num_qubits) cur.fail("control qubit out of range");
    }
    if (gate.target >= circuit.num_qubits) cur.fail("target qubit out of range");
    circuit.gates.push_back(std::move(gate));
  }

  if (!saw_version) throw std::runtime_error("qasm: missing OPENQASM header");
  if (circuit.num_qubits == 0) throw std::runtime_error("qasm: no qubit register");
  return circuit;
}

DenseDistribution simulate_qasm(const QasmCircuit &circuit,
                                std::uint32_t limit) {
  if (circuit.measurements.empty()) {
    throw std::invalid_argument("simulate_qasm: circuit measures nothing");
  }
  StateVector state = prepare_zero(circuit.num_qubits, limit);
  const std::uint32_t m = circuit.num_qubits;

  for (const QasmGate &gate : circuit.gates) {
    if (gate.kind == QasmGate::Kind::H) {
      apply_hadamard(state, gate.target);
      continue;
    }
    std::uint64_t mask = 0, want = 0;
    for (std::size_t k = 0; k < gate.controls.size(); ++k) {
      const std::uint64_t bit = std::uint64_t{1} << (m - 1 - gate.controls[k]);
      mask |= bit;
      if (gate.control_values[k]) want |= bit;
    }
    const std::uint64_t target_bit = std::uint64_t{1} << (m - 1 - gate.target);
    const std::complex<double> on_zero = std::polar(1.0, -0.5 * gate.angle);
    const std::complex<double> on_one = std::polar(1.0, 0.5 * gate.angle);
    for (std::uint64_t j = 0; j < state.amp.size(); ++j) {
      if ((j & mask) != want) continue;
      state.amp[j] *= (j & target_bit) ? on_one : on_zero;
    }
  }

  const std::uint32_t num_meas =
      static_cast<std::uint32_t>(circuit.measurements.size());
  if (num_meas >= 32) {
    throw std::invalid_argument("simulate_qasm: too many classical bits");
  }
  // Classical bits are sorted by index so bit 0 ends up as the top bit
  // of the result, independent of measure statement order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> meas =
      circuit.measurements;
  std::sort(meas.begin(), meas.end());
  for (std::size_t i = 1; i < meas.size(); ++i) {
    if (meas[i].first == meas[i - 1].first) {
      throw std::invalid_argument("simulate_qasm: classical bit written twice");
    }
  }

  DenseDistribution out;
  out.n = num_meas;
  out.p.assign(std::size_t{1} << num_meas, 0.0);
  for (std::uint64_t j = 0; j < state.amp.size(); ++j) {
    const double mass = std::norm(state.amp[j]);
    if (mass == 0.0) continue;
    std::uint64_t idx = 0;
    for (std::uint32_t i = 0; i < num_meas; ++i) {
      const std::uint32_t q = meas[i].second;
      idx = (idx << 1) | ((j >> (m - 1 - q)) & 1);
    }
    out.p[idx] += mass;
  }
  return out;
}

}  // namespace qcgm
