// Copyright 2026 The QVSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qvss/circuit.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

#include "qvss/error.h"

namespace qvss {
namespace {

size_t Arity(GateKind kind) {
  switch (kind) {
    case GateKind::kCnot: return 2;
    case GateKind::kToffoli: return 3;
    default: return 1;
  }
}

const char* Opcode(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "h";
    case GateKind::kX: return "x";
    case GateKind::kZ: return "z";
    case GateKind::kCnot: return "cx";
    case GateKind::kToffoli: return "ccx";
  }
  return "?";
}

[[noreturn]] void ParseError(size_t line_no, const std::string& what) {
  Throw(ErrorKind::kFormat,
        "assembly line " + std::to_string(line_no) + ": " + what);
}

int ParseInt(std::string_view s, size_t line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    ParseError(line_no, "bad integer '" + std::string(s) + "'");
  }
  return value;
}

// Parses "<reg>[<int>]" and returns the integer.
int ParseSlot(std::string_view token, std::string_view reg, size_t line_no) {
  if (token.size() < reg.size() + 3 || token.substr(0, reg.size()) != reg ||
      token[reg.size()] != '[' || token.back() != ']') {
    ParseError(line_no, "expected " + std::string(reg) + "[i], got '" +
                            std::string(token) + "'");
  }
  return ParseInt(token.substr(reg.size() + 1, token.size() - reg.size() - 2),
                  line_no);
}

}  // namespace

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) {
    Throw(ErrorKind::kSize, "circuit needs at least one qubit");
  }
}

Circuit& Circuit::Append(Gate gate) {
  if (gate.qubits.size() != Arity(gate.kind)) {
    Throw(ErrorKind::kArgument, std::string("gate ") + Opcode(gate.kind) +
                                    " takes " +
                                    std::to_string(Arity(gate.kind)) +
                                    " operands");
  }
  for (size_t i = 0; i < gate.qubits.size(); ++i) {
    const int q = gate.qubits[i];
    if (q < 1 || q > num_qubits_) {
      Throw(ErrorKind::kArgument, "gate operand " + std::to_string(q) +
                                      " outside [1, " +
                                      std::to_string(num_qubits_) + "]");
    }
    for (size_t k = 0; k < i; ++k) {
      if (gate.qubits[k] == q) {
        Throw(ErrorKind::kArgument, "gate operands must be distinct");
      }
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::H(int q) { return Append({GateKind::kH, {q}}); }
Circuit& Circuit::X(int q) { return Append({GateKind::kX, {q}}); }
Circuit& Circuit::Z(int q) { return Append({GateKind::kZ, {q}}); }
Circuit& Circuit::Cnot(int control, int target) {
  return Append({GateKind::kCnot, {control, target}});
}
Circuit& Circuit::Toffoli(int control1, int control2, int target) {
  return Append({GateKind::kToffoli, {control1, control2, target}});
}

size_t Circuit::CountKind(GateKind kind) const {
  return static_cast<size_t>(std::count_if(
      gates_.begin(), gates_.end(),
      [kind](const Gate& g) { return g.kind == kind; }));
}

StateVector Simulate(const Circuit& circuit, const StateVector& initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    Throw(ErrorKind::kArgument,
          "circuit acts on " + std::to_string(circuit.num_qubits()) +
              " qubits, state has " + std::to_string(initial.num_qubits()));
  }
  StateVector state = initial;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::kH: state.ApplyH(g.qubits[0]); break;
      case GateKind::kX: state.ApplyX(g.qubits[0]); break;
      case GateKind::kZ: state.ApplyZ(g.qubits[0]); break;
      case GateKind::kCnot: state.ApplyCnot(g.qubits[0], g.qubits[1]); break;
      case GateKind::kToffoli:
        state.ApplyToffoli(g.qubits[0], g.qubits[1], g.qubits[2]);
        break;
    }
  }
  return state;
}

std::string EmitAssembly(const Circuit& circuit) {
  std::string out;
  const std::string n = std::to_string(circuit.num_qubits());
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + n + "];\n";
  out += "creg c[" + n + "];\n";
  out += "\n";
  for (const Gate& g : circuit.gates()) {
    out += Opcode(g.kind);
    for (size_t i = 0; i < g.qubits.size(); ++i) {
      out += i == 0 ? " " : ",";
      out += "q[" + std::to_string(g.qubits[i] - 1) + "]";
    }
    out += ";\n";
  }
  return out;
}

Circuit ParseAssembly(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char c : text) {
      if (c == '\n') {
        lines.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(c);
      }
    }
    if (!current.empty()) lines.push_back(std::move(current));
  }

  size_t i = 0;
  auto expect = [&](std::string_view want) {
    if (i >= lines.size() || lines[i] != want) {
      ParseError(i + 1, "expected '" + std::string(want) + "'");
    }
    ++i;
  };
  expect("OPENQASM 2.0;");
  expect("include \"qelib1.inc\";");

  if (i >= lines.size() || !lines[i].starts_with("qreg ") ||
      !lines[i].ends_with(";")) {
    ParseError(i + 1, "expected qreg declaration");
  }
  const std::string_view qreg_line(lines[i]);
  const int n = ParseSlot(qreg_line.substr(5, qreg_line.size() - 6), "q", i + 1);
  ++i;
  expect("creg c[" + std::to_string(n) + "];");
  expect("");

  Circuit circuit(n);
  for (; i < lines.size(); ++i) {
    std::string_view line(lines[i]);
    if (line.empty()) continue;
    if (!line.ends_with(";")) ParseError(i + 1, "missing ';'");
    line.remove_suffix(1);
    const size_t space = line.find(' ');
    if (space == std::string_view::npos) ParseError(i + 1, "missing operands");
    const std::string_view op = line.substr(0, space);

    GateKind kind;
    if (op == "h") kind = GateKind::kH;
    else if (op == "x") kind = GateKind::kX;
    else if (op == "z") kind = GateKind::kZ;
    else if (op == "cx") kind = GateKind::kCnot;
    else if (op == "ccx") kind = GateKind::kToffoli;
    else ParseError(i + 1, "unknown opcode '" + std::string(op) + "'");

    Gate gate{kind, {}};
    std::string_view rest = line.substr(space + 1);
    while (!rest.empty()) {
      const size_t comma = rest.find(',');
      const std::string_view token = rest.substr(0, comma);
      gate.qubits.push_back(ParseSlot(token, "q", i + 1) + 1);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    try {
      circuit.Append(std::move(gate));
    } catch (const Error& e) {
      ParseError(i + 1, e.what());
    }
  }
  return circuit;
}

}  // namespace qvss
