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

#include "dqc/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "dqc/errors.hpp"

namespace dqc {
namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok type = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token tok;
      tok.line = line_;
      tok.column = col_;
      if (pos_ >= src_.size()) {
        out.push_back(tok);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.type = Tok::Ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          tok.text += advance();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        tok.type = Tok::Number;
        lex_number(tok.text);
      } else if (c == '"') {
        tok.type = Tok::String;
        advance();
        while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
          tok.text += advance();
        }
        if (pos_ >= src_.size() || src_[pos_] != '"') {
          throw QasmError("unterminated string", tok.line, tok.column);
        }
        advance();
      } else {
        tok.type = Tok::Symbol;
        if ((c == '-' && peek(1) == '>') || (c == '=' && peek(1) == '=')) {
          tok.text += advance();
          tok.text += advance();
        } else if (std::string_view("[](){};,+-*/^").find(c) != std::string_view::npos) {
          tok.text += advance();
        } else {
          throw QasmError(std::string("unexpected character '") + c + "'", tok.line,
                          tok.column);
        }
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_[pos_] == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        return;
      }
    }
  }

  void lex_number(std::string& out) {
    auto digits = [&] {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        out += advance();
      }
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      out += advance();
      digits();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const char next = peek(1);
      const bool signed_exp = (next == '+' || next == '-') &&
                              std::isdigit(static_cast<unsigned char>(peek(2)));
      if (std::isdigit(static_cast<unsigned char>(next)) || signed_exp) {
        out += advance();
        if (signed_exp) out += advance();
        digits();
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

struct RegInfo {
  bool quantum = true;
  std::size_t offset = 0;
  std::size_t size = 0;
};

// One operand as written: either a single element or a whole register.
struct Operand {
  const RegInfo* reg = nullptr;
  std::optional<std::size_t> index;
  Token where;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Circuit run() {
    parse_header();
    while (cur().type != Tok::End) statement();

    Circuit circuit(num_qubits_, 0);
    for (std::size_t i = 0; i < num_bits_; ++i) circuit.add_bit();
    circuit.set_registers(qregs_, cregs_);
    for (auto& [gate, where] : gates_) {
      try {
        circuit.add(std::move(gate));
      } catch (const CircuitError& e) {
        throw QasmError(e.what(), where.line, where.column);
      }
    }
    return circuit;
  }

 private:
  const Token& cur() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw QasmError(msg, at.line, at.column);
  }

  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool is_symbol(std::string_view s) const {
    return cur().type == Tok::Symbol && cur().text == s;
  }

  Token expect_symbol(std::string_view s) {
    if (!is_symbol(s)) {
      fail("expected '" + std::string(s) + "' but found '" + describe(cur()) + "'", cur());
    }
    return take();
  }

  Token expect_ident() {
    if (cur().type != Tok::Ident) fail("expected identifier, found '" + describe(cur()) + "'", cur());
    return take();
  }

  std::size_t expect_uint() {
    const Token t = take();
    std::size_t value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.type != Tok::Number || ec != std::errc() || ptr != last) {
      fail("expected non-negative integer, found '" + describe(t) + "'", t);
    }
    return value;
  }

  static std::string describe(const Token& t) {
    return t.type == Tok::End ? std::string("end of input") : t.text;
  }

  void parse_header() {
    const Token kw = cur();
    if (kw.type != Tok::Ident || kw.text != "OPENQASM") fail("expected 'OPENQASM 2.0;' header", kw);
    take();
    const Token version = take();
    if (version.type != Tok::Number || (version.text != "2.0" && version.text != "2")) {
      fail("unsupported OpenQASM version '" + describe(version) + "'", version);
    }
    expect_symbol(";");
  }

  void statement() {
    const Token head = cur();
    if (head.type != Tok::Ident) fail("expected statement, found '" + describe(head) + "'", head);
    const std::string& word = head.text;
    if (word == "include") {
      take();
      const Token file = take();
      if (file.type != Tok::String) fail("expected file name after include", file);
      if (file.text != "qelib1.inc") fail("unsupported include \"" + file.text + "\"", file);
      expect_symbol(";");
    } else if (word == "qreg" || word == "creg") {
      take();
      declare(word == "qreg");
    } else if (word == "gate" || word == "opaque") {
      fail("custom gate definitions are not supported", head);
    } else if (word == "if") {
      take();
      conditional();
    } else {
      quantum_op(std::nullopt);
    }
  }

  void declare(bool quantum) {
    const Token name = expect_ident();
    expect_symbol("[");
    const Token size_tok = cur();
    const std::size_t size = expect_uint();
    expect_symbol("]");
    expect_symbol(";");
    if (size == 0) fail("register '" + name.text + "' has zero size", size_tok);
    if (regs_.count(name.text)) fail("duplicate register name '" + name.text + "'", name);
    RegInfo info;
    info.quantum = quantum;
    info.size = size;
    if (quantum) {
      info.offset = num_qubits_;
      num_qubits_ += size;
      qregs_.push_back({name.text, size});
    } else {
      info.offset = num_bits_;
      num_bits_ += size;
      cregs_.push_back({name.text, size});
    }
    regs_.emplace(name.text, info);
  }

  void conditional() {
    expect_symbol("(");
    const Token name = expect_ident();
    expect_symbol("==");
    const Token value_tok = cur();
    const std::size_t value = expect_uint();
    expect_symbol(")");
    auto it = regs_.find(name.text);
    if (it == regs_.end() || it->second.quantum) {
      fail("unknown classical register '" + name.text + "'", name);
    }
    if (it->second.size != 1) {
      fail("conditions are supported on one-bit registers only", name);
    }
    if (value > 1) fail("condition value out of range for a one-bit register", value_tok);
    quantum_op(Condition{it->second.offset, static_cast<int>(value)});
  }

  Operand operand(bool quantum) {
    Operand op;
    op.where = cur();
    const Token name = expect_ident();
    auto it = regs_.find(name.text);
    if (it == regs_.end() || it->second.quantum != quantum) {
      fail(std::string("unknown ") + (quantum ? "quantum" : "classical") + " register '" +
               name.text + "'",
           name);
    }
    op.reg = &it->second;
    if (is_symbol("[")) {
      take();
      const Token idx_tok = cur();
      const std::size_t idx = expect_uint();
      expect_symbol("]");
      if (idx >= op.reg->size) {
        fail("index " + std::to_string(idx) + " out of bounds for register '" + name.text +
                 "' of size " + std::to_string(op.reg->size),
             idx_tok);
      }
      op.index = idx;
    }
    return op;
  }

  // Expands register-wide operands; all whole-register operands must agree in size.
  std::vector<std::vector<std::size_t>> broadcast(const std::vector<Operand>& ops) {
    std::size_t width = 1;
    bool any_whole = false;
    for (const Operand& op : ops) {
      if (op.index) continue;
      if (any_whole && op.reg->size != width) fail("register size mismatch", op.where);
      width = op.reg->size;
      any_whole = true;
    }
    std::vector<std::vector<std::size_t>> rows(width);
    for (std::size_t i = 0; i < width; ++i) {
      for (const Operand& op : ops) {
        rows[i].push_back(op.reg->offset + (op.index ? *op.index : i));
      }
    }
    return rows;
  }

  void quantum_op(std::optional<Condition> condition) {
    const Token head = expect_ident();
    const std::string& name = head.text;

    if (name == "measure") {
      Operand q = operand(true);
      expect_symbol("->");
      Operand c = operand(false);
      expect_symbol(";");
      if (q.index.has_value() != c.index.has_value() ||
          (!q.index && q.reg->size != c.reg->size)) {
        fail("measure operands must match in shape", q.where);
      }
      for (const auto& row : broadcast({q, c})) {
        Gate g = Gate::measure(row[0], row[1]);
        g.condition = condition;
        gates_.emplace_back(std::move(g), head);
      }
      return;
    }
    if (name == "barrier") {
      std::vector<Qubit> qs;
      do {
        if (!qs.empty() || is_symbol(",")) expect_symbol(",");
        Operand op = operand(true);
        if (op.index) {
          qs.push_back(op.reg->offset + *op.index);
        } else {
          for (std::size_t i = 0; i < op.reg->size; ++i) qs.push_back(op.reg->offset + i);
        }
      } while (is_symbol(","));
      expect_symbol(";");
      gates_.emplace_back(Gate::barrier(std::move(qs)), head);
      return;
    }
    if (name == "reset" || name == "U" || name == "CX") {
      fail("unsupported statement '" + name + "'", head);
    }

    static const std::unordered_map<std::string, GateKind> kGates = {
        {"x", GateKind::X},     {"z", GateKind::Z},     {"s", GateKind::S},
        {"sdg", GateKind::Sdg}, {"t", GateKind::T},     {"tdg", GateKind::Tdg},
        {"h", GateKind::H},     {"rx", GateKind::RX},   {"rz", GateKind::RZ},
        {"cx", GateKind::CX},   {"ccx", GateKind::CCX},
    };
    auto it = kGates.find(name);
    if (it == kGates.end()) fail("unsupported gate '" + name + "'", head);
    const GateKind kind = it->second;

    std::vector<double> params;
    if (is_symbol("(")) {
      take();
      if (!is_symbol(")")) {
        params.push_back(expression());
        while (is_symbol(",")) {
          take();
          params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    const std::size_t want_params = is_parametric(kind) ? 1 : 0;
    if (params.size() != want_params) {
      fail("gate '" + name + "' takes " + std::to_string(want_params) + " parameter(s)", head);
    }

    std::vector<Operand> ops;
    ops.push_back(operand(true));
    while (is_symbol(",")) {
      take();
      ops.push_back(operand(true));
    }
    expect_symbol(";");
    if (ops.size() != gate_arity(kind)) {
      fail("gate '" + name + "' takes " + std::to_string(gate_arity(kind)) + " qubit(s)", head);
    }
    for (const auto& row : broadcast(ops)) {
      Gate g{kind, row, want_params ? params[0] : 0.0, {}, condition};
      gates_.emplace_back(std::move(g), head);
    }
  }

  // expr := term (('+'|'-') term)*
  double expression() {
    double v = term();
    while (is_symbol("+") || is_symbol("-")) {
      const bool plus = take().text == "+";
      const double rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = unary();
    while (is_symbol("*") || is_symbol("/")) {
      const Token op = take();
      const double rhs = unary();
      if (op.text == "*") {
        v *= rhs;
      } else {
        if (rhs == 0.0) fail("division by zero", op);
        v /= rhs;
      }
    }
    return v;
  }

  double unary() {
    if (is_symbol("-")) {
      take();
      return -unary();
    }
    if (is_symbol("+")) {
      take();
      return unary();
    }
    const double base = primary();
    if (is_symbol("^")) {
      take();
      return std::pow(base, unary());
    }
    return base;
  }

  double primary() {
    const Token t = take();
    if (t.type == Tok::Number) {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        fail("malformed number '" + t.text + "'", t);
      }
      return v;
    }
    if (t.type == Tok::Ident) {
      if (t.text == "pi") return std::numbers::pi;
      using Fn = double (*)(double);
      static const std::unordered_map<std::string, Fn> kFns = {
          {"sin", [](double x) { return std::sin(x); }},
          {"cos", [](double x) { return std::cos(x); }},
          {"tan", [](double x) { return std::tan(x); }},
          {"exp", [](double x) { return std::exp(x); }},
          {"ln", [](double x) { return std::log(x); }},
          {"sqrt", [](double x) { return std::sqrt(x); }},
      };
      auto it = kFns.find(t.text);
      if (it == kFns.end()) fail("unknown identifier '" + t.text + "' in expression", t);
      expect_symbol("(");
      const double arg = expression();
      expect_symbol(")");
      return it->second(arg);
    }
    if (t.type == Tok::Symbol && t.text == "(") {
      const double v = expression();
      expect_symbol(")");
      return v;
    }
    fail("expected expression, found '" + describe(t) + "'", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, RegInfo> regs_;
  std::vector<Register> qregs_;
  std::vector<Register> cregs_;
  std::size_t num_qubits_ = 0;
  std::size_t num_bits_ = 0;
  std::vector<std::pair<Gate, Token>> gates_;
};

struct Element {
  const Register* reg;
  std::size_t index;
};

std::vector<Element> flatten(const std::vector<Register>& regs, std::size_t width,
                             const char* default_name, std::vector<Register>& storage) {
  const std::vector<Register>* source = &regs;
  std::size_t declared = 0;
  for (const Register& r : regs) declared += r.size;
  if (declared != width) {
    storage = {{default_name, width}};
    source = &storage;
  }
  std::vector<Element> out;
  out.reserve(width);
  for (const Register& r : *source) {
    for (std::size_t i = 0; i < r.size; ++i) out.push_back({&r, i});
  }
  return out;
}

std::string format_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

Circuit parse_qasm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw QasmError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_qasm(buf.str());
  } catch (const QasmError& e) {
    throw QasmError(path + ": " + e.what());
  }
}

std::string emit_qasm(const Circuit& circuit, const EmitOptions& options) {
  std::vector<Register> qstore;
  std::vector<Register> cstore;
  const auto qubits = flatten(circuit.qregs(), circuit.num_qubits(), "q", qstore);
  const auto bits = flatten(circuit.cregs(), circuit.num_bits(), "c", cstore);

  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  const Register* last = nullptr;
  for (const Element& e : qubits) {
    if (e.reg != last) out << "qreg " << e.reg->name << "[" << e.reg->size << "];\n";
    last = e.reg;
  }
  last = nullptr;
  for (const Element& e : bits) {
    if (e.reg != last) out << "creg " << e.reg->name << "[" << e.reg->size << "];\n";
    last = e.reg;
  }

  auto qref = [&](Qubit q) {
    return qubits[q].reg->name + "[" + std::to_string(qubits[q].index) + "]";
  };
  for (const Gate& g : circuit.gates()) {
    if (is_marker(g.kind) && options.markers_as_comments) {
      if (g.kind == GateKind::RemoteCX) {
        out << "cx " << qref(g.qubits[0]) << "," << qref(g.qubits[1]) << "; // remote\n";
      } else {
        out << "// " << gate_name(g.kind) << " " << qref(g.qubits[0]) << " -> "
            << qref(g.qubits[1]) << "\n";
      }
      continue;
    }
    if (is_marker(g.kind)) {
      throw QasmError("cannot emit marker gate '" + std::string(gate_name(g.kind)) +
                      "'; expand the program first");
    }
    if (g.condition) {
      const Element& e = bits[g.condition->bit];
      if (e.reg->size != 1) {
        throw QasmError("condition on bit " + std::to_string(g.condition->bit) +
                        " which is not a one-bit register");
      }
      out << "if(" << e.reg->name << "==" << g.condition->value << ") ";
    }
    out << gate_name(g.kind);
    if (is_parametric(g.kind)) out << "(" << format_angle(g.angle) << ")";
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      out << (i == 0 ? " " : ",") << qref(g.qubits[i]);
    }
    if (g.kind == GateKind::Measure) {
      const Element& e = bits[*g.target_bit];
      out << " -> " << e.reg->name << "[" << e.index << "]";
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace dqc
