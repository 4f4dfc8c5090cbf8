// Copyright 2026 The cfft Authors
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

#include "cfft/slp.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>
#include <unordered_map>

#include "cfft/error.hpp"

namespace cfft {

namespace {

const std::regex& slot_regex() {
  static const std::regex re(R"(^([A-Za-z]'?)_\{?([0-9]+)\}?$)");
  return re;
}

const std::regex& alpha_regex() {
  static const std::regex re(R"(^(?:alpha|a)\^\{?(-?[0-9]+)\}?$)");
  return re;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

struct SlotKey {
  std::string prefix;
  uint64_t index = 0;
};

bool parse_slot(const std::string& token, SlotKey& k) {
  std::smatch m;
  if (!std::regex_match(token, m, slot_regex())) return false;
  k.prefix = m[1];
  k.index = std::stoull(m[2]);
  return true;
}

[[noreturn]] void parse_fail(size_t line, const std::string& why) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + why);
}

}  // namespace

uint32_t StraightLineProgram::new_slot(const std::string& name) {
  slot_names.push_back(name);
  return static_cast<uint32_t>(slot_names.size() - 1);
}

uint32_t StraightLineProgram::add(uint32_t a, uint32_t b, const std::string& name) {
  const uint32_t d = new_slot(name);
  instrs.push_back({OpKind::Add, d, a, b, FieldElement()});
  return d;
}

uint32_t StraightLineProgram::mul_const(uint32_t src, FieldElement c, const std::string& name) {
  if (c.is_zero()) fail(ErrorCode::InvalidArgument, "multiplication by zero constant");
  if (c.is_one()) return copy(src, name);
  const uint32_t d = new_slot(name);
  instrs.push_back({OpKind::MulConst, d, src, 0, c});
  return d;
}

uint32_t StraightLineProgram::copy(uint32_t src, const std::string& name) {
  const uint32_t d = new_slot(name);
  instrs.push_back({OpKind::Copy, d, src, 0, FieldElement()});
  return d;
}

uint32_t StraightLineProgram::zero(const std::string& name) {
  const uint32_t d = new_slot(name);
  instrs.push_back({OpKind::Zero, d, 0, 0, FieldElement()});
  return d;
}

OpTally StraightLineProgram::counts() const {
  OpTally t;
  for (const auto& in : instrs) {
    if (in.op == OpKind::Add) ++t.add;
    else if (in.op == OpKind::MulConst && !in.c.is_one()) ++t.mult;
  }
  return t;
}

std::vector<std::string> StraightLineProgram::output_names() const {
  std::vector<std::string> v;
  for (const auto& o : outputs) v.push_back(o.first);
  return v;
}

void validate(const StraightLineProgram& p) {
  std::vector<uint8_t> defined(p.slot_names.size(), 0);
  auto check = [&](uint32_t s) {
    if (s >= defined.size() || !defined[s]) fail(ErrorCode::UnboundSlot, "slot used before assignment");
  };
  for (uint32_t i : p.inputs) {
    if (i >= defined.size()) fail(ErrorCode::UnboundSlot, "input slot out of range");
    defined[i] = 1;
  }
  for (const auto& in : p.instrs) {
    if (in.op == OpKind::Add) {
      check(in.a);
      check(in.b);
    } else if (in.op != OpKind::Zero) {
      check(in.a);
    }
    if (in.dst >= defined.size()) fail(ErrorCode::UnboundSlot, "destination slot out of range");
    if (defined[in.dst]) fail(ErrorCode::RedefinitionError, "slot assigned twice: " + p.slot_names[in.dst]);
    defined[in.dst] = 1;
  }
  for (const auto& o : p.outputs) check(o.second);
}

std::vector<FieldElement> slp_eval(const StraightLineProgram& p, const std::vector<FieldElement>& x,
                                   const GaloisField& f) {
  if (x.size() != p.inputs.size()) fail(ErrorCode::LengthMismatch, "program input count mismatch");
  std::vector<FieldElement> v(p.slot_names.size());
  std::vector<uint8_t> defined(p.slot_names.size(), 0);
  for (size_t i = 0; i < x.size(); ++i) {
    v[p.inputs[i]] = x[i];
    defined[p.inputs[i]] = 1;
  }
  auto get = [&](uint32_t s) {
    if (!defined[s]) fail(ErrorCode::UnboundSlot, "slot '" + p.slot_names[s] + "' read before assignment");
    return v[s];
  };
  for (const auto& in : p.instrs) {
    switch (in.op) {
      case OpKind::Add: v[in.dst] = get(in.a) + get(in.b); break;
      case OpKind::MulConst: v[in.dst] = f.mul(get(in.a), in.c); break;
      case OpKind::Copy: v[in.dst] = get(in.a); break;
      case OpKind::Zero: v[in.dst] = FieldElement(); break;
    }
    defined[in.dst] = 1;
  }
  std::vector<FieldElement> out;
  out.reserve(p.outputs.size());
  for (const auto& o : p.outputs) out.push_back(get(o.second));
  return out;
}

CostReport make_cost(int m, uint64_t mult, uint64_t add, uint64_t div) {
  CostReport c;
  c.n_mult = mult;
  c.n_add = add;
  c.n_div = div;
  c.total = static_cast<uint64_t>(2 * m - 1) * (mult + div) + add;
  return c;
}

CostReport make_cost(int m, const OpTally& t) { return make_cost(m, t.mult, t.add, t.div); }

CostReport cost_report(const StraightLineProgram& p, int m, uint64_t n_div) {
  const OpTally t = p.counts();
  return make_cost(m, t.mult, t.add, n_div);
}

std::string slot_name(const std::string& prefix, uint64_t index) {
  return prefix + "_{" + std::to_string(index) + "}";
}

std::string canonical_slot(const std::string& token) {
  SlotKey k;
  if (!parse_slot(token, k)) fail(ErrorCode::ParseError, "malformed slot token '" + token + "'");
  return slot_name(k.prefix, k.index);
}

ParsedProgram parse_slp_text(const std::string& src, const ParseOptions& opts) {
  ParsedProgram out;
  StraightLineProgram& p = out.slp;
  std::unordered_map<std::string, uint32_t> current;
  std::vector<std::pair<SlotKey, uint32_t>> inputs;
  std::map<std::string, size_t> output_pos;
  std::vector<std::pair<SlotKey, std::pair<std::string, uint32_t>>> outputs;

  auto is_output = [&](const std::string& prefix) {
    return std::find(opts.output_prefixes.begin(), opts.output_prefixes.end(), prefix) != opts.output_prefixes.end();
  };

  auto operand = [&](const std::string& tok, size_t line) -> uint32_t {
    SlotKey k;
    if (!parse_slot(tok, k)) parse_fail(line, "malformed operand '" + tok + "'");
    const std::string name = slot_name(k.prefix, k.index);
    auto it = current.find(name);
    if (it != current.end()) return it->second;
    if (k.prefix != opts.input_prefix) parse_fail(line, "operand '" + name + "' used before assignment");
    const uint32_t s = p.new_slot(name);
    current[name] = s;
    inputs.push_back({k, s});
    return s;
  };

  std::istringstream in(src);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(line_no, "missing '='");
    const std::string lhs = trim(line.substr(0, eq));
    const std::string rhs = trim(line.substr(eq + 1));
    SlotKey dk;
    if (!parse_slot(lhs, dk)) parse_fail(line_no, "malformed destination '" + lhs + "'");
    const std::string dname = slot_name(dk.prefix, dk.index);
    if (rhs.empty()) parse_fail(line_no, "empty right-hand side");

    const bool out_slot = is_output(dk.prefix);
    if (dk.prefix == opts.input_prefix) parse_fail(line_no, "assignment to input '" + dname + "'");
    if (current.count(dname)) {
      if (!out_slot)
        fail(ErrorCode::RedefinitionError, "line " + std::to_string(line_no) + ": '" + dname + "' assigned twice");
      out.warnings.push_back({line_no, "output '" + dname + "' reassigned; last assignment wins"});
      if (std::find(out.redefined.begin(), out.redefined.end(), dname) == out.redefined.end())
        out.redefined.push_back(dname);
    }

    uint32_t dst;
    if (rhs == "0") {
      dst = p.zero(dname);
    } else if (rhs.find('*') != std::string::npos) {
      auto parts = split(rhs, '*');
      if (parts.size() != 2) parse_fail(line_no, "constant product must have two factors");
      std::smatch m;
      size_t ci = std::regex_match(parts[0], m, alpha_regex()) ? 0 : 1;
      if (ci == 1 && !std::regex_match(parts[1], m, alpha_regex())) parse_fail(line_no, "missing alpha^{e} factor");
      const int64_t e = std::stoll(m[1]);
      if (!opts.field) parse_fail(line_no, "constant product needs a field");
      const uint32_t src_slot = operand(parts[1 - ci], line_no);
      dst = p.mul_const(src_slot, opts.field->exp(e), dname);
    } else {
      auto ops = split(rhs, '+');
      std::vector<uint32_t> slots;
      for (const auto& o : ops) {
        if (o.empty()) parse_fail(line_no, "empty operand");
        slots.push_back(operand(o, line_no));
      }
      if (slots.size() == 1) {
        dst = p.copy(slots[0], dname);
      } else {
        uint32_t acc = slots[0];
        for (size_t i = 1; i < slots.size(); ++i) acc = p.add(acc, slots[i], i + 1 == slots.size() ? dname : "");
        dst = acc;
      }
    }
    current[dname] = dst;
    if (out_slot) {
      auto it = output_pos.find(dname);
      if (it == output_pos.end()) {
        output_pos[dname] = outputs.size();
        outputs.push_back({dk, {dname, dst}});
      } else {
        outputs[it->second].second.second = dst;
      }
    }
  }

  auto order = [&](const SlotKey& a, const SlotKey& b) {
    if (a.prefix != b.prefix) return a.prefix < b.prefix;
    return a.index < b.index;
  };
  std::stable_sort(inputs.begin(), inputs.end(), [&](const auto& a, const auto& b) { return order(a.first, b.first); });
  std::stable_sort(outputs.begin(), outputs.end(), [&](const auto& a, const auto& b) { return order(a.first, b.first); });
  for (const auto& i : inputs) p.inputs.push_back(i.second);
  for (const auto& o : outputs) p.outputs.push_back(o.second);
  return out;
}

std::string emit_slp_text(const StraightLineProgram& p, const GaloisField* field) {
  std::vector<int64_t> def(p.slot_names.size(), -1);
  for (size_t i = 0; i < p.instrs.size(); ++i) def[p.instrs[i].dst] = static_cast<int64_t>(i);

  std::function<std::string(uint32_t)> expr = [&](uint32_t s) -> std::string {
    if (!p.slot_names[s].empty()) return p.slot_names[s];
    const Instr& in = p.instrs.at(static_cast<size_t>(def[s]));
    if (in.op != OpKind::Add) fail(ErrorCode::InvalidArgument, "anonymous slot must be a sum");
    return expr(in.a) + " + " + expr(in.b);
  };

  std::ostringstream os;
  for (const auto& in : p.instrs) {
    const std::string& name = p.slot_names[in.dst];
    if (name.empty()) continue;
    os << name << " = ";
    switch (in.op) {
      case OpKind::Add: os << expr(in.a) << " + " << expr(in.b); break;
      case OpKind::Copy: os << expr(in.a); break;
      case OpKind::Zero: os << "0"; break;
      case OpKind::MulConst:
        if (!field) fail(ErrorCode::InvalidArgument, "emitting a constant product needs the field");
        os << expr(in.a) << " * alpha^{" << field->log(in.c) << "}";
        break;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace cfft
