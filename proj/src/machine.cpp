#include "ifol/machine.hpp"

#include <sstream>

#include "ifol/coding.hpp"

namespace ifol {

namespace {
constexpr int kTagInc = 12, kTagDecjz = 13, kTagHalt = 14;
}

void Program::validate() const {
  if (instructions.empty()) throw MachineError("program is empty");
  size_t n = instructions.size();
  for (size_t i = 0; i < n; ++i) {
    const Instruction& ins = instructions[i];
    if (ins.op != Instruction::Op::Halt && ins.reg < 0)
      throw MachineError("negative register at line " + std::to_string(i));
    if (ins.op == Instruction::Op::Decjz &&
        (ins.target < 0 || static_cast<size_t>(ins.target) >= n))
      throw MachineError("jump target out of range at line " + std::to_string(i));
  }
  if (instructions.back().op != Instruction::Op::Halt)
    throw MachineError("last instruction must be HALT");
}

int Program::width() const {
  int maxReg = 0;
  for (const Instruction& ins : instructions)
    if (ins.op != Instruction::Op::Halt && ins.reg > maxReg) maxReg = ins.reg;
  return maxReg + 1;
}

Program parse_program(const std::string& text) {
  Program p;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    Instruction ins;
    if (op == "INC") {
      ins.op = Instruction::Op::Inc;
      if (!(ls >> ins.reg)) throw MachineError("INC needs a register (line " +
                                               std::to_string(lineno) + ")");
    } else if (op == "DECJZ") {
      ins.op = Instruction::Op::Decjz;
      if (!(ls >> ins.reg >> ins.target))
        throw MachineError("DECJZ needs a register and a target (line " +
                           std::to_string(lineno) + ")");
    } else if (op == "HALT") {
      ins.op = Instruction::Op::Halt;
    } else {
      throw MachineError("unknown instruction '" + op + "' (line " +
                         std::to_string(lineno) + ")");
    }
    std::string extra;
    if (ls >> extra)
      throw MachineError("trailing input on line " + std::to_string(lineno));
    p.instructions.push_back(ins);
  }
  p.validate();
  return p;
}

std::string print_program(const Program& p) {
  std::ostringstream os;
  for (const Instruction& ins : p.instructions) {
    switch (ins.op) {
      case Instruction::Op::Inc: os << "INC " << ins.reg << "\n"; break;
      case Instruction::Op::Decjz: os << "DECJZ " << ins.reg << " " << ins.target << "\n"; break;
      case Instruction::Op::Halt: os << "HALT\n"; break;
    }
  }
  return os.str();
}

Nat assemble(const Program& p) {
  p.validate();
  std::vector<Nat> items;
  items.reserve(p.instructions.size());
  for (const Instruction& ins : p.instructions) {
    switch (ins.op) {
      case Instruction::Op::Inc:
        items.push_back(encode_list({Nat(kTagInc), Nat(ins.reg)}));
        break;
      case Instruction::Op::Decjz:
        items.push_back(encode_list({Nat(kTagDecjz), Nat(ins.reg), Nat(ins.target)}));
        break;
      case Instruction::Op::Halt:
        items.push_back(encode_list({Nat(kTagHalt)}));
        break;
    }
  }
  return encode_list(items);
}

Program disassemble(const Nat& code) {
  auto items = decode_list(code);
  if (!items) throw MachineError("invalid program code: not a list");
  Program p;
  for (const Nat& item : *items) {
    auto fields = decode_list(item);
    if (!fields || fields->empty())
      throw MachineError("invalid program code: bad instruction entry");
    Instruction ins;
    if ((*fields)[0] == kTagInc && fields->size() == 2) {
      ins.op = Instruction::Op::Inc;
      ins.reg = (*fields)[1].convert_to<int>();
    } else if ((*fields)[0] == kTagDecjz && fields->size() == 3) {
      ins.op = Instruction::Op::Decjz;
      ins.reg = (*fields)[1].convert_to<int>();
      ins.target = (*fields)[2].convert_to<int>();
    } else if ((*fields)[0] == kTagHalt && fields->size() == 1) {
      ins.op = Instruction::Op::Halt;
    } else {
      throw MachineError("invalid program code: unknown instruction tag");
    }
    p.instructions.push_back(ins);
  }
  p.validate();
  return p;
}

namespace {

Configuration initial_config(const Nat& x, int width) {
  Configuration c;
  c.pc = 0;
  c.registers.assign(static_cast<size_t>(width), Nat(0));
  c.registers[0] = x;
  return c;
}

// One step; pre: current instruction is not HALT.
void step(const Program& p, Configuration& c) {
  const Instruction& ins = p.instructions[c.pc];
  switch (ins.op) {
    case Instruction::Op::Inc:
      ++c.registers[static_cast<size_t>(ins.reg)];
      ++c.pc;
      return;
    case Instruction::Op::Decjz: {
      Nat& r = c.registers[static_cast<size_t>(ins.reg)];
      if (r == 0) {
        c.pc = static_cast<size_t>(ins.target);
      } else {
        --r;
        ++c.pc;
      }
      return;
    }
    case Instruction::Op::Halt:
      throw std::logic_error("step on HALT");
  }
}

}  // namespace

RunOutcome run(const Program& p, const Nat& x, const Nat& fuel) {
  p.validate();
  RunOutcome out;
  Configuration c = initial_config(x, p.width());
  out.trace.configs.push_back(c);
  Nat used = 0;
  while (p.instructions[c.pc].op != Instruction::Op::Halt) {
    if (used >= fuel) {
      out.halted = false;
      out.stepsUsed = used;
      out.trace.configs.clear();
      return out;
    }
    step(p, c);
    ++used;
    out.trace.configs.push_back(c);
  }
  out.halted = true;
  out.stepsUsed = used;
  return out;
}

RunOutcome run(const Nat& e, const Nat& x, const Nat& fuel) {
  return run(disassemble(e), x, fuel);
}

RunResult run_result(const Program& p, const Nat& x, const Nat& fuel) {
  p.validate();
  RunResult out;
  Configuration c = initial_config(x, p.width());
  Nat used = 0;
  while (p.instructions[c.pc].op != Instruction::Op::Halt) {
    if (used >= fuel) {
      out.halted = false;
      out.stepsUsed = used;
      return out;
    }
    step(p, c);
    ++used;
  }
  out.halted = true;
  out.final = std::move(c);
  out.stepsUsed = used;
  return out;
}

Nat config_code(const Configuration& c) {
  return pair(Nat(c.pc), encode_seq(c.registers));
}

Nat trace_code(const Trace& t) {
  std::vector<Nat> codes;
  codes.reserve(t.configs.size());
  for (const Configuration& c : t.configs) codes.push_back(config_code(c));
  return encode_list(codes);
}

bool t_predicate(const Nat& e, const Nat& x, const Nat& u) {
  if (e < 0 || x < 0 || u < 0) return false;
  Program p;
  try {
    p = disassemble(e);
  } catch (const MachineError&) {
    return false;
  }
  auto codes = decode_list(u);
  if (!codes || codes->empty()) return false;
  // Replay the unique run and compare codes position by position; this also
  // enforces the canonical register-file width. encode_seq(registers) is at
  // least 2^(r+1), so a register beyond the entry's bit length is a cheap
  // mismatch that avoids building an enormous code.
  auto config_matches = [](const Configuration& c, const Nat& entry) {
    size_t entryBits = entry == 0 ? 0 : msb(entry) + 1;
    for (const Nat& r : c.registers)
      if (r + 2 > entryBits) return false;
    return config_code(c) == entry;
  };
  Configuration c = initial_config(x, p.width());
  try {
    for (size_t i = 0;; ++i) {
      if (!config_matches(c, (*codes)[i])) return false;
      bool atHalt = p.instructions[c.pc].op == Instruction::Op::Halt;
      if (i + 1 == codes->size()) return atHalt;
      if (atHalt) return false;  // trace continues past the halt
      step(p, c);
    }
  } catch (const CodeError&) {
    return false;
  }
}

Nat u_extract(const Nat& u) {
  auto codes = decode_list(u);
  if (!codes || codes->empty()) return 0;
  auto [pc, regs] = unpair(codes->back());
  (void)pc;
  return decode_at(regs, 0);
}

}  // namespace ifol
