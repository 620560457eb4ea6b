#ifndef IFOL_MACHINE_HPP
#define IFOL_MACHINE_HPP

#include <string>
#include <variant>
#include <vector>

#include "ifol/nat.hpp"

namespace ifol {

// ---------------------------------------------------------------------------
// A deterministic register machine: the concrete meaning of the T-predicate.
//
//   INC r      increment register r, fall through
//   DECJZ r l  if register r is zero jump to l, else decrement and fall through
//   HALT       stop; the machine's output is register 0
//
// Programs are non-empty, jump targets are in range, and the last instruction
// is HALT (this keeps the program counter inside the program without a
// fall-off case). Input convention: register 0 = x, all others 0, pc = 0.
// ---------------------------------------------------------------------------

struct Instruction {
  enum class Op { Inc, Decjz, Halt };
  Op op;
  int reg = 0;
  int target = 0;

  bool operator==(const Instruction&) const = default;
};

struct MachineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Program {
  std::vector<Instruction> instructions;

  // Throws MachineError when the invariants fail.
  void validate() const;
  // Number of registers a run uses: max referenced register + 1, at least 1.
  int width() const;
};

struct Configuration {
  size_t pc = 0;
  std::vector<Nat> registers;  // fixed width per program

  bool operator==(const Configuration&) const = default;
};

struct Trace {
  std::vector<Configuration> configs;
};

// Program text format: one instruction per line, `INC r`, `DECJZ r l`,
// `HALT`; '#' starts a comment; targets are 0-based line indices of the
// instruction list.
Program parse_program(const std::string& text);
std::string print_program(const Program& p);

// Program <-> number, via the published instruction tags and the structural
// list coder. disassemble validates and throws MachineError on bad codes.
Nat assemble(const Program& p);
Program disassemble(const Nat& code);

struct RunOutcome {
  bool halted = false;
  Trace trace;         // full trace when halted
  Nat stepsUsed = 0;
};

// Simulates at most `fuel` steps from the initial configuration.
// Throws MachineError when e is not a valid program code.
RunOutcome run(const Nat& e, const Nat& x, const Nat& fuel);
RunOutcome run(const Program& p, const Nat& x, const Nat& fuel);

// Like run but keeps only the final configuration (for long runs).
struct RunResult {
  bool halted = false;
  Configuration final;
  Nat stepsUsed = 0;
};
RunResult run_result(const Program& p, const Nat& x, const Nat& fuel);

// Configuration code: pair(pc, encode_seq(registers)).
// Trace code: encode_list of configuration codes.
Nat config_code(const Configuration& c);
Nat trace_code(const Trace& t);

// Kleene's T: true iff u codes a halting run of program e on input x under
// the initial convention. Total; invalid codes yield false.
bool t_predicate(const Nat& e, const Nat& x, const Nat& u);

// Result extraction: register 0 of the final configuration of the decoded
// trace; 0 on undecodable input.
Nat u_extract(const Nat& u);

}  // namespace ifol

#endif
