#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tao/uarch.hpp"

namespace tao {

inline constexpr int kNumRegisters = 16;
inline constexpr u64 kWordBytes = 8;
inline constexpr u64 kInstrBytes = 4;
inline constexpr u64 kDataWords = u64(1) << 20;  // word-addressed data memory

enum class Opcode : std::uint8_t {
  Add,
  Sub,
  Mul,
  Load,
  Store,
  BranchEq,
  BranchNe,
  Jump,
  Nop,
};

const char* to_string(Opcode op);
Opcode opcode_from_string(const std::string& s);

inline bool is_conditional_branch(Opcode op) {
  return op == Opcode::BranchEq || op == Opcode::BranchNe;
}
inline bool is_memory_op(Opcode op) { return op == Opcode::Load || op == Opcode::Store; }

// One static instruction. Arithmetic ops use r[srcs[1]] as the second operand
// when two sources are given, the immediate otherwise. Loads address
// r[srcs[0]] + imm (word index); stores write r[srcs[1]] to r[srcs[0]] + imm.
// Branch targets are instruction indices; target == instructions.size() halts.
struct Instruction {
  Opcode op = Opcode::Nop;
  int dst = -1;                // -1 when the opcode writes no register
  std::vector<int> srcs;
  i64 imm = 0;
  u64 target = 0;
};

struct Program {
  std::vector<Instruction> instructions;
  std::array<i64, kNumRegisters> initial_registers{};
  std::vector<std::pair<u64, i64>> data_segment;  // sparse (word index, value)

  void validate() const;

  nlohmann::ordered_json to_json() const;
  static Program from_json(const nlohmann::json& j);
};

enum class ProgramProfile { Compute, Memory, Branchy, Mixed };

const char* to_string(ProgramProfile p);
ProgramProfile profile_from_string(const std::string& s);

// Deterministic synthetic program generator. `length` is the static
// instruction count; the emitted program loops long enough that dynamic
// length is bounded only by the caller's budget.
Program generate_program(u64 seed, ProgramProfile profile, std::size_t length);

}  // namespace tao
