#include "tao/program.hpp"

#include <random>

#include "tao/errors.hpp"

namespace tao {

const char* to_string(Opcode op) {
  switch (op) {
    case Opcode::Add: return "add";
    case Opcode::Sub: return "sub";
    case Opcode::Mul: return "mul";
    case Opcode::Load: return "load";
    case Opcode::Store: return "store";
    case Opcode::BranchEq: return "branch_eq";
    case Opcode::BranchNe: return "branch_ne";
    case Opcode::Jump: return "jump";
    case Opcode::Nop: return "nop_explicit";
  }
  return "?";
}

Opcode opcode_from_string(const std::string& s) {
  if (s == "add") return Opcode::Add;
  if (s == "sub") return Opcode::Sub;
  if (s == "mul") return Opcode::Mul;
  if (s == "load") return Opcode::Load;
  if (s == "store") return Opcode::Store;
  if (s == "branch_eq") return Opcode::BranchEq;
  if (s == "branch_ne") return Opcode::BranchNe;
  if (s == "jump") return Opcode::Jump;
  if (s == "nop_explicit") return Opcode::Nop;
  throw UnknownOpcode("unknown opcode: " + s);
}

void Program::validate() const {
  if (instructions.empty()) throw InvalidProgram("program has no instructions");
  const u64 n = instructions.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Instruction& ins = instructions[i];
    auto bad = [&](const std::string& msg) {
      throw InvalidProgram("instruction " + std::to_string(i) + ": " + msg);
    };
    if (ins.dst >= kNumRegisters) bad("dst register out of range");
    for (int s : ins.srcs)
      if (s < 0 || s >= kNumRegisters) bad("src register out of range");
    switch (ins.op) {
      case Opcode::Add:
      case Opcode::Sub:
      case Opcode::Mul:
        if (ins.dst < 0) bad("arithmetic needs a destination");
        if (ins.srcs.empty() || ins.srcs.size() > 2) bad("arithmetic needs 1 or 2 sources");
        break;
      case Opcode::Load:
        if (ins.dst < 0) bad("load needs a destination");
        if (ins.srcs.size() != 1) bad("load needs exactly 1 source");
        break;
      case Opcode::Store:
        if (ins.srcs.size() != 2) bad("store needs exactly 2 sources");
        break;
      case Opcode::BranchEq:
      case Opcode::BranchNe:
        if (ins.srcs.size() != 2) bad("branch needs exactly 2 sources");
        if (ins.target > n) bad("branch target out of range");
        break;
      case Opcode::Jump:
        if (ins.target > n) bad("jump target out of range");
        break;
      case Opcode::Nop:
        break;
    }
  }
  for (const auto& [w, v] : data_segment) {
    (void)v;
    if (w >= kDataWords) throw InvalidProgram("data segment word index out of range");
  }
}

nlohmann::ordered_json Program::to_json() const {
  nlohmann::ordered_json instrs = nlohmann::ordered_json::array();
  for (const auto& ins : instructions) {
    instrs.push_back({{"op", to_string(ins.op)},
                      {"dst", ins.dst},
                      {"srcs", ins.srcs},
                      {"imm", ins.imm},
                      {"target", ins.target}});
  }
  nlohmann::ordered_json data = nlohmann::ordered_json::array();
  for (const auto& [w, v] : data_segment) data.push_back({w, v});
  nlohmann::ordered_json regs = nlohmann::ordered_json::array();
  for (i64 r : initial_registers) regs.push_back(r);
  return {{"instructions", instrs}, {"initial_registers", regs}, {"data_segment", data}};
}

Program Program::from_json(const nlohmann::json& j) {
  Program p;
  for (const auto& ji : j.at("instructions")) {
    Instruction ins;
    ins.op = opcode_from_string(ji.at("op").get<std::string>());
    ins.dst = ji.at("dst").get<int>();
    ins.srcs = ji.at("srcs").get<std::vector<int>>();
    ins.imm = ji.at("imm").get<i64>();
    ins.target = ji.at("target").get<u64>();
    p.instructions.push_back(std::move(ins));
  }
  const auto& regs = j.at("initial_registers");
  if (regs.size() != kNumRegisters) throw InvalidProgram("expected 16 initial registers");
  for (int i = 0; i < kNumRegisters; ++i) p.initial_registers[i] = regs[i].get<i64>();
  for (const auto& d : j.at("data_segment"))
    p.data_segment.emplace_back(d[0].get<u64>(), d[1].get<i64>());
  p.validate();
  return p;
}

const char* to_string(ProgramProfile p) {
  switch (p) {
    case ProgramProfile::Compute: return "compute";
    case ProgramProfile::Memory: return "memory";
    case ProgramProfile::Branchy: return "branchy";
    case ProgramProfile::Mixed: return "mixed";
  }
  return "?";
}

ProgramProfile profile_from_string(const std::string& s) {
  if (s == "compute") return ProgramProfile::Compute;
  if (s == "memory") return ProgramProfile::Memory;
  if (s == "branchy") return ProgramProfile::Branchy;
  if (s == "mixed") return ProgramProfile::Mixed;
  throw ValidationError("unknown program profile: " + s);
}

namespace {

// Register allocation used by the generator. r0 stays zero; r12..r15 are
// reserved for pointers and loop counters.
constexpr int kZero = 0;
constexpr int kStreamPtr = 12;
constexpr int kModCtr = 13;
constexpr int kInnerCtr = 14;
constexpr int kOuterCtr = 15;

struct Gen {
  std::mt19937_64 rng;
  Program prog;
  ProgramProfile profile;

  u64 pick(u64 n) { return rng() % n; }  // deterministic, n small

  int gp_reg() { return 1 + int(pick(11)); }  // r1..r11

  void emit(Instruction ins) { prog.instructions.push_back(std::move(ins)); }

  void arith(int dst, int s0, int s1) {
    Opcode op = pick(4) == 0 ? Opcode::Mul : (pick(2) == 0 ? Opcode::Add : Opcode::Sub);
    emit({op, dst, {s0, s1}, 0, 0});
  }

  void arith_imm(int dst, int s0, i64 imm) { emit({Opcode::Add, dst, {s0}, imm, 0}); }

  std::size_t size() const { return prog.instructions.size(); }
};

// Word-index regions used for memory blocks. Sizes straddle the toy cache
// capacities so different programs stress different levels.
struct Region {
  u64 base;
  u64 words;
};

}  // namespace

Program generate_program(u64 seed, ProgramProfile profile, std::size_t length) {
  if (length < 8) throw InvalidProgram("generated program length must be >= 8");

  Gen g;
  g.rng.seed(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL +
             u64(static_cast<int>(profile)) * 0x100000001b3ULL);
  g.profile = profile;

  // Regions: a small hot set, a mid working set, and a large set that
  // overflows the toy L1; bases spread so regions do not overlap.
  Region hot{0x100 + g.pick(16) * 8, 8 + g.pick(8)};
  Region mid{0x4000 + g.pick(64) * 16, 64 + g.pick(64)};
  Region big{0x20000 + g.pick(256) * 64, 4096 + g.pick(4096)};

  // Periodic 0/1 payload for data-dependent branches.
  const u64 flag_base = 0x800;
  const u64 flag_period = 2 + g.pick(5);  // 2..6
  const u64 flag_words = 32;
  for (u64 i = 0; i < flag_words; ++i)
    g.prog.data_segment.emplace_back(flag_base + i, i64((i % flag_period) < flag_period / 2 + 1));

  // Prologue: constants and pointers.
  g.arith_imm(1, kZero, 1 + i64(g.pick(7)));
  g.arith_imm(2, kZero, 1 + i64(g.pick(13)));
  g.arith_imm(3, kZero, 2 + i64(g.pick(9)));
  g.arith_imm(kStreamPtr, kZero, i64(big.base));
  const i64 mod_period = 3 + i64(g.pick(4));  // 3..6
  g.arith_imm(kModCtr, kZero, mod_period);
  g.arith_imm(kOuterCtr, kZero, i64(1) << 30);
  const std::size_t outer_top = g.size();

  const std::size_t body_budget = length - g.size() - 2;  // outer sub + branch

  // Block palette, weighted per profile.
  // a: arithmetic run     m: load/store run     w: counted walk loop
  // s: streaming pointer  b: modular-branch     l: small arith loop
  // d: data-dependent branch   j: short forward jump   n: explicit nop
  const char* palette;
  switch (profile) {
    case ProgramProfile::Compute: palette = "aaaaaallljbn"; break;
    case ProgramProfile::Memory: palette = "mmmmwwwsssajn"; break;
    case ProgramProfile::Branchy: palette = "bbdddlllwajn"; break;
    case ProgramProfile::Mixed: palette = "aamwwsbdlljn"; break;
  }
  const std::size_t palette_len = std::string(palette).size();

  while (g.size() < outer_top + body_budget) {
    const std::size_t room = outer_top + body_budget - g.size();
    if (room < 6) {
      // Too little room for a structured block; pad with profile filler.
      if (profile == ProgramProfile::Memory)
        g.emit({Opcode::Load, g.gp_reg(), {kZero}, i64(hot.base + g.pick(hot.words)), 0});
      else if (profile == ProgramProfile::Branchy)
        g.emit({Opcode::BranchEq, -1, {kZero, kZero}, 0, g.size() + 1});  // always taken, +1
      else
        g.arith(g.gp_reg(), g.gp_reg(), g.gp_reg());
      continue;
    }
    switch (palette[g.pick(palette_len)]) {
      case 'a': {
        std::size_t k = 2 + g.pick(4);
        for (std::size_t i = 0; i < k && g.size() < outer_top + body_budget; ++i)
          g.arith(g.gp_reg(), g.gp_reg(), g.gp_reg());
        break;
      }
      case 'm': {
        std::size_t k = 3 + g.pick(4);
        const Region& r = g.pick(3) == 0 ? mid : hot;
        for (std::size_t i = 0; i < k && g.size() < outer_top + body_budget; ++i) {
          i64 off = i64(r.base + g.pick(r.words));
          if (g.pick(4) == 0)
            g.emit({Opcode::Store, -1, {kZero, g.gp_reg()}, off, 0});
          else
            g.emit({Opcode::Load, g.gp_reg(), {kZero}, off, 0});
        }
        break;
      }
      case 'w': {
        // for (r14 = T; r14 != 0; --r14) { load [r14 + base]; ... }
        i64 trip = 3 + i64(g.pick(10));
        const Region& r = g.pick(2) == 0 ? mid : big;
        u64 walk_base = r.base + g.pick(r.words / 2) * 2;
        g.arith_imm(kInnerCtr, kZero, trip);
        std::size_t top = g.size();
        g.emit({Opcode::Load, g.gp_reg(), {kInnerCtr}, i64(walk_base), 0});
        if (g.pick(2) == 0 && g.size() + 3 <= outer_top + body_budget)
          g.emit({Opcode::Load, g.gp_reg(), {kInnerCtr}, i64(walk_base + r.words / 2), 0});
        g.emit({Opcode::Sub, kInnerCtr, {kInnerCtr}, 1, 0});
        g.emit({Opcode::BranchNe, -1, {kInnerCtr, kZero}, 0, top});
        break;
      }
      case 's': {
        i64 stride = (g.pick(2) == 0 ? 2 : 4 + i64(g.pick(4)));
        g.emit({Opcode::Add, kStreamPtr, {kStreamPtr}, stride, 0});
        g.emit({Opcode::Load, g.gp_reg(), {kStreamPtr}, 0, 0});
        if (g.pick(2) == 0)
          g.emit({Opcode::Store, -1, {kStreamPtr, g.gp_reg()}, 1, 0});
        break;
      }
      case 'b': {
        // Taken except every mod_period-th execution; reset on fallthrough.
        g.emit({Opcode::Sub, kModCtr, {kModCtr}, 1, 0});
        std::size_t branch_at = g.size();
        g.emit({Opcode::BranchNe, -1, {kModCtr, kZero}, 0, branch_at + 2});
        g.arith_imm(kModCtr, kZero, mod_period);
        break;
      }
      case 'l': {
        i64 trip = 2 + i64(g.pick(8));
        g.arith_imm(kInnerCtr, kZero, trip);
        std::size_t top = g.size();
        g.arith(g.gp_reg(), g.gp_reg(), g.gp_reg());
        g.emit({Opcode::Sub, kInnerCtr, {kInnerCtr}, 1, 0});
        g.emit({Opcode::BranchNe, -1, {kInnerCtr, kZero}, 0, top});
        break;
      }
      case 'd': {
        // Branch on a periodic 0/1 flag word.
        int v = g.gp_reg();
        g.emit({Opcode::Load, v, {kModCtr}, i64(flag_base), 0});
        std::size_t branch_at = g.size();
        g.emit({Opcode::BranchEq, -1, {v, kZero}, 0, branch_at + 2});
        g.arith(g.gp_reg(), v, g.gp_reg());
        break;
      }
      case 'j': {
        std::size_t skip = 1 + g.pick(2);
        g.emit({Opcode::Jump, -1, {}, 0, g.size() + 1 + skip});
        for (std::size_t i = 0; i < skip; ++i) g.arith(g.gp_reg(), g.gp_reg(), g.gp_reg());
        break;
      }
      case 'n':
        g.emit({Opcode::Nop, -1, {}, 0, 0});
        break;
    }
  }

  // Static mix quotas: top up by rewriting trailing filler when short.
  auto static_fraction = [&](auto pred) {
    std::size_t c = 0;
    for (const auto& ins : g.prog.instructions)
      if (pred(ins.op)) ++c;
    return double(c) / double(g.prog.instructions.size() + 2);
  };
  if (profile == ProgramProfile::Memory) {
    while (static_fraction([](Opcode o) { return is_memory_op(o); }) < 0.42) {
      g.emit({Opcode::Load, g.gp_reg(), {kZero}, i64(hot.base + g.pick(hot.words)), 0});
    }
  }
  if (profile == ProgramProfile::Branchy) {
    while (static_fraction([](Opcode o) { return is_conditional_branch(o); }) < 0.27) {
      g.emit({Opcode::Sub, kModCtr, {kModCtr}, 1, 0});
      g.emit({Opcode::BranchNe, -1, {kModCtr, kZero}, 0, g.size() + 2});
      g.arith_imm(kModCtr, kZero, mod_period);
    }
  }

  // Close the outer loop.
  g.emit({Opcode::Sub, kOuterCtr, {kOuterCtr}, 1, 0});
  g.emit({Opcode::BranchNe, -1, {kOuterCtr, kZero}, 0, outer_top});

  g.prog.validate();
  return g.prog;
}

}  // namespace tao
