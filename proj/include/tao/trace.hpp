#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tao/program.hpp"

namespace tao {

enum class DLevel : std::uint8_t { None = 0, L1 = 1, L2 = 2, Mem = 3 };

const char* to_string(DLevel d);
DLevel dlevel_from_string(const std::string& s);

// Static properties of one retired instruction; no timing.
struct FunctionalRecord {
  u64 pc = 0;
  Opcode op = Opcode::Nop;
  std::optional<int> dst;
  std::vector<int> srcs;
  std::optional<u64> mem_addr;
  std::optional<bool> taken;

  bool operator==(const FunctionalRecord&) const = default;
};

// Functional record plus cycle-level timing and event flags.
struct DetailedRecord {
  FunctionalRecord f;
  u64 fetch_clock = 0;
  u64 fetch_lat = 0;
  u64 complete_clock = 0;
  bool squashed = false;
  bool nop = false;
  bool mispred = false;
  std::optional<DLevel> dlevel;
  bool imiss = false;

  bool retained() const { return !squashed && !nop; }
  u64 fetch_done() const { return fetch_clock + fetch_lat; }
};

using FunctionalTrace = std::vector<FunctionalRecord>;
using DetailedTrace = std::vector<DetailedRecord>;

// JSON-Lines serialization. Field order is fixed; unknown fields are
// rejected on read.
std::string to_jsonl_line(const FunctionalRecord& r);
std::string to_jsonl_line(const DetailedRecord& r);
FunctionalRecord functional_record_from_line(const std::string& line);
DetailedRecord detailed_record_from_line(const std::string& line);

void write_functional_trace(std::ostream& os, const FunctionalTrace& t);
void write_detailed_trace(std::ostream& os, const DetailedTrace& t);
FunctionalTrace read_functional_trace(std::istream& is);
DetailedTrace read_detailed_trace(std::istream& is);

void save_functional_trace(const std::string& path, const FunctionalTrace& t);
void save_detailed_trace(const std::string& path, const DetailedTrace& t);
FunctionalTrace load_functional_trace(const std::string& path);
DetailedTrace load_detailed_trace(const std::string& path);

}  // namespace tao
