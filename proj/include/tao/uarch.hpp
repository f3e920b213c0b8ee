#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tao {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u32 = std::uint32_t;

enum class BranchPredictorKind { AlwaysTaken, TwoBitLocal, GShare, Tournament };

const char* to_string(BranchPredictorKind k);
BranchPredictorKind branch_predictor_from_string(const std::string& s);

struct CacheConfig {
  u32 size_bytes = 0;
  u32 associativity = 1;
  u32 line_bytes = 16;

  u32 num_sets() const { return size_bytes / (associativity * line_bytes); }
  void validate(const std::string& what) const;
};

// Parameter vector of one simulated core. Validated against the toy ranges.
struct MicroArchConfig {
  std::string name = "uarch";
  u32 fetch_width = 1;
  u32 rob_size = 8;
  BranchPredictorKind branch_predictor = BranchPredictorKind::TwoBitLocal;
  CacheConfig l1d;
  CacheConfig l1i;
  CacheConfig l2;
  u32 l1_latency = 1;
  u32 l2_latency = 4;
  u32 mem_latency = 20;

  void validate() const;

  nlohmann::ordered_json to_json() const;
  static MicroArchConfig from_json(const nlohmann::json& j);
};

// Cartesian grid of configuration choices; the sampling domain for design
// selection and exploration sweeps.
struct DesignSpace {
  std::vector<u32> fetch_widths{1, 2, 4};
  std::vector<u32> rob_sizes{8, 16, 32};
  std::vector<BranchPredictorKind> predictors{
      BranchPredictorKind::TwoBitLocal, BranchPredictorKind::GShare,
      BranchPredictorKind::Tournament};
  std::vector<u32> l1d_sizes{256, 512, 1024, 2048};
  std::vector<u32> l1d_assoc{1, 2, 4};
  std::vector<u32> l1i_sizes{128, 256, 512};
  std::vector<u32> l1i_assoc{1, 2};
  std::vector<u32> l2_sizes{4096, 8192, 16384};
  std::vector<u32> l2_assoc{2, 4};
  u32 line_bytes = 16;
  u32 l1_latency = 1;
  u32 l2_latency = 4;
  u32 mem_latency = 20;

  u64 grid_size() const;
  // Decodes a flat grid index (mixed radix over the lists above).
  MicroArchConfig decode(u64 index) const;
  u32 max_rob() const;

  nlohmann::ordered_json to_json() const;
  static DesignSpace from_json(const nlohmann::json& j);
};

}  // namespace tao
