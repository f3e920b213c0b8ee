#include "tao/uarch.hpp"

#include <algorithm>

#include "tao/errors.hpp"

namespace tao {

namespace {

bool is_pow2(u64 x) { return x != 0 && (x & (x - 1)) == 0; }

void check(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

const char* to_string(BranchPredictorKind k) {
  switch (k) {
    case BranchPredictorKind::AlwaysTaken: return "AlwaysTaken";
    case BranchPredictorKind::TwoBitLocal: return "TwoBitLocal";
    case BranchPredictorKind::GShare: return "GShare";
    case BranchPredictorKind::Tournament: return "Tournament";
  }
  return "?";
}

BranchPredictorKind branch_predictor_from_string(const std::string& s) {
  if (s == "AlwaysTaken") return BranchPredictorKind::AlwaysTaken;
  if (s == "TwoBitLocal") return BranchPredictorKind::TwoBitLocal;
  if (s == "GShare") return BranchPredictorKind::GShare;
  if (s == "Tournament") return BranchPredictorKind::Tournament;
  throw ValidationError("unknown branch predictor: " + s);
}

void CacheConfig::validate(const std::string& what) const {
  check(is_pow2(size_bytes), what + ": size_bytes must be a power of two");
  check(is_pow2(line_bytes), what + ": line_bytes must be a power of two");
  check(associativity >= 1, what + ": associativity must be >= 1");
  check(size_bytes % (u64(associativity) * line_bytes) == 0,
        what + ": size not divisible by associativity * line_bytes");
  check(is_pow2(num_sets()), what + ": number of sets must be a power of two");
}

void MicroArchConfig::validate() const {
  check(fetch_width >= 1 && fetch_width <= 8, "fetch_width must be in [1,8]");
  check(rob_size >= 4 && rob_size <= 128, "rob_size must be in [4,128]");
  l1d.validate("l1d");
  l1i.validate("l1i");
  l2.validate("l2");
  check(l1d.size_bytes < l2.size_bytes, "l1d size must be < l2 size");
  check(l1i.size_bytes < l2.size_bytes, "l1i size must be < l2 size");
  check(l1_latency < l2_latency && l2_latency < mem_latency,
        "latencies must satisfy l1 < l2 < mem");
}

namespace {

nlohmann::ordered_json cache_to_json(const CacheConfig& c) {
  return {{"size_bytes", c.size_bytes},
          {"associativity", c.associativity},
          {"line_bytes", c.line_bytes}};
}

CacheConfig cache_from_json(const nlohmann::json& j, const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "size_bytes" && it.key() != "associativity" && it.key() != "line_bytes")
      throw ValidationError(what + ": unknown key '" + it.key() + "'");
  }
  CacheConfig c;
  c.size_bytes = j.at("size_bytes").get<u32>();
  c.associativity = j.at("associativity").get<u32>();
  if (j.contains("line_bytes")) c.line_bytes = j.at("line_bytes").get<u32>();
  return c;
}

}  // namespace

nlohmann::ordered_json MicroArchConfig::to_json() const {
  return {{"name", name},
          {"fetch_width", fetch_width},
          {"rob_size", rob_size},
          {"branch_predictor", to_string(branch_predictor)},
          {"l1d", cache_to_json(l1d)},
          {"l1i", cache_to_json(l1i)},
          {"l2", cache_to_json(l2)},
          {"l1_latency", l1_latency},
          {"l2_latency", l2_latency},
          {"mem_latency", mem_latency}};
}

MicroArchConfig MicroArchConfig::from_json(const nlohmann::json& j) {
  static const char* keys[] = {"name",        "fetch_width", "rob_size",
                               "branch_predictor", "l1d",    "l1i",
                               "l2",          "l1_latency",  "l2_latency",
                               "mem_latency"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find_if(std::begin(keys), std::end(keys),
                     [&](const char* k) { return it.key() == k; }) == std::end(keys))
      throw ValidationError("uarch: unknown key '" + it.key() + "'");
  }
  MicroArchConfig c;
  if (j.contains("name")) c.name = j.at("name").get<std::string>();
  c.fetch_width = j.at("fetch_width").get<u32>();
  c.rob_size = j.at("rob_size").get<u32>();
  c.branch_predictor = branch_predictor_from_string(j.at("branch_predictor").get<std::string>());
  c.l1d = cache_from_json(j.at("l1d"), "l1d");
  c.l1i = cache_from_json(j.at("l1i"), "l1i");
  c.l2 = cache_from_json(j.at("l2"), "l2");
  c.l1_latency = j.at("l1_latency").get<u32>();
  c.l2_latency = j.at("l2_latency").get<u32>();
  c.mem_latency = j.at("mem_latency").get<u32>();
  c.validate();
  return c;
}

u64 DesignSpace::grid_size() const {
  u64 n = 1;
  n *= fetch_widths.size();
  n *= rob_sizes.size();
  n *= predictors.size();
  n *= l1d_sizes.size();
  n *= l1d_assoc.size();
  n *= l1i_sizes.size();
  n *= l1i_assoc.size();
  n *= l2_sizes.size();
  n *= l2_assoc.size();
  return n;
}

u32 DesignSpace::max_rob() const {
  return *std::max_element(rob_sizes.begin(), rob_sizes.end());
}

MicroArchConfig DesignSpace::decode(u64 index) const {
  if (index >= grid_size()) throw ValidationError("design index out of range");
  auto take = [&index](std::size_t n) {
    u64 v = index % n;
    index /= n;
    return v;
  };
  MicroArchConfig c;
  c.fetch_width = fetch_widths[take(fetch_widths.size())];
  c.rob_size = rob_sizes[take(rob_sizes.size())];
  c.branch_predictor = predictors[take(predictors.size())];
  c.l1d = {l1d_sizes[take(l1d_sizes.size())], l1d_assoc[take(l1d_assoc.size())], line_bytes};
  c.l1i = {l1i_sizes[take(l1i_sizes.size())], l1i_assoc[take(l1i_assoc.size())], line_bytes};
  c.l2 = {l2_sizes[take(l2_sizes.size())], l2_assoc[take(l2_assoc.size())], line_bytes};
  c.l1_latency = l1_latency;
  c.l2_latency = l2_latency;
  c.mem_latency = mem_latency;
  c.validate();
  return c;
}

namespace {

template <typename T>
nlohmann::ordered_json vec_json(const std::vector<T>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x);
  return a;
}

}  // namespace

nlohmann::ordered_json DesignSpace::to_json() const {
  nlohmann::ordered_json preds = nlohmann::ordered_json::array();
  for (auto p : predictors) preds.push_back(to_string(p));
  return {{"fetch_widths", vec_json(fetch_widths)},
          {"rob_sizes", vec_json(rob_sizes)},
          {"predictors", preds},
          {"l1d_sizes", vec_json(l1d_sizes)},
          {"l1d_assoc", vec_json(l1d_assoc)},
          {"l1i_sizes", vec_json(l1i_sizes)},
          {"l1i_assoc", vec_json(l1i_assoc)},
          {"l2_sizes", vec_json(l2_sizes)},
          {"l2_assoc", vec_json(l2_assoc)},
          {"line_bytes", line_bytes},
          {"l1_latency", l1_latency},
          {"l2_latency", l2_latency},
          {"mem_latency", mem_latency}};
}

DesignSpace DesignSpace::from_json(const nlohmann::json& j) {
  static const char* keys[] = {"fetch_widths", "rob_sizes", "predictors", "l1d_sizes",
                               "l1d_assoc",    "l1i_sizes", "l1i_assoc",  "l2_sizes",
                               "l2_assoc",     "line_bytes", "l1_latency", "l2_latency",
                               "mem_latency"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (std::find_if(std::begin(keys), std::end(keys),
                     [&](const char* k) { return it.key() == k; }) == std::end(keys))
      throw ValidationError("uarch_grid: unknown key '" + it.key() + "'");
  }
  DesignSpace s;
  auto get_vec = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    out.clear();
    for (const auto& x : j.at(key)) out.push_back(x.template get<u32>());
  };
  get_vec("fetch_widths", s.fetch_widths);
  get_vec("rob_sizes", s.rob_sizes);
  get_vec("l1d_sizes", s.l1d_sizes);
  get_vec("l1d_assoc", s.l1d_assoc);
  get_vec("l1i_sizes", s.l1i_sizes);
  get_vec("l1i_assoc", s.l1i_assoc);
  get_vec("l2_sizes", s.l2_sizes);
  get_vec("l2_assoc", s.l2_assoc);
  if (j.contains("predictors")) {
    s.predictors.clear();
    for (const auto& x : j.at("predictors"))
      s.predictors.push_back(branch_predictor_from_string(x.get<std::string>()));
  }
  if (j.contains("line_bytes")) s.line_bytes = j.at("line_bytes").get<u32>();
  if (j.contains("l1_latency")) s.l1_latency = j.at("l1_latency").get<u32>();
  if (j.contains("l2_latency")) s.l2_latency = j.at("l2_latency").get<u32>();
  if (j.contains("mem_latency")) s.mem_latency = j.at("mem_latency").get<u32>();
  return s;
}

}  // namespace tao
