#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sfvs/multigraph.hpp"
#include "sfvs/oracle.hpp"

namespace sfvs {

enum class Stage { Rules, Matroid, Full };
enum class Provider { Exact, Greedy, Planted };

/// Ordered key=value lines.
struct Report {
  std::vector<std::pair<std::string, std::string>> entries;

  void add(const std::string& key, const std::string& value) { entries.emplace_back(key, value); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  std::string text() const;
};

struct PipelineOptions {
  Stage stage = Stage::Full;
  std::uint64_t seed = 1;
  Provider provider = Provider::Exact;
  /// Used with Provider::Planted; original vertex ids.
  std::set<Vertex> planted;
  SolverLimits limits;
};

struct BoundCheck {
  std::string name;
  long long value = 0;
  long long bound = 0;
  bool holds() const { return value <= bound; }
};

struct PipelineResult {
  Instance output;
  /// Output vertex -> input vertex it stands for, where one exists.
  std::map<Vertex, Vertex> origin;
  Report report;
  std::array<int, 11> fired{};
  std::vector<std::string> trace;
  std::vector<BoundCheck> bounds;

  bool bounds_hold() const;
};

/// The rule stage normalizes, picks Z, applies the reduction rules starting
/// from the input pair constraints and finalizes. The matroid stage turns
/// pairs into S-edges and runs the S-kernel; the full stage runs both.
PipelineResult kernelize(const PairInstance& input, const PipelineOptions& options);

const char* stage_name(Stage s);
const char* provider_name(Provider p);

}  // namespace sfvs
