#pragma once

#include "phall/ffla.hpp"
#include "phall/periodic.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace phall {

/// Category, period and grid shared by products, tables and suites.
struct RunConfig {
  std::string quiver = "A1";
  int q = 2;
  int m = 3;
  /// Per-object (or per-degree) dimension bound; empty means 1 at every vertex.
  std::vector<int> max_dim;
  /// Per-factor bound on the total dimension of a class tuple; negative means none.
  int max_total = -1;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 1;
  /// K-tuples sampled per class triple in associativity sweeps; 0 means all.
  int k_samples = 0;
  std::string suite;
  std::string out;

  DimVector bound(int vertices) const;
  std::string label() const;
};

struct SuiteReport {
  std::string suite;
  std::string config;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  /// When set, the suite succeeds only if at least one failure is found.
  bool expects_failure = false;
  std::vector<nlohmann::json> witnesses;

  bool passed() const { return expects_failure ? failures > 0 : failures == 0; }
  void record(bool ok, const nlohmann::json& witness);
  /// Like record, but builds the witness only when the check fails.
  template <class Make>
  void record_lazy(bool ok, Make&& make) {
    if (ok) {
      ++instances;
      return;
    }
    record(false, make());
  }
  void merge(const SuiteReport& o);
  nlohmann::json to_json() const;
};

/// Names accepted by run_suite, in catalog order.
const std::vector<std::string>& suite_catalog();
/// Runs a named suite; throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

/// Class tuples of length m with every entry ≤ per_degree and total
/// dimension ≤ max_total (when nonnegative), in lexicographic order.
std::vector<Graded> graded_within(RepCategory& cat, int m, const DimVector& per_degree, int max_total);
/// All K-tuples of length m with every coordinate in {-1, 0, 1}.
std::vector<std::vector<KClass>> unit_k_tuples(int vertices, int m);

}  // namespace phall
