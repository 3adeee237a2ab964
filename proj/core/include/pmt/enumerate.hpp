#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pmt/classes.hpp"
#include "pmt/polymatroid.hpp"

namespace pmt {

/// Configuration for exhaustive generation.  The structural filters
/// (connected, loopless, no parallel points) are optional pruning aids;
/// completeness runs at small n leave them off.
struct GenConfig {
  int n = 3;
  int kmax = 2;
  bool loopless = false;
  bool no_parallel_points = false;
  bool connected = false;
  std::uint64_t node_budget = 2'000'000'000ULL;
  /// When set, singleton ranks are pinned to this profile.
  std::optional<std::vector<int>> singleton_ranks;
};

struct EnumResult {
  std::vector<Polymatroid> classes;  // one per isomorphism class, sorted
  bool complete = true;              // false when the node budget ran out
  std::uint64_t nodes = 0;
  std::uint64_t labeled = 0;         // labeled tables before isomorph rejection
};

/// Isomorph-free exhaustive generation: rank values are assigned
/// subset-by-subset in increasing cardinality under monotone and
/// submodular cover bounds, with canonical-form rejection at the
/// leaves.  Every emitted class passes reference-mode validation.
EnumResult enumerate_polymatroids(const GenConfig& cfg);

/// Independent oracle: filter every table with per-subset entries up to
/// the additive singleton bound through reference validation, then
/// deduplicate by canonical form.  Practical for n <= 3.
EnumResult enumerate_naive(const GenConfig& cfg);

struct ExcludedMinorFind {
  Polymatroid p;
  ExclusionReport report;
};

struct FindResult {
  std::vector<ExcludedMinorFind> found;
  bool complete = true;
  bool structural_filters = false;
  int n_max = 0;
};

/// Filters the generation stream through the excluded-minor test for
/// ground sets of size 1..n_max.
FindResult find_excluded_minors(ClassId c, int n_max, bool structural_filters,
                                MembershipCache* cache = nullptr,
                                std::uint64_t node_budget = 2'000'000'000ULL);

}  // namespace pmt
