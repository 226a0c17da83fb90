#pragma once

#include <cstddef>
#include <string_view>

#include "padplace/scenario.hpp"
#include "padplace/verify.hpp"

namespace padplace {

struct ShiftConfig {
  double d_delta = 30.0;      ///< step length, m
  std::size_t max_steps = 0;  ///< per PAD; 0 means ceil(d_max / d_delta)
};

/// Second merge candidate when the farthest-pair midpoint fails.
enum class MergeStrategy {
  kEnclosingCircle,  ///< center of the minimum enclosing circle
  kTriangle,         ///< circumcenter of the farthest pair and the node nearest their midpoint
};

std::string_view to_string(MergeStrategy s);
/// "mec" or "triangle"; throws ConfigError otherwise.
MergeStrategy parse_merge_strategy(std::string_view name);

struct DscOptions {
  ShiftConfig shift;
  MergeStrategy merge = MergeStrategy::kEnclosingCircle;
  bool combine_until_fixed_point = false;
  /// Re-run the full verifier after every committed change and throw
  /// padplace::Error on a violation. Slow; meant for tests.
  bool check_commits = false;
};

struct DscTrace {
  Deployment pruned;
  Deployment shifted;
  Deployment combined;
};

/// Removes redundant PADs one at a time until none is left. Candidates are
/// PADs with an empty exclusive set, tried in ascending order of covered-node
/// count (ties: lowest index); the first one whose removal keeps the station
/// graph connected goes.
Deployment prune_redundant(const Deployment& dep, const Scenario& scenario);

/// Moves each PAD (fewest exclusive nodes first) toward its nearest station
/// in whole steps of d_delta for as long as both constraints hold, then
/// prunes again. The direction is fixed when the PAD's turn starts.
Deployment shift_pads(const Deployment& dep, const Scenario& scenario,
                      const ShiftConfig& cfg);

/// One pass of pairwise merges. For each PAD (fewest exclusive nodes first)
/// and each other PAD within d_max (closest first), the two are replaced by a
/// single PAD at the midpoint of the farthest pair of nodes only they cover,
/// or failing that at the second candidate of `opts.merge`. Merged PADs
/// rejoin the end of the queue.
Deployment combine_pads(const Deployment& dep, const Scenario& scenario,
                        const DscOptions& opts = {});

/// prune -> shift -> prune -> combine -> prune.
Deployment dsc_optimize(const Deployment& dep, const Scenario& scenario,
                        const DscOptions& opts = {}, DscTrace* trace = nullptr);

}  // namespace padplace
