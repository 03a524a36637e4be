// Copyright 2026 the streamsim authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STREAMSIM_REBALANCE_HPP
#define STREAMSIM_REBALANCE_HPP

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace streamsim::rebalance {

/// Task-to-worker placement. `active` carries ownership; `warming` holds at
/// most one in-flight warm-up replica per task; `standby` holds passive
/// synchronized copies. All maps are keyed by task id.
struct Assignment {
    std::map<int, int> active;
    std::map<int, int> warming;
    std::map<int, std::set<int>> standby;
    long epoch = 0;
};

/// Balanced sticky target: per-worker counts differ by at most one and the
/// number of moves away from `current.active` is minimal. Warm-ups already
/// heading to a deficit worker keep their destination.
/// Returns an empty map when no worker is live ("cluster down").
std::map<int, int> compute_target_assignment(const std::vector<int>& live_workers,
                                             const std::vector<int>& tasks,
                                             const Assignment& current);

/// Reassigns every unowned task to a survivor immediately, round-robin over
/// survivors ordered by (current load, id). No warm-up gating: restoration
/// lands on the new owners. Returns the (task, new_owner) pairs.
std::vector<std::pair<int, int>> immediate_rebalance(Assignment& assignment,
                                                     const std::vector<int>& live_workers,
                                                     const std::vector<int>& tasks);

struct ProbingOutcome {
    std::vector<std::pair<int, int>> promoted;  // (task, new active owner)
    std::vector<std::pair<int, int>> placed;    // (task, warm-up destination)
};

/// One follow-up rebalance round: promotes every ready warm-up onto its
/// destination, then places new warm-ups toward the balanced target, keeping
/// at most `max_warmup_replicas` warming cluster-wide. Warm-ups no longer on
/// the migration path are dropped (reported via `dropped` when non-null).
ProbingOutcome probing_rebalance(Assignment& assignment, const std::vector<int>& live_workers,
                                 const std::vector<int>& tasks, int max_warmup_replicas,
                                 const std::function<bool(int task, int worker)>& ready,
                                 std::vector<int>* dropped = nullptr);

/// A warm-up is promotable once its remaining changelog backlog is within the
/// acceptable recovery lag (inclusive).
bool warmup_ready(double changelog_backlog, double acceptable_recovery_lag);

/// Gives each task up to `num_standby_replicas` holders on the least-loaded
/// workers, never colocated with the task's active owner.
void place_standbys(Assignment& assignment, const std::vector<int>& live_workers,
                    const std::vector<int>& tasks, int num_standby_replicas);

/// max - min active task count across live workers (workers without tasks count as 0).
int imbalance(const Assignment& assignment, const std::vector<int>& live_workers);

/// Number of tasks whose owner differs from the sticky balanced target.
int migrations_needed(const Assignment& assignment, const std::vector<int>& live_workers,
                      const std::vector<int>& tasks);

}  // namespace streamsim::rebalance

#endif
