// Copyright 2026 the streamsim authors
// SPDX-License-Identifier: Apache-2.0

#ifndef STREAMSIM_SCENARIO_HPP
#define STREAMSIM_SCENARIO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace streamsim {

/// Aggregate workload shape: how much data arrives and what it costs to process.
struct WorkloadConfig {
    double input_rate = 68000.0;  // records/s, aggregate over all partitions.
                                  // When unset in a scenario file, derived as
                                  // 0.85 * num_workers * worker_capacity.
    int num_partitions = 40;
    double selectivity = 0.5;     // fraction of records that produce an output
    int num_consumers = 20000;    // kept for fidelity; consumers are aggregated per task
    double base_processing_latency = 0.05;   // seconds per record, zero-queue floor
    double max_buffered_records = 50.0;      // per-task in-flight pipeline depth;
                                             // backlog beyond this waits in the topic
};

struct ClusterConfig {
    int num_workers = 8;
    double worker_capacity = 10000.0;  // records/s each
    double replay_rate = 10000.0;      // changelog records/s per worker
    double replacement_delay_min = 2.0;
    double replacement_delay_max = 10.0;
    double state_window = 20.0;  // seconds of state updates a task's changelog retains;
                                 // bounds the restore backlog after a failure
};

struct RebalanceConfig {
    double probing_interval = 600.0;     // seconds between follow-up rebalances
    int max_warmup_replicas = 2;         // cluster-wide cap on concurrent warm-ups
    double acceptable_recovery_lag = 10000.0;  // changelog records; readiness threshold
    int num_standby_replicas = 0;
    double commit_interval = 2.0;  // seconds between offset commits
};

struct FailurePlan {
    double first_failure_time = 720.0;
    double failure_period = 720.0;
    int kills_per_failure = 2;
    int num_failures = 3;
};

struct DetectorConfig {
    double warmup_end = 120.0;
    double recovery_threshold = 0.15;   // band around the reference mean
    double stable_window = 160.0;       // seconds the band must hold
    double failure_period = 720.0;      // spacing of periodic failure marks
    double detection_threshold = 0.15;  // moving-average deviation that flags a failure
    int detection_consecutive_samples = 3;
    int moving_window = 10;  // samples
};

struct ScenarioConfig {
    WorkloadConfig workload;
    ClusterConfig cluster;
    RebalanceConfig rebalance;
    FailurePlan failures;
    DetectorConfig detector;
    double run_duration = 3600.0;
    std::uint64_t seed = 1;
};

struct ValidationResult {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const ValidationResult& result);
    const std::vector<std::string>& violations() const { return violations_; }

  private:
    std::vector<std::string> violations_;
};

/// Checks every documented invariant; returns the complete list of violations.
ValidationResult validate(const ScenarioConfig& config);

/// Parses a flat `section.key = value` document. Unset keys take the documented
/// defaults. Throws ParseError on malformed input and ValidationError when the
/// resulting config violates an invariant.
ScenarioConfig load_scenario(const std::string& text);

/// Applies a single `section.key = value`. Shared by the parser and sweeps.
/// Throws ParseError (line 0) on unknown key or bad value.
void apply_key(ScenarioConfig& config, const std::string& key, const std::string& value);

/// Canonical key/value rendering; load_scenario(serialize(c)) == c.
std::string serialize(const ScenarioConfig& config);

/// Named experiment setups: "default" (shipped framework settings) and
/// "tuned" (1-minute probing interval, warm-up cap equal to the worker count).
ScenarioConfig builtin_scenario(const std::string& name);

/// One line per key: `key = value  # comment` — embedded in --help output.
std::string scenario_schema_doc();

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace streamsim

#endif
