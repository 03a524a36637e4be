// Copyright 2026 the streamsim authors
// SPDX-License-Identifier: Apache-2.0

#include "streamsim/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace streamsim {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, int line) {
    const std::string t = trim(v);
    double out = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("not a number: '" + t + "'", line);
    return out;
}

long long parse_int(const std::string& v, int line) {
    const std::string t = trim(v);
    long long out = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("not an integer: '" + t + "'", line);
    return out;
}

std::string render(double v) {
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Field {
    const char* key;
    const char* comment;
    std::function<void(ScenarioConfig&, const std::string&, int)> set;
    std::function<std::string(const ScenarioConfig&)> get;
};

#define NUM_FIELD(key, member, comment)                                                     \
    Field {                                                                                 \
        key, comment,                                                                       \
            [](ScenarioConfig& c, const std::string& v, int ln) { c.member = parse_double(v, ln); }, \
            [](const ScenarioConfig& c) { return render(c.member); }                        \
    }
#define INT_FIELD(key, member, comment)                                                     \
    Field {                                                                                 \
        key, comment,                                                                       \
            [](ScenarioConfig& c, const std::string& v, int ln) {                           \
                c.member = static_cast<int>(parse_int(v, ln));                              \
            },                                                                              \
            [](const ScenarioConfig& c) { return std::to_string(c.member); }                \
    }

const std::vector<Field>& schema() {
    static const std::vector<Field> fields = {
        NUM_FIELD("workload.input_rate_rps", workload.input_rate,
                  "aggregate input records/s; default 0.85 * cluster capacity"),
        INT_FIELD("workload.num_partitions", workload.num_partitions, "input/output partitions"),
        NUM_FIELD("workload.selectivity", workload.selectivity, "outputs per input record, in [0,1]"),
        INT_FIELD("workload.num_consumers", workload.num_consumers, "logical consumers (aggregated)"),
        NUM_FIELD("workload.base_processing_latency_s", workload.base_processing_latency,
                  "per-record latency floor"),
        NUM_FIELD("workload.max_buffered_records_per_task", workload.max_buffered_records,
                  "in-flight pipeline depth per task"),
        INT_FIELD("cluster.num_workers", cluster.num_workers, "worker instances"),
        NUM_FIELD("cluster.worker_capacity_rps", cluster.worker_capacity, "records/s per worker"),
        NUM_FIELD("cluster.replay_rate_rps", cluster.replay_rate, "changelog replay records/s per worker"),
        NUM_FIELD("cluster.replacement_delay_min_s", cluster.replacement_delay_min,
                  "pod replacement delay lower bound"),
        NUM_FIELD("cluster.replacement_delay_max_s", cluster.replacement_delay_max,
                  "pod replacement delay upper bound"),
        NUM_FIELD("cluster.state_window_s", cluster.state_window,
                  "seconds of state updates kept in a task changelog"),
        NUM_FIELD("rebalance.probing_interval_s", rebalance.probing_interval,
                  "wait between follow-up rebalances"),
        INT_FIELD("rebalance.max_warmup_replicas", rebalance.max_warmup_replicas,
                  "cluster-wide warm-up replica cap"),
        NUM_FIELD("rebalance.acceptable_recovery_lag", rebalance.acceptable_recovery_lag,
                  "changelog records; warm-up promotion threshold"),
        INT_FIELD("rebalance.num_standby_replicas", rebalance.num_standby_replicas,
                  "standby replicas per task"),
        NUM_FIELD("rebalance.commit_interval_s", rebalance.commit_interval, "offset commit period"),
        NUM_FIELD("failures.first_failure_time_s", failures.first_failure_time, "first kill"),
        NUM_FIELD("failures.failure_period_s", failures.failure_period, "kill spacing"),
        INT_FIELD("failures.kills_per_failure", failures.kills_per_failure, "workers killed per event"),
        INT_FIELD("failures.num_failures", failures.num_failures, "kill events per run"),
        NUM_FIELD("detector.warmup_end_s", detector.warmup_end, "start of the reference window"),
        NUM_FIELD("detector.recovery_threshold", detector.recovery_threshold,
                  "band around the reference mean"),
        NUM_FIELD("detector.stable_window_s", detector.stable_window, "band hold time for recovery"),
        NUM_FIELD("detector.failure_period_s", detector.failure_period, "periodic failure marks"),
        NUM_FIELD("detector.detection_threshold", detector.detection_threshold,
                  "moving-average deviation flagging a failure"),
        INT_FIELD("detector.detection_consecutive_samples", detector.detection_consecutive_samples,
                  "debounce for failure detection"),
        INT_FIELD("detector.moving_window_samples", detector.moving_window, "moving-average width"),
        NUM_FIELD("run.duration_s", run_duration, "simulated seconds"),
        Field{"run.seed", "deterministic RNG seed",
              [](ScenarioConfig& c, const std::string& v, int ln) {
                  c.seed = static_cast<std::uint64_t>(parse_int(v, ln));
              },
              [](const ScenarioConfig& c) { return std::to_string(c.seed); }},
    };
    return fields;
}

#undef NUM_FIELD
#undef INT_FIELD

const Field* find_field(const std::string& key) {
    for (const auto& f : schema())
        if (key == f.key) return &f;
    return nullptr;
}

}  // namespace

ValidationError::ValidationError(const ValidationResult& result)
    : std::runtime_error("invalid scenario: " + join(result.violations, "; ")),
      violations_(result.violations) {}

ValidationResult validate(const ScenarioConfig& c) {
    ValidationResult r;
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) r.violations.push_back(what);
    };
    require(c.workload.num_partitions >= 1, "num_partitions must be >= 1");
    require(c.workload.selectivity >= 0.0 && c.workload.selectivity <= 1.0,
            "selectivity out of range [0,1]");
    require(c.workload.input_rate > 0.0, "input_rate must be > 0");
    require(c.workload.base_processing_latency >= 0.0, "base_processing_latency must be >= 0");
    require(c.workload.max_buffered_records > 0.0, "max_buffered_records_per_task must be > 0");
    require(c.cluster.num_workers >= 1, "num_workers must be >= 1");
    require(c.cluster.worker_capacity > 0.0, "worker_capacity must be > 0");
    require(c.cluster.replay_rate > 0.0, "replay_rate must be > 0");
    require(c.cluster.replacement_delay_min > 0.0 &&
                c.cluster.replacement_delay_min <= c.cluster.replacement_delay_max,
            "replacement delays must satisfy 0 < min <= max");
    require(c.cluster.state_window >= 0.0, "state_window must be >= 0");
    require(c.rebalance.probing_interval > 0.0, "probing_interval must be > 0");
    require(c.rebalance.max_warmup_replicas >= 1, "max_warmup_replicas must be >= 1");
    require(c.rebalance.num_standby_replicas >= 0, "num_standby_replicas must be >= 0");
    require(c.rebalance.acceptable_recovery_lag >= 0.0, "acceptable_recovery_lag must be >= 0");
    require(c.rebalance.commit_interval > 0.0, "commit_interval must be > 0");
    require(c.failures.kills_per_failure < c.cluster.num_workers,
            "kills_per_failure must be < num_workers");
    require(c.failures.kills_per_failure >= 0, "kills_per_failure must be >= 0");
    require(c.failures.num_failures >= 0, "num_failures must be >= 0");
    require(c.failures.failure_period > 0.0, "failure_period must be > 0");
    require(c.detector.recovery_threshold > 0.0 && c.detector.recovery_threshold < 1.0,
            "recovery_threshold out of range (0,1)");
    require(c.detector.stable_window > 0.0, "stable_window must be > 0");
    require(c.detector.detection_consecutive_samples >= 1,
            "detection_consecutive_samples must be >= 1");
    require(c.detector.moving_window >= 1, "moving_window must be >= 1");
    require(c.failures.first_failure_time > c.detector.warmup_end,
            "reference window empty: first_failure_time must exceed detector.warmup_end");
    require(c.run_duration >=
                c.failures.first_failure_time + c.failures.num_failures * c.failures.failure_period,
            "run_duration shorter than the failure plan");
    return r;
}

void apply_key(ScenarioConfig& config, const std::string& key, const std::string& value) {
    const Field* f = find_field(key);
    if (!f) throw ParseError("unknown key '" + key + "'", 0);
    f->set(config, value, 0);
}

ScenarioConfig load_scenario(const std::string& text) {
    ScenarioConfig config;
    bool input_rate_set = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no);
        const Field* f = find_field(key);
        if (!f) throw ParseError("unknown key '" + key + "'", line_no);
        f->set(config, value, line_no);
        if (key == "workload.input_rate_rps") input_rate_set = true;
    }

    if (!input_rate_set)
        config.workload.input_rate =
            0.85 * config.cluster.num_workers * config.cluster.worker_capacity;

    ValidationResult result = validate(config);
    if (!result.ok()) throw ValidationError(result);
    return config;
}

std::string serialize(const ScenarioConfig& config) {
    std::string out;
    for (const auto& f : schema()) {
        out += f.key;
        out += " = ";
        out += f.get(config);
        out += '\n';
    }
    return out;
}

ScenarioConfig builtin_scenario(const std::string& name) {
    ScenarioConfig config;  // the shipped defaults are the "default" scenario
    if (name == "default") return config;
    if (name == "tuned") {
        config.rebalance.probing_interval = 60.0;
        config.rebalance.max_warmup_replicas = 8;
        return config;
    }
    throw std::invalid_argument("unknown builtin scenario '" + name +
                                "' (expected 'default' or 'tuned')");
}

std::string scenario_schema_doc() {
    std::string out;
    ScenarioConfig defaults;
    for (const auto& f : schema()) {
        out += f.key;
        out += " = ";
        out += f.get(defaults);
        out += "  # ";
        out += f.comment;
        out += '\n';
    }
    return out;
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
    return serialize(a) == serialize(b);
}

}  // namespace streamsim
