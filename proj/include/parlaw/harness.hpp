#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "parlaw/io.hpp"

namespace parlaw {

// Grid configuration for a verification run. Each suite runs `trials`
// trials per (dim, count) cell; count is the node/term count n or m of the
// suite (ignored by suites with a fixed shape).
struct TrialConfig {
    std::vector<std::string> suites{"all"};
    std::vector<int> dims{1, 2, 4, 8};
    std::vector<int> counts{1, 2, 3, 6};
    int trials = 250;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    std::vector<double> p_grid{0.5, 1.0, 1.5, 2.0, 3.0, 4.0};
};

struct SuiteInfo {
    const char* id;
    const char* summary;
};

// The 16 suite ids in their fixed catalog order.
const std::vector<SuiteInfo>& suite_catalog();

// Expands "all" and rejects unknown ids with a message listing known ones.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

// One trial's verdict. metric is normalized so that pass <=> metric <= tol:
// identity suites report the scale-free residual, gap suites the worst of
// the PSD violation and the consistency residual, inequality suites the
// worst sign violation across their (g, norm) or p sweep.
struct TrialOutcome {
    double metric = 0.0;
    bool pass = false;
    std::string detail;
};

// Deterministic instance generation: every random draw comes from a
// substream keyed by (seed, trial, "<suite>/<dim>x<count>/<role>").
Instance gen_instance(const std::string& suite, int dim, int count, std::uint64_t seed,
                      int trial);

TrialOutcome evaluate_instance(const std::string& suite, const Instance& inst, double tol,
                               const std::vector<double>& p_grid);

struct FailureRecord {
    int dim = 0;
    int count = 0;
    int trial = 0;
    double metric = 0.0;
    std::string detail;
    Instance instance;
};

struct SuiteResult {
    std::string suite;
    long trials_run = 0;
    long failures = 0;
    double worst = -std::numeric_limits<double>::infinity();
    std::string worst_detail;
    std::vector<FailureRecord> failing;  // first few failures, serialized for replay
};

struct SuiteReport {
    TrialConfig config;
    std::vector<SuiteResult> suites;
    std::string started_at;  // ISO 8601 UTC; excluded from determinism
    double wall_ms = 0.0;    // likewise
    bool all_pass() const;
};

// Runs every requested suite over the full grid. Report content other than
// started_at / wall_ms is a pure function of the config.
SuiteReport run_suite(const TrialConfig& cfg);

json config_to_json(const TrialConfig& cfg);
// Fields present in j override those of base; everything else is kept.
TrialConfig config_from_json(const json& j, TrialConfig base = {});

json failure_to_replay_json(const std::string& suite, std::uint64_t seed,
                            const FailureRecord& f);
json report_to_json(const SuiteReport& report);
void render_text(const SuiteReport& report, std::ostream& os);

}  // namespace parlaw
