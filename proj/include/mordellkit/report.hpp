#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mordellkit/identities.hpp"

namespace mordellkit::report {

struct SweepRange {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;
    bool log = false;
};

struct RunConfig {
    std::vector<std::string> ids;  // resolved identity ids, "all" already expanded
    identities::Params params;     // fixed parameter assignments
    std::vector<SweepRange> sweeps;
    double tol = 0.0;  // 0 -> per-identity default
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    std::uint64_t seed = 0;
};

struct Summary {
    int pass_count = 0;
    int fail_count = 0;          // asserted outcomes only
    int inconclusive_count = 0;  // asserted outcomes only
    int exploratory_count = 0;   // asserted:false outcomes that did not pass
    double max_rel_diff = 0.0;   // over asserted outcomes
};

struct ReportDocument {
    std::string tool_version;
    std::string timestamp;
    RunConfig config;
    std::vector<identities::VerificationOutcome> outcomes;
    Summary summary;
};

// Validates the config against the registry (throws DomainError /
// ConstraintViolation on unknown ids, unknown or out-of-domain parameters,
// malformed sweeps) without evaluating anything.
void validate(const RunConfig& config);

// Expands sweep grids, fans the (identity, point) tasks over config.jobs
// threads and assembles outcomes in deterministic order.
ReportDocument run(const RunConfig& config);

std::string to_json_text(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

// Exit status per the contract: 0 all pass, 1 any asserted failure or
// inconclusive outcome.
int exit_status(const ReportDocument& doc);

std::string tool_version();

}  // namespace mordellkit::report
