#include "mordellkit/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mordellkit::report {

namespace {

using nlohmann::json;

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct Task {
    std::string id;
    identities::Params params;
};

std::vector<double> expand_range(const SweepRange& r) {
    std::vector<double> out;
    out.reserve(r.count);
    if (r.count == 1) {
        out.push_back(r.start);
        return out;
    }
    for (int i = 0; i < r.count; ++i) {
        double f = static_cast<double>(i) / (r.count - 1);
        if (r.log) {
            out.push_back(r.start * std::pow(r.stop / r.start, f));
        } else {
            out.push_back(r.start + f * (r.stop - r.start));
        }
    }
    return out;
}

void validate_sweeps(const identities::IdentityRecord& rec,
                     const std::vector<SweepRange>& sweeps) {
    for (const auto& s : sweeps) {
        if (s.count < 1) throw DomainError("sweep count must be >= 1");
        if (s.log && !(s.start > 0.0 && s.stop > 0.0))
            throw DomainError("log sweeps need positive endpoints");
        const identities::ParamSpec* spec = nullptr;
        for (const auto& p : rec.params)
            if (p.name == s.name) spec = &p;
        if (!spec)
            throw DomainError("identity " + rec.id + " has no parameter named '" + s.name + "'");
        if (spec->derived)
            throw DomainError("parameter '" + s.name +
                              "' is bound by the constraint and cannot be swept");
    }
}

std::vector<Task> expand_tasks(const RunConfig& config) {
    std::vector<Task> tasks;
    if (config.sweeps.empty()) {
        for (const auto& id : config.ids) tasks.push_back({id, config.params});
        return tasks;
    }
    const auto& id = config.ids.front();
    std::vector<std::vector<double>> grids;
    for (const auto& s : config.sweeps) grids.push_back(expand_range(s));
    std::vector<std::size_t> idx(grids.size(), 0);
    while (true) {
        identities::Params p = config.params;
        for (std::size_t k = 0; k < grids.size(); ++k)
            p[config.sweeps[k].name] = grids[k][idx[k]];
        tasks.push_back({id, p});
        std::size_t k = grids.size();
        while (k > 0) {
            --k;
            if (++idx[k] < grids[k].size()) break;
            idx[k] = 0;
            if (k == 0) return tasks;
        }
        if (grids.empty()) break;
    }
    return tasks;
}

json params_to_json(const identities::Params& p) {
    json j = json::object();
    for (const auto& [k, v] : p) j[k] = v;
    return j;
}

json outcome_to_json(const identities::VerificationOutcome& o) {
    return json{{"identity_id", o.identity_id},
                {"params", params_to_json(o.params)},
                {"lhs", o.lhs},
                {"rhs", o.rhs},
                {"lhs_err", o.lhs_err},
                {"rhs_err", o.rhs_err},
                {"abs_diff", o.abs_diff},
                {"rel_diff", o.rel_diff},
                {"tol", o.tol},
                {"pass", o.pass},
                {"asserted", o.asserted},
                {"inconclusive", o.inconclusive},
                {"message", o.message},
                {"evaluations", o.evaluations},
                {"elapsed_seconds", o.elapsed_seconds}};
}

}  // namespace

std::string tool_version() { return "0.1.0"; }

void validate(const RunConfig& config) {
    if (config.ids.empty()) throw DomainError("no identities selected");
    if (config.tol < 0.0 || !std::isfinite(config.tol))
        throw DomainError("tolerance must be positive");
    if (config.jobs < 1) throw DomainError("jobs must be >= 1");
    if (config.format != "text" && config.format != "json")
        throw DomainError("format must be text or json");
    if (!config.sweeps.empty() && config.ids.size() != 1)
        throw DomainError("sweeps take exactly one identity");
    for (const auto& id : config.ids) {
        const auto* rec = identities::find_identity(id);
        if (!rec) throw DomainError("unknown identity id: " + id);
        validate_sweeps(*rec, config.sweeps);
        // reject unknown/ill-domained fixed parameters before any evaluation;
        // swept parameters are validated per point at run time
        identities::Params probe = config.params;
        for (const auto& s : config.sweeps) probe[s.name] = s.start;
        identities::resolve_params(*rec, probe);
    }
}

ReportDocument run(const RunConfig& config) {
    validate(config);
    ReportDocument doc;
    doc.tool_version = tool_version();
    doc.timestamp = iso_timestamp();
    doc.config = config;

    std::vector<Task> tasks = expand_tasks(config);
    doc.outcomes.resize(tasks.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            doc.outcomes[i] = identities::verify(tasks[i].id, tasks[i].params, config.tol);
        }
    };
    int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& o : doc.outcomes) {
        if (o.pass) {
            ++doc.summary.pass_count;
        } else if (!o.asserted) {
            ++doc.summary.exploratory_count;
        } else if (o.inconclusive) {
            ++doc.summary.inconclusive_count;
        } else {
            ++doc.summary.fail_count;
        }
        if (o.asserted && !o.inconclusive)
            doc.summary.max_rel_diff = std::max(doc.summary.max_rel_diff, o.rel_diff);
    }
    return doc;
}

int exit_status(const ReportDocument& doc) {
    return (doc.summary.fail_count > 0 || doc.summary.inconclusive_count > 0) ? 1 : 0;
}

std::string to_json_text(const ReportDocument& doc) {
    json sweeps = json::array();
    for (const auto& s : doc.config.sweeps)
        sweeps.push_back(json{{"name", s.name},
                              {"start", s.start},
                              {"stop", s.stop},
                              {"count", s.count},
                              {"log", s.log}});
    json outcomes = json::array();
    for (const auto& o : doc.outcomes) outcomes.push_back(outcome_to_json(o));
    json j{{"tool_version", doc.tool_version},
           {"timestamp", doc.timestamp},
           {"config",
            {{"ids", doc.config.ids},
             {"params", params_to_json(doc.config.params)},
             {"sweeps", sweeps},
             {"tol", doc.config.tol},
             {"format", doc.config.format},
             {"out_path", doc.config.out_path},
             {"jobs", doc.config.jobs},
             {"seed", doc.config.seed}}},
           {"outcomes", outcomes},
           {"summary",
            {{"pass_count", doc.summary.pass_count},
             {"fail_count", doc.summary.fail_count},
             {"inconclusive_count", doc.summary.inconclusive_count},
             {"exploratory_count", doc.summary.exploratory_count},
             {"max_rel_diff", doc.summary.max_rel_diff}}}};
    return j.dump(2) + "\n";
}

std::string to_text(const ReportDocument& doc) {
    std::ostringstream os;
    char line[512];
    std::snprintf(line, sizeof(line), "%-18s %-34s %14s %14s %10s %10s %s\n", "identity",
                  "params", "lhs", "rhs", "abs_diff", "rel_diff", "status");
    os << line;
    for (const auto& o : doc.outcomes) {
        std::string params;
        for (const auto& [k, v] : o.params) {
            char kv[64];
            std::snprintf(kv, sizeof(kv), "%s=%.6g ", k.c_str(), v);
            params += kv;
        }
        if (!params.empty()) params.pop_back();
        const char* status = o.inconclusive ? "INCONCLUSIVE"
                             : o.pass       ? "PASS"
                             : o.asserted   ? "FAIL"
                                            : "INFO";
        std::snprintf(line, sizeof(line), "%-18s %-34s %14.8g %14.8g %10.2e %10.2e %s\n",
                      o.identity_id.c_str(), params.c_str(), o.lhs, o.rhs, o.abs_diff,
                      o.rel_diff, status);
        os << line;
    }
    char tail[256];
    std::snprintf(tail, sizeof(tail),
                  "summary: %d passed, %d failed, %d inconclusive, %d exploratory, "
                  "max rel diff %.3e\n",
                  doc.summary.pass_count, doc.summary.fail_count,
                  doc.summary.inconclusive_count, doc.summary.exploratory_count,
                  doc.summary.max_rel_diff);
    os << tail;
    return os.str();
}

}  // namespace mordellkit::report
