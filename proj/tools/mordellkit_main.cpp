// mordellkit CLI: list the identity registry, verify identities at chosen
// parameter points, or sweep a parameter range and report residuals.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mordellkit/identities.hpp"
#include "mordellkit/report.hpp"

namespace {

namespace mk = mordellkit;

int default_jobs() {
    if (const char* env = std::getenv("MORDELLKIT_JOBS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

// "key=value" -> params entry
void parse_param(const std::string& text, mk::identities::Params& params) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw mk::DomainError("--param expects key=value, got '" + text + "'");
    std::size_t used = 0;
    double value = std::stod(text.substr(eq + 1), &used);
    if (used != text.size() - eq - 1)
        throw mk::DomainError("--param value is not a number in '" + text + "'");
    params[text.substr(0, eq)] = value;
}

// "name:start:stop:count[:log]"
mk::report::SweepRange parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto colon = text.find(':', pos);
        if (colon == std::string::npos) {
            parts.push_back(text.substr(pos));
            break;
        }
        parts.push_back(text.substr(pos, colon - pos));
        pos = colon + 1;
    }
    if (parts.size() < 4 || parts.size() > 5)
        throw mk::DomainError("--range expects name:start:stop:count[:log]");
    mk::report::SweepRange r;
    r.name = parts[0];
    r.start = std::stod(parts[1]);
    r.stop = std::stod(parts[2]);
    r.count = std::stoi(parts[3]);
    if (parts.size() == 5) {
        if (parts[4] != "log" && parts[4] != "linear")
            throw mk::DomainError("--range spacing must be 'log' or 'linear'");
        r.log = parts[4] == "log";
    }
    return r;
}

std::vector<std::string> expand_ids(const std::vector<std::string>& ids) {
    if (ids.size() == 1 && ids[0] == "all") {
        std::vector<std::string> out;
        for (const auto& rec : mk::identities::registry()) out.push_back(rec.id);
        return out;
    }
    return ids;
}

int emit(const mk::report::ReportDocument& doc) {
    std::string text = doc.config.format == "json" ? mk::report::to_json_text(doc)
                                                   : mk::report::to_text(doc);
    if (doc.config.out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream out(doc.config.out_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", doc.config.out_path.c_str());
            return 2;
        }
        out << text;
    }
    return mk::report::exit_status(doc);
}

int cmd_list() {
    std::printf("%-18s %-28s %-18s %s\n", "id", "params", "constraint", "description");
    for (const auto& rec : mk::identities::registry()) {
        std::string params;
        for (const auto& p : rec.params) {
            params += p.name;
            if (p.derived) params += "*";
            params += " ";
        }
        if (params.empty()) params = "-";
        std::printf("%-18s %-28s %-18s %s\n", rec.id.c_str(), params.c_str(),
                    rec.constraint ? rec.constraint->display.c_str() : "-",
                    rec.description.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mordellkit: numerical verification of hyperbolic self-reciprocal Fourier "
                 "transforms, Mordell integral factorizations and lattice-sum identities"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list the identity registry");

    std::vector<std::string> ids;
    std::vector<std::string> param_args;
    std::vector<std::string> range_args;
    double tol = 0.0;
    std::string out_path;
    std::string format = "text";
    int jobs = default_jobs();
    std::uint64_t seed = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--param", param_args, "fixed parameter assignment key=value");
        cmd->add_option("--tol", tol, "tolerance override (default: per-identity)");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
        cmd->add_option("--format", format, "report format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--jobs", jobs, "parallel evaluations (default: MORDELLKIT_JOBS or 1)");
        cmd->add_option("--seed", seed, "seed echoed into the report for sampled grids");
    };

    auto* verify_cmd =
        app.add_subcommand("verify", "evaluate both sides of the selected identities");
    verify_cmd->add_option("ids", ids, "identity ids, or 'all'")->required();
    add_common(verify_cmd);

    auto* sweep_cmd = app.add_subcommand("sweep", "verify one identity over a parameter grid");
    std::string sweep_id;
    sweep_cmd->add_option("id", sweep_id, "identity id")->required();
    sweep_cmd->add_option("--range", range_args, "sweep range name:start:stop:count[:log]")
        ->required();
    add_common(sweep_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (list_cmd->parsed()) return cmd_list();

        mk::report::RunConfig config;
        config.tol = tol;
        config.format = format;
        config.out_path = out_path;
        config.jobs = jobs;
        config.seed = seed;
        for (const auto& p : param_args) parse_param(p, config.params);

        if (verify_cmd->parsed()) {
            config.ids = expand_ids(ids);
        } else {
            config.ids = {sweep_id};
            for (const auto& r : range_args) config.sweeps.push_back(parse_range(r));
        }
        mk::report::validate(config);
        return emit(mk::report::run(config));
    } catch (const mk::DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const mk::ConstraintViolation& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
