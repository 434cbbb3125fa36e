#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <actlab/analysis.hpp>
#include <actlab/enumeration.hpp>
#include <actlab/io.hpp>
#include <actlab/sweep.hpp>
#include <actlab/verifiers.hpp>

using namespace actlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// Exit codes. Validation errors map to validation_base + ErrorKind.
constexpr int exit_ok = 0;
constexpr int exit_conclusion_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_file_not_found = 3;
constexpr int exit_parse_error = 4;
constexpr int exit_budget_exceeded = 5;
constexpr int exit_nonvacuous_shortfall = 6;
constexpr int exit_validation_base = 10;

struct OutputOptions {
    std::string path;
    bool pretty = false;
};

std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

std::string render_analysis(const json & j)
{
    std::ostringstream out;
    for (auto & [section, body] : j.items()) {
        if (! body.is_object())
            continue;
        out << section << ":\n";
        for (auto & [key, value] : body.items())
            out << "  " << pad(key, 26) << value.dump() << '\n';
    }
    return out.str();
}

std::string render_verdicts(const json & verdicts)
{
    std::ostringstream out;
    out << pad("statement", 28) << pad("hypotheses", 16) << "conclusion\n";
    for (auto & v : verdicts) {
        out << pad(v["statement"], 28) << pad(v["hypotheses"], 16) << v["conclusion"].get<std::string>();
        if (v.contains("failed_hypothesis"))
            out << "  (" << v["failed_hypothesis"].get<std::string>() << ")";
        out << '\n';
    }
    return out.str();
}

std::string render_sweep(const json & j)
{
    std::ostringstream out;
    out << "monoids " << j["instances"]["monoids"] << ", acts " << j["instances"]["acts"] << '\n';
    out << pad("statement", 28) << pad("PASS", 8) << pad("FAIL", 8) << pad("VACUOUS", 10) << "NOT_APPLICABLE\n";
    for (auto & [name, t] : j["tallies"].items())
        out << pad(name, 28) << pad(t["PASS"].dump(), 8) << pad(t["FAIL"].dump(), 8) << pad(t["VACUOUS"].dump(), 10)
            << t["NOT_APPLICABLE"].dump() << '\n';
    out << "counterexamples " << j["counterexamples"].size() << '\n';
    if (j["budget_exceeded"].get<bool>())
        out << "budget exceeded: report is partial\n";
    return out.str();
}

void emit(const json & j, const OutputOptions & opts, std::string (*pretty)(const json &))
{
    if (! opts.path.empty())
        write_json_file(opts.path, j);
    if (opts.pretty)
        std::cout << pretty(j);
    else if (opts.path.empty())
        std::cout << j.dump(2) << '\n';
}

std::vector<Statement> parse_statements(const std::string & names)
{
    std::vector<Statement> out;
    std::stringstream ss(names);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty())
            continue;
        if (name == "all")
            return {std::begin(all_statements), std::end(all_statements)};
        auto s = statement_from_string(name);
        if (! s)
            throw CLI::ValidationError("--statement", "unknown statement '" + name + "'");
        out.push_back(*s);
    }
    if (out.empty())
        throw CLI::ValidationError("--statement", "no statements given");
    return out;
}

int cmd_analyze(const std::string & monoid_file, const std::string & act_file, const OutputOptions & opts)
{
    auto S = load_monoid(monoid_file);
    std::optional<FiniteAct> A;
    if (! act_file.empty())
        A = load_act(act_file);
    emit(to_json(analyze(S, A ? &*A : nullptr)), opts, render_analysis);
    return exit_ok;
}

int cmd_verify(const std::string & statement_names, const std::string & monoid_file,
    const std::string & act_file, std::size_t max_act_size, const OutputOptions & opts)
{
    auto S = std::make_shared<const FiniteMonoid>(load_monoid(monoid_file));
    std::optional<FiniteAct> A;
    if (! act_file.empty()) {
        auto loaded = load_act(act_file);
        A = with_host(loaded, S);
    }
    auto verdicts = verify_all(S, A ? &*A : nullptr, parse_statements(statement_names), max_act_size);
    json j = json::array();
    bool failed = false;
    for (auto & v : verdicts) {
        j.push_back(to_json(v));
        failed = failed || v.conclusion == Status::fail;
    }
    emit(j, opts, render_verdicts);
    return failed ? exit_conclusion_failed : exit_ok;
}

int cmd_sweep(SweepConfig config, const std::string & statement_names, bool timing,
    const OutputOptions & opts)
{
    config.statements = parse_statements(statement_names);
    auto report = run_sweep(config);
    std::cerr << "sweep: " << report.monoids << " monoids, " << report.acts << " acts, " << std::fixed
              << std::setprecision(2) << report.wall_seconds << " s\n";
    emit(to_json(report, timing), opts, render_sweep);
    if (! report.counterexamples.empty())
        return exit_conclusion_failed;
    if (report.budget_exceeded)
        return exit_budget_exceeded;
    if (! report.nonvacuous_shortfall.empty())
        return exit_nonvacuous_shortfall;
    return exit_ok;
}

int cmd_enumerate(const std::string & kind, std::size_t order, std::size_t size, const std::string & monoid_file,
    const std::string & output_dir)
{
    std::vector<std::pair<std::string, json>> items;
    if (kind == "monoids") {
        if (order == 0)
            throw CLI::ValidationError("--order", "required for monoids");
        for (auto & S : enumerate_monoids(order))
            items.emplace_back(S->name(), to_json(*S));
    }
    else {
        if (size == 0)
            throw CLI::ValidationError("--size", "required for acts");
        std::vector<MonoidPtr> hosts;
        if (! monoid_file.empty())
            hosts.push_back(std::make_shared<const FiniteMonoid>(load_monoid(monoid_file)));
        else if (order != 0)
            hosts = enumerate_monoids(order);
        else
            throw CLI::ValidationError("--monoid", "acts need --monoid or --order");
        for (std::size_t h = 0; h < hosts.size(); ++h) {
            std::string prefix = hosts[h]->name().empty() ? "S" + std::to_string(h) : hosts[h]->name();
            for (auto & A : enumerate_acts(hosts[h], size))
                items.emplace_back(prefix + "_" + A.name(), to_json(A));
        }
    }

    if (output_dir.empty()) {
        json all = json::array();
        for (auto & [name, j] : items)
            all.push_back(j);
        std::cout << all.dump(2) << '\n';
    }
    else {
        fs::create_directories(output_dir);
        for (auto & [name, j] : items)
            write_json_file(fs::path(output_dir) / (name + ".json"), j);
        std::cerr << "wrote " << items.size() << " files to " << output_dir << '\n';
    }
    return exit_ok;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Finite monoids, their acts, and exhaustive checks of Nakayama-type statements"};
    app.require_subcommand(1);

    OutputOptions out;
    auto add_output = [&](CLI::App * cmd, const char * flag) {
        cmd->add_option(flag, out.path, "Write the JSON result to this file");
        cmd->add_flag("--pretty", out.pretty, "Human-readable table instead of JSON on stdout");
    };

    std::string monoid_file, act_file;

    auto * analyze = app.add_subcommand("analyze", "Report ideals, zeros, subacts and generators");
    analyze->add_option("monoid", monoid_file, "Monoid JSON file")->required();
    analyze->add_option("act", act_file, "Act JSON file");
    add_output(analyze, "--output");

    std::string statements = "all";
    std::size_t verify_max_act = 4;
    auto * verify = app.add_subcommand("verify", "Run statement verifiers on one monoid (and act)");
    verify->add_option("--statement", statements, "Comma-separated statement ids or 'all'");
    verify->add_option("monoid", monoid_file, "Monoid JSON file")->required();
    verify->add_option("act", act_file, "Act JSON file");
    verify->add_option("--max-act-size", verify_max_act, "Act size bound for projective_free")
        ->check(CLI::PositiveNumber);
    add_output(verify, "--report");

    SweepConfig config;
    config.workers = 1;
    std::string sweep_statements = "all";
    bool no_timing = false;
    std::size_t nonvacuous = 0, budget = 0;
    double time_budget = 0;
    auto * sweep = app.add_subcommand("sweep", "Exhaustive sweep over enumerated monoids and acts");
    sweep->add_option("--max-monoid-order", config.max_monoid_order)->envname("ACTLAB_MAX_MONOID_ORDER")
        ->check(CLI::Range(1, 6));
    sweep->add_option("--max-act-size", config.max_act_size)->envname("ACTLAB_MAX_ACT_SIZE")->check(CLI::Range(1, 8));
    sweep->add_option("--statements", sweep_statements, "Comma-separated statement ids or 'all'");
    sweep->add_option("--workers", config.workers)->envname("ACTLAB_WORKERS")->check(CLI::PositiveNumber);
    sweep->add_option("--require-nonvacuous", nonvacuous, "Minimum hypotheses-PASS count per statement");
    sweep->add_option("--instance-budget", budget, "Stop after this many verdicts");
    sweep->add_option("--time-budget", time_budget, "Stop starting new monoids after this many seconds");
    sweep->add_flag("--no-timing", no_timing, "Omit wall time so reruns are byte-identical");
    add_output(sweep, "--report");

    std::string kind, output_dir;
    std::size_t order = 0, size = 0;
    auto * enumerate = app.add_subcommand("enumerate", "Write every monoid or act up to isomorphism");
    enumerate->add_option("kind", kind)->required()->check(CLI::IsMember({"monoids", "acts"}));
    enumerate->add_option("--order", order, "Monoid order")->check(CLI::Range(1, 6));
    enumerate->add_option("--size", size, "Act size")->check(CLI::Range(1, 8));
    enumerate->add_option("--monoid", monoid_file, "Enumerate acts over this monoid");
    enumerate->add_option("--output", output_dir, "Directory for one JSON file per structure");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*analyze)
            return cmd_analyze(monoid_file, act_file, out);
        if (*verify)
            return cmd_verify(statements, monoid_file, act_file, verify_max_act, out);
        if (*sweep) {
            if (nonvacuous > 0)
                config.require_nonvacuous_count = nonvacuous;
            if (budget > 0)
                config.instance_budget = budget;
            if (time_budget > 0)
                config.time_budget_seconds = time_budget;
            return cmd_sweep(config, sweep_statements, ! no_timing, out);
        }
        return cmd_enumerate(kind, order, size, monoid_file, output_dir);
    }
    catch (const CLI::ValidationError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const FileNotFound & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_file_not_found;
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_parse_error;
    }
    catch (const Error & e) {
        std::cerr << "validation error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_validation_base + static_cast<int>(e.kind());
    }
}
