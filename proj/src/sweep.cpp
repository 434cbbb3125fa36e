#include <actlab/sweep.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <actlab/enumeration.hpp>
#include <actlab/verifiers.hpp>

namespace actlab {

using std::size_t;
using std::vector;

void SweepConfig::validate() const
{
    if (max_monoid_order < 1 || max_act_size < 1)
        throw std::invalid_argument("sweep bounds must be at least 1");
    if (statements.empty())
        throw std::invalid_argument("sweep needs at least one statement");
}

void Tally::add(const Verdict & v)
{
    if (v.conclusion == Status::fail)
        ++fail;
    else if (v.hypotheses == Status::not_applicable)
        ++not_applicable;
    else if (v.hypotheses == Status::fail)
        ++vacuous;
    else
        ++pass;
}

Tally & Tally::operator+=(const Tally & o)
{
    pass += o.pass;
    fail += o.fail;
    vacuous += o.vacuous;
    not_applicable += o.not_applicable;
    return *this;
}

void SweepReport::check_invariants() const
{
    size_t fails = 0;
    for (auto & [s, t] : tallies)
        fails += t.fail;
    if (fails != counterexamples.size())
        throw std::logic_error("FAIL tallies and counterexample list disagree");
}

namespace {

    struct MonoidResult {
        std::map<Statement, Tally> tallies;
        vector<Verdict> counterexamples;
        size_t acts = 0;
        size_t verdicts = 0;
    };

    // `stop` lets search_counterexample end at the first failure.
    template <class OnVerdict>
    MonoidResult sweep_monoid(const MonoidPtr & S, const SweepConfig & config, OnVerdict && stop)
    {
        MonoidResult out;
        MonoidFacts facts(*S);
        vector<FiniteAct> acts;
        for (size_t m = 1; m <= config.max_act_size; ++m)
            for (auto & A : enumerate_acts(S, m))
                acts.push_back(std::move(A));
        out.acts = acts.size();

        bool halted = false;
        auto record = [&](Verdict v) {
            check_invariants(v);
            out.tallies[v.statement].add(v);
            ++out.verdicts;
            if (v.conclusion == Status::fail) {
                halted = stop(v);
                out.counterexamples.push_back(std::move(v));
            }
        };

        for (auto s : config.statements) {
            if (halted)
                break;
            switch (scope_of(s)) {
            case StatementScope::monoid:
                if (s == Statement::unit_symmetry)
                    record(verify_unit_symmetry(*S, facts));
                else if (s == Statement::krull_monoid)
                    record(verify_krull_monoid(S, facts));
                else
                    record(verify_projective_free(S, facts, acts));
                break;
            case StatementScope::act:
                for (auto & A : acts) {
                    if (halted)
                        break;
                    record(verify_act_statement(s, A, facts));
                }
                break;
            case StatementScope::act_and_ideal:
                for (auto & A : acts)
                    for (auto & I : facts.right_ideals) {
                        if (halted)
                            break;
                        record(verify_krull_intersection(A, I));
                    }
                break;
            }
        }
        return out;
    }

    vector<MonoidPtr> all_monoids(size_t max_order)
    {
        vector<MonoidPtr> out;
        for (size_t n = 1; n <= max_order; ++n)
            for (auto & S : enumerate_monoids(n))
                out.push_back(std::move(S));
        return out;
    }

} // namespace

SweepReport run_sweep(const SweepConfig & config)
{
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

    auto monoids = all_monoids(config.max_monoid_order);
    vector<std::optional<MonoidResult>> results(monoids.size());
    std::atomic<size_t> next{0};
    std::atomic<size_t> verdicts{0};
    std::atomic<bool> over_budget{false};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            if ((config.instance_budget && verdicts.load() >= *config.instance_budget)
                || (config.time_budget_seconds && elapsed() >= *config.time_budget_seconds)) {
                over_budget = true;
                return;
            }
            const size_t i = next.fetch_add(1);
            if (i >= monoids.size())
                return;
            try {
                results[i] = sweep_monoid(monoids[i], config, [](const Verdict &) { return false; });
                verdicts += results[i]->verdicts;
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                if (! error)
                    error = std::current_exception();
                next = monoids.size();
            }
        }
    };

    const size_t workers = std::max<size_t>(1, std::min(config.workers, monoids.size()));
    {
        vector<std::jthread> pool;
        for (size_t w = 1; w < workers; ++w)
            pool.emplace_back(worker);
        worker();
    }
    if (error)
        std::rethrow_exception(error);

    SweepReport report;
    report.config = config;
    for (auto s : config.statements)
        report.tallies[s];
    for (size_t i = 0; i < monoids.size(); ++i) {
        if (! results[i])
            continue;
        ++report.monoids;
        report.acts += results[i]->acts;
        for (auto & [s, t] : results[i]->tallies)
            report.tallies[s] += t;
        for (auto & v : results[i]->counterexamples)
            report.counterexamples.push_back(std::move(v));
    }
    std::stable_sort(report.counterexamples.begin(), report.counterexamples.end(),
        [](const Verdict & a, const Verdict & b) { return a.statement < b.statement; });
    // A budget stop only matters if some monoid was actually skipped.
    report.budget_exceeded = over_budget && report.monoids < monoids.size();
    if (config.require_nonvacuous_count)
        for (auto & [s, t] : report.tallies)
            if (t.pass + t.fail < *config.require_nonvacuous_count)
                report.nonvacuous_shortfall.push_back(s);
    report.wall_seconds = elapsed();
    report.check_invariants();
    return report;
}

std::optional<Verdict> search_counterexample(Statement statement, size_t max_monoid_order, size_t max_act_size)
{
    SweepConfig config;
    config.max_monoid_order = max_monoid_order;
    config.max_act_size = max_act_size;
    config.statements = {statement};
    config.validate();
    for (auto & S : all_monoids(max_monoid_order)) {
        auto result = sweep_monoid(S, config, [](const Verdict &) { return true; });
        if (! result.counterexamples.empty())
            return result.counterexamples.front();
    }
    return std::nullopt;
}

nlohmann::json to_json(const SweepReport & report, bool include_timing)
{
    nlohmann::json j;
    j["schema_version"] = 1;
    auto statements = nlohmann::json::array();
    for (auto s : report.config.statements)
        statements.push_back(to_string(s));
    j["config"] = {{"max_monoid_order", report.config.max_monoid_order},
        {"max_act_size", report.config.max_act_size}, {"statements", statements}};
    if (report.config.require_nonvacuous_count)
        j["config"]["require_nonvacuous_count"] = *report.config.require_nonvacuous_count;
    j["instances"] = {{"monoids", report.monoids}, {"acts", report.acts}};
    auto tallies = nlohmann::json::object();
    for (auto & [s, t] : report.tallies)
        tallies[std::string(to_string(s))] = {{"PASS", t.pass}, {"FAIL", t.fail}, {"VACUOUS", t.vacuous},
            {"NOT_APPLICABLE", t.not_applicable}, {"total", t.total()}};
    j["tallies"] = tallies;
    auto counterexamples = nlohmann::json::array();
    for (auto & v : report.counterexamples)
        counterexamples.push_back(to_json(v));
    j["counterexamples"] = counterexamples;
    j["budget_exceeded"] = report.budget_exceeded;
    auto shortfall = nlohmann::json::array();
    for (auto s : report.nonvacuous_shortfall)
        shortfall.push_back(to_string(s));
    j["nonvacuous_shortfall"] = shortfall;
    if (include_timing)
        j["wall_time_seconds"] = report.wall_seconds;
    return j;
}

} // namespace actlab
