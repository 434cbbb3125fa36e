#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include <actlab/verdict.hpp>

namespace actlab {

struct SweepConfig {
    std::size_t max_monoid_order = 4;
    std::size_t max_act_size = 4;
    std::vector<Statement> statements{std::begin(all_statements), std::end(all_statements)};
    /// Statements whose hypotheses-PASS count falls below this are listed in
    /// SweepReport::nonvacuous_shortfall.
    std::optional<std::size_t> require_nonvacuous_count;
    std::size_t workers = 1;
    /// Stop starting new monoids once this many verdicts have been produced.
    std::optional<std::size_t> instance_budget;
    std::optional<double> time_budget_seconds;

    /// Throws std::invalid_argument on zero bounds or an empty statement list.
    void validate() const;
};

struct Tally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t vacuous = 0;
    std::size_t not_applicable = 0;

    std::size_t total() const { return pass + fail + vacuous + not_applicable; }
    void add(const Verdict & v);
    Tally & operator+=(const Tally & o);
    bool operator==(const Tally &) const = default;
};

struct SweepReport {
    SweepConfig config;
    std::map<Statement, Tally> tallies;
    /// Failing verdicts in enumeration order.
    std::vector<Verdict> counterexamples;
    std::size_t monoids = 0;
    std::size_t acts = 0;
    double wall_seconds = 0;
    bool budget_exceeded = false;
    std::vector<Statement> nonvacuous_shortfall;

    /// Throws std::logic_error if tallies and counterexamples disagree.
    void check_invariants() const;
};

/// Applies every configured statement to every enumerated instance: each
/// monoid of order <= max_monoid_order, each act of size <= max_act_size
/// over it, and for krull_intersection each right ideal as well. Work is
/// split per monoid across workers and merged in enumeration order, so the
/// report does not depend on the worker count.
SweepReport run_sweep(const SweepConfig & config);

/// First instance, in sweep order, where the statement's hypotheses pass and
/// its conclusion fails.
std::optional<Verdict> search_counterexample(Statement statement, std::size_t max_monoid_order,
    std::size_t max_act_size);

/// `include_timing = false` drops the wall-time field so reruns compare
/// byte for byte.
nlohmann::json to_json(const SweepReport & report, bool include_timing = true);

} // namespace actlab
