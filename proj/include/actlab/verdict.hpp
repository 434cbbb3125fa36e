#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace actlab {

/// The statements that have a verifier.
enum class Statement {
    unit_symmetry,            // M two-sided <=> (st = 1 => ts = 1)
    maximal_subact_existence, // proper subacts extend to maximal ones
    nakayama_general,         // M = {s | as in B} for some maximal B, a ∉ B => AI != A
    nakayama_fixer,           // AI = A => every a outside a maximal subact has a fixer in M
    nakayama_condition,       // M = {s | as in B} <=> (as = a => s ∉ M)
    nakayama_particular,      // qsf, unique zero, AI = A => A = {θ}
    nakayama_subact_cover,    // qsf, B ∪ AI = A => B = A
    idempotent_ideal,         // I² = I proper => AI ≇ A
    projective_free,          // commutative S: projective => free iff E(S) = {1}
    zero_group_dimension,     // 0-group S: minimal generating sets equicardinal
    generator_lifting,        // generation of A, A/AM over S, A/AM over S/M agree
    generating_set_dimension, // qsf A: minimal generating sets equicardinal
    krull_intersection,       // B = ∩ AIⁿ satisfies BI = B
    krull_zero,               // qsf, unique zero: ∩ AIⁿ = {θ}
    krull_monoid,             // ∩ Iⁿ = {θ} in S itself
};

inline constexpr Statement all_statements[] = {
    Statement::unit_symmetry,
    Statement::maximal_subact_existence,
    Statement::nakayama_general,
    Statement::nakayama_fixer,
    Statement::nakayama_condition,
    Statement::nakayama_particular,
    Statement::nakayama_subact_cover,
    Statement::idempotent_ideal,
    Statement::projective_free,
    Statement::zero_group_dimension,
    Statement::generator_lifting,
    Statement::generating_set_dimension,
    Statement::krull_intersection,
    Statement::krull_zero,
    Statement::krull_monoid,
};

/// What a statement quantifies over.
enum class StatementScope { monoid, act, act_and_ideal };

StatementScope scope_of(Statement s);
std::string_view to_string(Statement s);
std::optional<Statement> statement_from_string(std::string_view name);

enum class Status { pass, fail, not_applicable, vacuous };

std::string_view to_string(Status s);
std::optional<Status> status_from_string(std::string_view name);

/// Outcome of one verifier on one input. The conclusion is vacuous exactly
/// when the hypotheses did not pass, and a counterexample is attached exactly
/// when the conclusion failed.
struct Verdict {
    Statement statement = Statement::unit_symmetry;
    Status hypotheses = Status::pass;
    std::string failed_hypothesis;
    Status conclusion = Status::pass;
    std::vector<nlohmann::json> witnesses;
    std::optional<nlohmann::json> counterexample;

    bool operator==(const Verdict &) const = default;
};

Verdict not_applicable(Statement s, std::string hypothesis);
Verdict hypothesis_failed(Statement s, std::string hypothesis);

/// Throws std::logic_error if the vacuity/counterexample invariants are broken.
void check_invariants(const Verdict & v);

nlohmann::json to_json(const Verdict & v);
Verdict verdict_from_json(const nlohmann::json & j);

} // namespace actlab
