#include <actlab/verdict.hpp>

#include <stdexcept>

namespace actlab {

namespace {
    struct StatementInfo {
        Statement id;
        std::string_view name;
        StatementScope scope;
    };

    constexpr StatementInfo statement_info[] = {
        {Statement::unit_symmetry, "unit_symmetry", StatementScope::monoid},
        {Statement::maximal_subact_existence, "maximal_subact_existence", StatementScope::act},
        {Statement::nakayama_general, "nakayama_general", StatementScope::act},
        {Statement::nakayama_fixer, "nakayama_fixer", StatementScope::act},
        {Statement::nakayama_condition, "nakayama_condition", StatementScope::act},
        {Statement::nakayama_particular, "nakayama_particular", StatementScope::act},
        {Statement::nakayama_subact_cover, "nakayama_subact_cover", StatementScope::act},
        {Statement::idempotent_ideal, "idempotent_ideal", StatementScope::act},
        {Statement::projective_free, "projective_free", StatementScope::monoid},
        {Statement::zero_group_dimension, "zero_group_dimension", StatementScope::act},
        {Statement::generator_lifting, "generator_lifting", StatementScope::act},
        {Statement::generating_set_dimension, "generating_set_dimension", StatementScope::act},
        {Statement::krull_intersection, "krull_intersection", StatementScope::act_and_ideal},
        {Statement::krull_zero, "krull_zero", StatementScope::act},
        {Statement::krull_monoid, "krull_monoid", StatementScope::monoid},
    };

    const StatementInfo & info(Statement s)
    {
        for (auto & i : statement_info)
            if (i.id == s)
                return i;
        throw std::logic_error("unknown statement");
    }
} // namespace

StatementScope scope_of(Statement s)
{
    return info(s).scope;
}

std::string_view to_string(Statement s)
{
    return info(s).name;
}

std::optional<Statement> statement_from_string(std::string_view name)
{
    for (auto & i : statement_info)
        if (i.name == name)
            return i.id;
    return std::nullopt;
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::not_applicable: return "NOT_APPLICABLE";
    case Status::vacuous: return "VACUOUS";
    }
    return "?";
}

std::optional<Status> status_from_string(std::string_view name)
{
    for (auto s : {Status::pass, Status::fail, Status::not_applicable, Status::vacuous})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

Verdict not_applicable(Statement s, std::string hypothesis)
{
    return {s, Status::not_applicable, std::move(hypothesis), Status::vacuous, {}, std::nullopt};
}

Verdict hypothesis_failed(Statement s, std::string hypothesis)
{
    return {s, Status::fail, std::move(hypothesis), Status::vacuous, {}, std::nullopt};
}

void check_invariants(const Verdict & v)
{
    if (v.hypotheses == Status::vacuous)
        throw std::logic_error("hypotheses cannot be VACUOUS");
    if (v.conclusion == Status::not_applicable)
        throw std::logic_error("conclusion cannot be NOT_APPLICABLE");
    if ((v.conclusion == Status::vacuous) != (v.hypotheses != Status::pass))
        throw std::logic_error("conclusion must be VACUOUS exactly when hypotheses did not pass");
    if (v.counterexample.has_value() != (v.conclusion == Status::fail))
        throw std::logic_error("counterexample must be present exactly when the conclusion failed");
}

nlohmann::json to_json(const Verdict & v)
{
    nlohmann::json j;
    j["statement"] = to_string(v.statement);
    j["hypotheses"] = to_string(v.hypotheses);
    if (! v.failed_hypothesis.empty())
        j["failed_hypothesis"] = v.failed_hypothesis;
    j["conclusion"] = to_string(v.conclusion);
    j["witnesses"] = nlohmann::json::array();
    for (auto & w : v.witnesses)
        j["witnesses"].push_back(w);
    if (v.counterexample)
        j["counterexample"] = *v.counterexample;
    return j;
}

Verdict verdict_from_json(const nlohmann::json & j)
{
    auto field = [&](const char * key) -> std::string {
        if (! j.contains(key) || ! j[key].is_string())
            throw std::invalid_argument(std::string("verdict field '") + key + "' missing or not a string");
        return j[key].get<std::string>();
    };
    Verdict v;
    auto st = statement_from_string(field("statement"));
    auto hy = status_from_string(field("hypotheses"));
    auto co = status_from_string(field("conclusion"));
    if (! st || ! hy || ! co)
        throw std::invalid_argument("verdict has an unknown statement or status");
    v.statement = *st;
    v.hypotheses = *hy;
    v.conclusion = *co;
    if (j.contains("failed_hypothesis"))
        v.failed_hypothesis = j["failed_hypothesis"].get<std::string>();
    if (j.contains("witnesses"))
        for (auto & w : j["witnesses"])
            v.witnesses.push_back(w);
    if (j.contains("counterexample"))
        v.counterexample = j["counterexample"];
    return v;
}

} // namespace actlab
