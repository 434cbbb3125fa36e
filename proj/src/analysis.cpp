#include <actlab/analysis.hpp>

#include <actlab/io.hpp>

namespace actlab {

AnalysisReport analyze(const FiniteMonoid & S, const FiniteAct * A)
{
    AnalysisReport r;
    r.maximal_ideal = maximal_right_ideal(S);
    r.idempotents = idempotents(S);
    r.maximal_ideal_two_sided = is_two_sided(S, r.maximal_ideal);
    r.commutative = is_commutative(S);
    r.right_ideals = enumerate_right_ideals(S, false);
    if (A) {
        if (! A->monoid().same_structure(S))
            throw Error(ErrorKind::HostMismatch, "act is not over the given monoid");
        ActAnalysis a;
        a.zeros = zeros(*A);
        a.unique_zero = unique_zero(*A);
        a.subact_count = all_subacts(*A).size();
        a.maximal_subacts = maximal_subacts(*A);
        a.minimal_generating_sets = minimal_generating_sets(*A);
        a.quasi_strongly_faithful = is_quasi_strongly_faithful(*A, r.maximal_ideal);
        a.projectivity = is_projective(*A);
        a.freeness = is_free(*A);
        r.act = std::move(a);
    }
    return r;
}

namespace {
    template <class Tag>
    nlohmann::json list_json(const std::vector<Subset<Tag>> & sets)
    {
        auto out = nlohmann::json::array();
        for (auto & s : sets)
            out.push_back(to_json(s));
        return out;
    }
} // namespace

nlohmann::json to_json(const AnalysisReport & r)
{
    nlohmann::json j;
    j["schema_version"] = analysis_schema_version;
    j["monoid"] = {{"maximal_right_ideal", to_json(r.maximal_ideal)},
        {"idempotents", to_json(r.idempotents)},
        {"maximal_ideal_two_sided", r.maximal_ideal_two_sided},
        {"commutative", r.commutative},
        {"right_ideals", list_json(r.right_ideals)}};
    if (r.act) {
        const auto & a = *r.act;
        auto witnesses = nlohmann::json::array();
        for (auto & w : a.projectivity.idempotent_witness)
            witnesses.push_back(w ? nlohmann::json(*w) : nlohmann::json(nullptr));
        j["act"] = {{"zeros", to_json(a.zeros)},
            {"unique_zero", a.unique_zero ? nlohmann::json(*a.unique_zero) : nlohmann::json(nullptr)},
            {"subact_count", a.subact_count},
            {"maximal_subacts", list_json(a.maximal_subacts)},
            {"minimal_generating_sets", list_json(a.minimal_generating_sets)},
            {"quasi_strongly_faithful", a.quasi_strongly_faithful},
            {"projective", {{"value", a.projectivity.projective}, {"idempotent_per_component", witnesses}}},
            {"free", {{"value", a.freeness.free}, {"rank", a.freeness.rank}}}};
    }
    return j;
}

} // namespace actlab
