#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include <actlab/act.hpp>

namespace actlab {

inline constexpr int analysis_schema_version = 1;

struct ActAnalysis {
    ActSubset zeros;
    std::optional<Element> unique_zero;
    std::size_t subact_count = 0;
    std::vector<ActSubset> maximal_subacts;
    std::vector<ActSubset> minimal_generating_sets;
    bool quasi_strongly_faithful = false;
    ProjectivityVerdict projectivity;
    FreenessVerdict freeness;
};

/// Everything `actlab analyze` reports for a monoid and, optionally, an act
/// over it.
struct AnalysisReport {
    ElementSet maximal_ideal;
    ElementSet idempotents;
    bool maximal_ideal_two_sided = false;
    bool commutative = false;
    std::vector<ElementSet> right_ideals;
    std::optional<ActAnalysis> act;
};

AnalysisReport analyze(const FiniteMonoid & S, const FiniteAct * A = nullptr);

nlohmann::json to_json(const AnalysisReport & report);

} // namespace actlab
