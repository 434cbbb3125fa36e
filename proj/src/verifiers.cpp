#include <actlab/verifiers.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <actlab/enumeration.hpp>
#include <actlab/io.hpp>

namespace actlab {

using nlohmann::json;
using std::vector;

namespace {

    constexpr const char * hyp_m_nonempty = "monoid has a right non-invertible element";
    constexpr const char * hyp_two_sided = "maximal right ideal is two-sided";
    constexpr const char * hyp_unique_zero = "act has a unique zero";
    constexpr const char * hyp_qsf = "act is quasi-strongly faithful";

    Verdict passed(Statement s, vector<json> witnesses = {})
    {
        return {s, Status::pass, {}, Status::pass, std::move(witnesses), std::nullopt};
    }

    Verdict failed(Statement s, json counterexample, vector<json> witnesses = {})
    {
        return {s, Status::pass, {}, Status::fail, std::move(witnesses), std::move(counterexample)};
    }

    json instance(const FiniteAct & A)
    {
        return {{"act", to_json(A)}};
    }

    json instance(const FiniteMonoid & S)
    {
        return {{"monoid", to_json(S)}};
    }

    // {s | as ∈ B}
    ElementSet annihilator(const FiniteAct & A, Element a, const ActSubset & B)
    {
        ElementSet out = A.monoid().none();
        for (Element s = 0; s < A.monoid().order(); ++s)
            if (B.contains(A.act(a, s)))
                out.insert(s);
        return out;
    }

    bool fixed_by_some(const FiniteAct & A, Element a, const ElementSet & X)
    {
        bool fixed = false;
        X.for_each([&](Element s) { fixed = fixed || A.act(a, s) == a; });
        return fixed;
    }

    vector<std::size_t> generating_set_sizes(const FiniteAct & A)
    {
        vector<std::size_t> sizes;
        for (auto & g : minimal_generating_sets(A))
            sizes.push_back(g.size());
        return sizes;
    }

    bool all_equal(const vector<std::size_t> & xs)
    {
        return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>()) == xs.end();
    }

    ActSubset right_product(const FiniteAct & A, const ActSubset & B, const ElementSet & I)
    {
        ActSubset out = A.none();
        B.for_each([&](Element b) { I.for_each([&](Element s) { out.insert(A.act(b, s)); }); });
        return out;
    }

} // namespace

MonoidFacts::MonoidFacts(const FiniteMonoid & S) :
    maximal_ideal(maximal_right_ideal(S)),
    maximal_ideal_two_sided(is_two_sided(S, maximal_ideal)),
    idempotents(actlab::idempotents(S)),
    commutative(is_commutative(S)),
    right_ideals(enumerate_right_ideals(S, false)),
    proper_right_ideals(enumerate_right_ideals(S, true))
{
}

Verdict verify_unit_symmetry(const FiniteMonoid & S, const MonoidFacts & facts)
{
    constexpr auto id = Statement::unit_symmetry;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    const bool two_sided = facts.maximal_ideal_two_sided;
    const bool symmetric = check_unit_symmetry(S);
    vector<json> w{{{"maximal_ideal", to_json(facts.maximal_ideal)}, {"two_sided", two_sided},
        {"unit_symmetric", symmetric}}};
    if (two_sided != symmetric)
        return failed(id, instance(S), std::move(w));
    return passed(id, std::move(w));
}

Verdict verify_unit_symmetry(const FiniteMonoid & S)
{
    return verify_unit_symmetry(S, MonoidFacts(S));
}

Verdict verify_maximal_subact_existence(const FiniteAct & A)
{
    constexpr auto id = Statement::maximal_subact_existence;
    if (! unique_zero(A))
        return hypothesis_failed(id, hyp_unique_zero);
    if (A.size() == 1)
        return hypothesis_failed(id, "act is not its zero alone");

    auto maximal = maximal_subacts(A);
    json listed = json::array();
    for (auto & b : maximal)
        listed.push_back(to_json(b));
    vector<json> w{{{"maximal_subacts", listed}}};
    if (maximal.empty())
        return failed(id, instance(A), std::move(w));
    for (auto & b : all_subacts(A)) {
        if (b.is_full())
            continue;
        bool extends = std::any_of(maximal.begin(), maximal.end(), [&](const ActSubset & m) { return b.is_subset_of(m); });
        if (! extends) {
            auto c = instance(A);
            c["subact"] = to_json(b);
            return failed(id, std::move(c), std::move(w));
        }
    }
    return passed(id, std::move(w));
}

vector<NakayamaPair> nakayama_general_witnesses(const FiniteAct & A, const MonoidFacts & facts)
{
    if (! facts.maximal_ideal_two_sided)
        throw std::invalid_argument("Nakayama witnesses need a two-sided maximal right ideal");
    vector<NakayamaPair> out;
    for (auto & B : maximal_subacts(A))
        for (Element a = 0; a < A.size(); ++a)
            if (! B.contains(a) && annihilator(A, a, B) == facts.maximal_ideal)
                out.push_back({B, a});
    return out;
}

Verdict verify_nakayama_general(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::nakayama_general;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    auto pairs = nakayama_general_witnesses(A, facts);
    if (pairs.empty())
        return hypothesis_failed(id, "maximal subact B and a outside B with {s | as in B} = M");

    vector<json> w;
    for (auto & p : pairs)
        w.push_back({{"subact", to_json(p.subact)}, {"element", p.element}});
    for (auto & I : facts.proper_right_ideals)
        if (act_ideal_product(A, I).is_full()) {
            auto c = instance(A);
            c["ideal"] = to_json(I);
            return failed(id, std::move(c), std::move(w));
        }
    return passed(id, std::move(w));
}

Verdict verify_nakayama_fixer(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::nakayama_fixer;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    auto maximal = maximal_subacts(A);
    if (maximal.empty())
        return hypothesis_failed(id, "act has a maximal subact");
    vector<ElementSet> covering;
    for (auto & I : facts.proper_right_ideals)
        if (act_ideal_product(A, I).is_full())
            covering.push_back(I);
    if (covering.empty())
        return hypothesis_failed(id, "proper ideal I with AI = A");

    vector<json> w;
    for (auto & I : covering)
        for (auto & B : maximal)
            for (Element a = 0; a < A.size(); ++a) {
                if (B.contains(a))
                    continue;
                std::optional<Element> fixer;
                facts.maximal_ideal.for_each([&](Element m) {
                    if (! fixer && A.act(a, m) == a)
                        fixer = m;
                });
                if (! fixer) {
                    auto c = instance(A);
                    c["ideal"] = to_json(I);
                    c["subact"] = to_json(B);
                    c["element"] = a;
                    return failed(id, std::move(c), std::move(w));
                }
                w.push_back({{"ideal", to_json(I)}, {"subact", to_json(B)}, {"element", a}, {"fixer", *fixer}});
            }
    return passed(id, std::move(w));
}

Verdict verify_nakayama_condition(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::nakayama_condition;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    auto maximal = maximal_subacts(A);
    if (maximal.empty())
        return hypothesis_failed(id, "act has a maximal subact");

    std::size_t triples = 0, condition_holds = 0;
    for (auto & B : maximal)
        for (Element a = 0; a < A.size(); ++a) {
            if (B.contains(a))
                continue;
            ++triples;
            const bool annihilator_is_m = annihilator(A, a, B) == facts.maximal_ideal;
            const bool no_non_unit_fixer = ! fixed_by_some(A, a, facts.maximal_ideal);
            condition_holds += annihilator_is_m;
            if (annihilator_is_m != no_non_unit_fixer) {
                auto c = instance(A);
                c["subact"] = to_json(B);
                c["element"] = a;
                c["annihilator_equals_m"] = annihilator_is_m;
                c["no_fixer_in_m"] = no_non_unit_fixer;
                return failed(id, std::move(c));
            }
        }
    return passed(id, {{{"triples", triples}, {"condition_holds", condition_holds}}});
}

Verdict verify_nakayama_particular(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::nakayama_particular;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    if (! unique_zero(A))
        return hypothesis_failed(id, hyp_unique_zero);
    if (! is_quasi_strongly_faithful(A, facts.maximal_ideal))
        return hypothesis_failed(id, hyp_qsf);

    json covering = json::array();
    for (auto & I : facts.proper_right_ideals)
        if (act_ideal_product(A, I).is_full()) {
            if (A.size() != 1) {
                auto c = instance(A);
                c["ideal"] = to_json(I);
                return failed(id, std::move(c));
            }
            covering.push_back(to_json(I));
        }
    return passed(id, {{{"ideals_with_AI_equal_A", covering}, {"act_size", A.size()}}});
}

Verdict verify_nakayama_subact_cover(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::nakayama_subact_cover;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    if (! is_quasi_strongly_faithful(A, facts.maximal_ideal))
        return hypothesis_failed(id, hyp_qsf);

    auto subacts = all_subacts(A);
    std::size_t covers = 0;
    for (auto & I : facts.proper_right_ideals) {
        auto AI = act_ideal_product(A, I);
        for (auto & B : subacts)
            if ((B | AI).is_full()) {
                ++covers;
                if (! B.is_full()) {
                    auto c = instance(A);
                    c["ideal"] = to_json(I);
                    c["subact"] = to_json(B);
                    return failed(id, std::move(c));
                }
            }
    }
    return passed(id, {{{"covering_pairs", covers}}});
}

Verdict verify_idempotent_ideal(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::idempotent_ideal;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    if (nakayama_general_witnesses(A, facts).empty())
        return hypothesis_failed(id, "maximal subact B and a outside B with {s | as in B} = M");

    const auto & S = A.monoid();
    json idempotent_ideals = json::array();
    for (auto & I : facts.right_ideals) {
        const bool whole = I.is_full();
        auto AI = act_ideal_product(A, I);
        auto fail_with = [&](const char * clause) {
            auto c = instance(A);
            c["ideal"] = to_json(I);
            c["clause"] = clause;
            return failed(id, std::move(c));
        };
        // AI = A <=> I = S
        if (AI.is_full() != whole)
            return fail_with("AI = A iff I = S");
        if (ideal_product(S, I, I) != I)
            continue;
        idempotent_ideals.push_back(to_json(I));
        const bool isomorphic = act_isomorphic(restrict_to(A, AI).act, A).has_value();
        if (! whole && isomorphic)
            return fail_with("I proper and idempotent implies AI not isomorphic to A");
        if (isomorphic != whole)
            return fail_with("I idempotent: AI isomorphic to A iff I = S");
    }
    return passed(id, {{{"idempotent_ideals", idempotent_ideals}}});
}

Verdict verify_projective_free(MonoidPtr S, const MonoidFacts & facts, const vector<FiniteAct> & acts)
{
    constexpr auto id = Statement::projective_free;
    if (! facts.commutative)
        return hypothesis_failed(id, "monoid is commutative");

    if (facts.idempotents.size() == 1) {
        std::size_t projective = 0;
        for (auto & A : acts) {
            if (! is_projective(A).projective)
                continue;
            ++projective;
            if (! is_free(A).free) {
                auto c = instance(A);
                c["reason"] = "projective act that is not free while E(S) = {1}";
                return failed(id, std::move(c));
            }
        }
        return passed(id, {{{"idempotents_trivial", true}, {"projective_acts_checked", projective},
                               {"acts_checked", acts.size()}}});
    }

    Element e = 0;
    while (! facts.idempotents.contains(e) || e == S->identity())
        ++e;
    auto P = principal_act(S, e);
    const bool projective = is_projective(P).projective;
    const bool free = is_free(P).free;
    json w{{"idempotents_trivial", false}, {"idempotent", e}, {"act", to_json(P)}, {"projective", projective},
        {"free", free}};
    if (! projective || free) {
        auto c = instance(*S);
        c["idempotent"] = e;
        c["reason"] = "eS is not a projective non-free act";
        return failed(id, std::move(c), {w});
    }
    return passed(id, {w});
}

Verdict verify_projective_free(MonoidPtr S, std::size_t max_act_size)
{
    MonoidFacts facts(*S);
    vector<FiniteAct> acts;
    if (facts.commutative && facts.idempotents.size() == 1)
        for (std::size_t m = 1; m <= max_act_size; ++m)
            for (auto & A : enumerate_acts(S, m))
                acts.push_back(std::move(A));
    return verify_projective_free(std::move(S), facts, acts);
}

Verdict verify_zero_group_dimension(const FiniteAct & A)
{
    constexpr auto id = Statement::zero_group_dimension;
    const auto & S = A.monoid();
    auto zero = monoid_zero(S);
    if (! zero)
        return hypothesis_failed(id, "monoid has a zero");
    for (Element s = 0; s < S.order(); ++s)
        if (s != *zero && ! is_right_invertible(S, s))
            return hypothesis_failed(id, "every nonzero element is invertible");

    auto sizes = generating_set_sizes(A);
    if (! all_equal(sizes)) {
        auto c = instance(A);
        c["sizes"] = sizes;
        return failed(id, std::move(c));
    }
    return passed(id, {{{"minimal_generating_set_sizes", sizes}}});
}

Verdict verify_generator_lifting(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::generator_lifting;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    if (! is_quasi_strongly_faithful(A, facts.maximal_ideal))
        return hypothesis_failed(id, hyp_qsf);
    if (A.size() > 20)
        throw Error(ErrorKind::TooLarge, "generator lifting checks every subset; act too large");

    auto factor = rees_factor(A, act_ideal_product(A, facts.maximal_ideal));
    auto induced = induced_quotient_act(A, facts.maximal_ideal);
    const auto & pi = factor.projection.map;

    std::size_t generating = 0;
    const std::uint64_t limit = std::uint64_t{1} << A.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        ActSubset X(A.size(), mask);
        ActSubset image = factor.act.none();
        X.for_each([&](Element a) { image.insert(pi[a]); });
        const bool in_A = is_generating(A, X);
        const bool in_factor = is_generating(factor.act, image);
        const bool in_quotient = is_generating(induced.act, image);
        generating += in_A;
        if (in_A != in_factor || in_factor != in_quotient) {
            auto c = instance(A);
            c["subset"] = to_json(X);
            c["generates_A"] = in_A;
            c["generates_factor_over_S"] = in_factor;
            c["generates_factor_over_quotient"] = in_quotient;
            return failed(id, std::move(c));
        }
    }
    return passed(id, {{{"subsets_checked", limit - 1}, {"generating_subsets", generating}}});
}

Verdict verify_generating_set_dimension(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::generating_set_dimension;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    if (! is_quasi_strongly_faithful(A, facts.maximal_ideal))
        return hypothesis_failed(id, hyp_qsf);
    auto sizes = generating_set_sizes(A);
    if (! all_equal(sizes)) {
        auto c = instance(A);
        c["sizes"] = sizes;
        return failed(id, std::move(c));
    }
    return passed(id, {{{"minimal_generating_set_sizes", sizes}}});
}

KrullChain krull_intersection(const FiniteAct & A, const ElementSet & I)
{
    if (! is_right_ideal(A.monoid(), I))
        throw std::invalid_argument("krull_intersection needs a right ideal");
    ElementSet power = I;
    ActSubset current = act_ideal_product(A, power);
    for (unsigned n = 1;; ++n) {
        power = ideal_product(A.monoid(), power, I);
        auto next = act_ideal_product(A, power);
        if (next == current)
            return {current, n};
        current = next;
    }
}

Verdict verify_krull_intersection(const FiniteAct & A, const ElementSet & I)
{
    constexpr auto id = Statement::krull_intersection;
    auto chain = krull_intersection(A, I);
    auto BI = right_product(A, chain.intersection, I);
    json w{{"ideal", to_json(I)}, {"intersection", to_json(chain.intersection)},
        {"stabilization_index", chain.stabilization_index}};
    if (BI != chain.intersection) {
        auto c = instance(A);
        c["ideal"] = to_json(I);
        c["BI"] = to_json(BI);
        return failed(id, std::move(c), {w});
    }
    return passed(id, {w});
}

Verdict verify_krull_zero(const FiniteAct & A, const MonoidFacts & facts)
{
    constexpr auto id = Statement::krull_zero;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    if (! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, hyp_two_sided);
    auto zero = unique_zero(A);
    if (! zero)
        return hypothesis_failed(id, hyp_unique_zero);
    if (! is_quasi_strongly_faithful(A, facts.maximal_ideal))
        return hypothesis_failed(id, hyp_qsf);

    const ActSubset theta(A.size(), {*zero});
    vector<json> w;
    for (auto & I : facts.proper_right_ideals) {
        auto chain = krull_intersection(A, I);
        if (chain.intersection != theta) {
            auto c = instance(A);
            c["ideal"] = to_json(I);
            c["intersection"] = to_json(chain.intersection);
            return failed(id, std::move(c));
        }
        w.push_back({{"ideal", to_json(I)}, {"stabilization_index", chain.stabilization_index}});
    }
    return passed(id, std::move(w));
}

Verdict verify_krull_monoid(MonoidPtr S, const MonoidFacts & facts)
{
    constexpr auto id = Statement::krull_monoid;
    if (facts.maximal_ideal.empty())
        return not_applicable(id, hyp_m_nonempty);
    auto regular = regular_act(S);
    auto zero = unique_zero(regular);
    if (! zero)
        return hypothesis_failed(id, "S as an act has a unique zero");
    if (! is_quasi_strongly_faithful(regular, facts.maximal_ideal))
        return hypothesis_failed(id, "S as an act is quasi-strongly faithful");
    if (! facts.commutative && ! facts.maximal_ideal_two_sided)
        return hypothesis_failed(id, "monoid is commutative or its maximal right ideal is two-sided");

    const ActSubset theta(regular.size(), {*zero});
    vector<json> w;
    auto check = [&](const char * clause, const ElementSet & I) -> std::optional<Verdict> {
        auto chain = krull_intersection(regular, I);
        if (chain.intersection != theta) {
            auto c = instance(*S);
            c["clause"] = clause;
            c["ideal"] = to_json(I);
            c["intersection"] = to_json(chain.intersection);
            return failed(id, std::move(c));
        }
        w.push_back({{"clause", clause}, {"ideal", to_json(I)}, {"stabilization_index", chain.stabilization_index}});
        return std::nullopt;
    };
    if (facts.commutative)
        for (auto & I : facts.proper_right_ideals)
            if (auto v = check("commutative", I))
                return *v;
    if (facts.maximal_ideal_two_sided)
        if (auto v = check("two_sided", facts.maximal_ideal))
            return *v;
    return passed(id, std::move(w));
}

Verdict verify_act_statement(Statement s, const FiniteAct & A, const MonoidFacts & facts)
{
    switch (s) {
    case Statement::maximal_subact_existence: return verify_maximal_subact_existence(A);
    case Statement::nakayama_general: return verify_nakayama_general(A, facts);
    case Statement::nakayama_fixer: return verify_nakayama_fixer(A, facts);
    case Statement::nakayama_condition: return verify_nakayama_condition(A, facts);
    case Statement::nakayama_particular: return verify_nakayama_particular(A, facts);
    case Statement::nakayama_subact_cover: return verify_nakayama_subact_cover(A, facts);
    case Statement::idempotent_ideal: return verify_idempotent_ideal(A, facts);
    case Statement::zero_group_dimension: return verify_zero_group_dimension(A);
    case Statement::generator_lifting: return verify_generator_lifting(A, facts);
    case Statement::generating_set_dimension: return verify_generating_set_dimension(A, facts);
    case Statement::krull_zero: return verify_krull_zero(A, facts);
    default: throw std::invalid_argument("statement is not act-scoped: " + std::string(to_string(s)));
    }
}

vector<Verdict> verify_all(MonoidPtr S, const FiniteAct * A, const vector<Statement> & statements,
    std::size_t max_act_size)
{
    MonoidFacts facts(*S);
    vector<Verdict> out;
    for (auto s : statements) {
        switch (scope_of(s)) {
        case StatementScope::monoid:
            if (s == Statement::unit_symmetry)
                out.push_back(verify_unit_symmetry(*S, facts));
            else if (s == Statement::krull_monoid)
                out.push_back(verify_krull_monoid(S, facts));
            else
                out.push_back(verify_projective_free(S, max_act_size));
            break;
        case StatementScope::act:
            if (A)
                out.push_back(verify_act_statement(s, *A, facts));
            break;
        case StatementScope::act_and_ideal:
            if (A)
                for (auto & I : facts.right_ideals)
                    out.push_back(verify_krull_intersection(*A, I));
            break;
        }
    }
    return out;
}

} // namespace actlab
