#pragma once

#include <cstddef>
#include <vector>

#include <actlab/act.hpp>
#include <actlab/verdict.hpp>

namespace actlab {

/// Monoid-level data every verifier consults, computed once per monoid.
struct MonoidFacts {
    explicit MonoidFacts(const FiniteMonoid & S);

    ElementSet maximal_ideal;
    bool maximal_ideal_two_sided;
    ElementSet idempotents;
    bool commutative;
    std::vector<ElementSet> right_ideals;
    std::vector<ElementSet> proper_right_ideals;
};

// Verifiers that quantify over the maximal right ideal M return
// NOT_APPLICABLE when S is a group (M empty). Each act-level verifier takes
// the facts of the act's host monoid; the single-argument overloads compute
// them.

Verdict verify_unit_symmetry(const FiniteMonoid & S, const MonoidFacts & facts);
Verdict verify_unit_symmetry(const FiniteMonoid & S);

Verdict verify_maximal_subact_existence(const FiniteAct & A);

/// Pairs (B, a) with B a maximal subact, a outside B and {s | as ∈ B} = M.
/// Requires M two-sided (std::invalid_argument otherwise).
struct NakayamaPair {
    ActSubset subact;
    Element element;
};
std::vector<NakayamaPair> nakayama_general_witnesses(const FiniteAct & A, const MonoidFacts & facts);

Verdict verify_nakayama_general(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_nakayama_fixer(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_nakayama_condition(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_nakayama_particular(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_nakayama_subact_cover(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_idempotent_ideal(const FiniteAct & A, const MonoidFacts & facts);

/// For commutative S. When E(S) = {1}, every act in `acts` that is
/// projective must be free; otherwise eS for the smallest idempotent e != 1
/// must come out projective and not free.
Verdict verify_projective_free(MonoidPtr S, const MonoidFacts & facts, const std::vector<FiniteAct> & acts);

/// Enumerates the acts of size 1..max_act_size itself.
Verdict verify_projective_free(MonoidPtr S, std::size_t max_act_size);

Verdict verify_zero_group_dimension(const FiniteAct & A);
Verdict verify_generator_lifting(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_generating_set_dimension(const FiniteAct & A, const MonoidFacts & facts);

/// The descending chain AI ⊇ AI² ⊇ ... stops at the first n with
/// AI^(n+1) = AI^n; `intersection` is AI^n, which equals ∩ AIⁿ.
struct KrullChain {
    ActSubset intersection;
    unsigned stabilization_index;
};
KrullChain krull_intersection(const FiniteAct & A, const ElementSet & I);

Verdict verify_krull_intersection(const FiniteAct & A, const ElementSet & I);
Verdict verify_krull_zero(const FiniteAct & A, const MonoidFacts & facts);
Verdict verify_krull_monoid(MonoidPtr S, const MonoidFacts & facts);

#define ACTLAB_FACTS_OVERLOAD(name) \
    inline Verdict name(const FiniteAct & A) { return name(A, MonoidFacts(A.monoid())); }
ACTLAB_FACTS_OVERLOAD(verify_nakayama_general)
ACTLAB_FACTS_OVERLOAD(verify_nakayama_fixer)
ACTLAB_FACTS_OVERLOAD(verify_nakayama_condition)
ACTLAB_FACTS_OVERLOAD(verify_nakayama_particular)
ACTLAB_FACTS_OVERLOAD(verify_nakayama_subact_cover)
ACTLAB_FACTS_OVERLOAD(verify_idempotent_ideal)
ACTLAB_FACTS_OVERLOAD(verify_generator_lifting)
ACTLAB_FACTS_OVERLOAD(verify_generating_set_dimension)
ACTLAB_FACTS_OVERLOAD(verify_krull_zero)
#undef ACTLAB_FACTS_OVERLOAD

inline Verdict verify_krull_monoid(MonoidPtr S)
{
    MonoidFacts facts(*S);
    return verify_krull_monoid(std::move(S), facts);
}

/// Runs an act-scoped statement (throws std::invalid_argument otherwise).
Verdict verify_act_statement(Statement s, const FiniteAct & A, const MonoidFacts & facts);

/// Every applicable statement on (S) or (S, A); krull_intersection yields one
/// verdict per right ideal. projective_free enumerates acts up to
/// `max_act_size`.
std::vector<Verdict> verify_all(MonoidPtr S, const FiniteAct * A, const std::vector<Statement> & statements,
    std::size_t max_act_size);

} // namespace actlab
