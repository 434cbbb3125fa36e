#include <doctest.h>

#include <actlab/act.hpp>
#include <actlab/catalog.hpp>
#include <actlab/enumeration.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace actlab;

namespace {

FiniteAct z3_residue()
{
    auto Z3 = catalog::multiplicative_mod(3);
    Table rows(3, std::vector<Element>(3));
    for (Element t = 0; t < 3; ++t)
        for (Element s = 0; s < 3; ++s)
            rows[t][s] = (t * s) % 3;
    return FiniteAct::from_table(Z3, rows);
}

/// Every act of size ≤ max_size over every monoid of order ≤ max_order.
std::vector<FiniteAct> act_pool(std::size_t max_order, std::size_t max_size)
{
    std::vector<FiniteAct> out;
    for (auto & S : fixtures::monoids_up_to(max_order))
        for (std::size_t m = 1; m <= max_size; ++m)
            for (auto & A : enumerate_acts(S, m))
                out.push_back(A);
    return out;
}

} // namespace

TEST_CASE("validate_act")
{
    CHECK_NOTHROW(z3_residue());
    CHECK_NOTHROW(trivial_act(catalog::full_transformation(2), 3));

    auto E = catalog::two_element_semilattice();
    try {
        validate_act(E, {{1, 1}, {1, 1}});
        FAIL("unit law not checked");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::UnitLawViolation);
        CHECK(e.witness() == std::vector<Element>{0});
    }

    // Z3: 2·2 = 1, so a·(2·2) = a must equal (a·2)·2; swapping under 2 but
    // fixing under 1 is fine, collapsing under 2 is not
    auto Z3 = catalog::multiplicative_mod(3);
    try {
        validate_act(Z3, {{0, 0, 1}, {0, 1, 1}});
        FAIL("compatibility not checked");
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::CompatibilityViolation);
    }
    CHECK_THROWS_AS(validate_act(E, {{0, 2}, {1, 1}}), Error);
    CHECK_THROWS_AS(validate_act(E, {}), Error);
}

TEST_CASE("zeros")
{
    auto A = z3_residue();
    CHECK(zeros(A) == ActSubset(3, {0}));
    CHECK(unique_zero(A) == Element{0});

    auto T = trivial_act(catalog::two_element_semilattice(), 2);
    CHECK(zeros(T).is_full());
    CHECK_FALSE(unique_zero(T).has_value());

    auto R = regular_act(catalog::two_element_semilattice());
    CHECK(zeros(R) == ActSubset(2, {1}));
}

TEST_CASE("subacts")
{
    auto A = fixtures::theta_a();
    CHECK(is_subact(A, ActSubset(2, {0})));
    CHECK_FALSE(is_subact(A, ActSubset(2, {1})));
    CHECK_FALSE(is_subact(A, A.none()));
    CHECK(subact_generated(A, ActSubset(2, {1})).is_full());
    CHECK(maximal_subacts(A) == std::vector<ActSubset>{ActSubset(2, {0})});

    for (auto & S : fixtures::monoids_up_to(4)) {
        auto M = maximal_right_ideal(*S);
        if (M.empty())
            continue;
        auto subs = all_subacts(regular_act(S));
        CHECK(std::find(subs.begin(), subs.end(), ActSubset(S->order(), M.mask())) != subs.end());
    }

    SUBCASE("closure enumeration equals subset filtering, and agrees with the oracle")
    {
        for (auto & A : act_pool(3, 4)) {
            auto subs = all_subacts(A);
            CHECK(subs == all_subacts_naive(A));
            auto masks = oracle::closed_subsets(A.rows());
            CHECK(masks.size() == subs.size());
            for (auto & B : subs)
                CHECK(std::find(masks.begin(), masks.end(), B.mask()) != masks.end());
        }
    }

    SUBCASE("unique zero and more than one element: a maximal subact exists")
    {
        for (auto & A : act_pool(3, 4))
            if (unique_zero(A) && A.size() > 1)
                CHECK_FALSE(maximal_subacts(A).empty());
    }
}

TEST_CASE("Rees factor")
{
    auto A = z3_residue();
    auto all = rees_factor(A, A.all());
    CHECK(all.act.size() == 1);

    auto ta = fixtures::theta_a();
    auto f = rees_factor(ta, ActSubset(2, {0}));
    CHECK(act_isomorphic(f.act, ta).has_value());

    auto g = rees_factor(A, ActSubset(3, {0}));
    CHECK(g.act.size() == 3);
    CHECK(act_isomorphic(g.act, A).has_value());

    CHECK_THROWS_AS(rees_factor(ta, ActSubset(2, {1})), Error);
    CHECK_THROWS_AS(rees_factor(ta, ta.none()), Error);

    SUBCASE("projection is an equivariant surjection onto the Rees classes")
    {
        for (auto & A : act_pool(3, 4)) {
            for (auto & B : all_subacts(A)) {
                auto R = rees_factor(A, B);
                CHECK(R.act.size() == A.size() - B.size() + 1);
                CHECK(is_equivariant(A, R.act, R.projection.map));
                CHECK(zeros(R.act).contains(R.zero_class));
                ActSubset image(R.act.size());
                for (Element a = 0; a < A.size(); ++a) {
                    image.insert(R.projection.map[a]);
                    for (Element b = 0; b < A.size(); ++b) {
                        bool same = R.projection.map[a] == R.projection.map[b];
                        CHECK(same == (a == b || (B.contains(a) && B.contains(b))));
                    }
                }
                CHECK(image.is_full());
            }
        }
    }
}

TEST_CASE("act ideal products")
{
    auto ta = fixtures::theta_a();
    auto S = ta.host();
    CHECK(act_ideal_product(ta, S->all()) == ta.all());
    CHECK(act_ideal_product(ta, ElementSet(2, {1})) == ActSubset(2, {0}));
    CHECK_THROWS_AS(act_ideal_product(ta, ElementSet(2, {0})), std::invalid_argument);

    auto T = trivial_act(catalog::multiplicative_mod(4), 2);
    for (auto & I : enumerate_right_ideals(T.monoid(), true))
        CHECK(act_ideal_product(T, I) == T.all());

    SUBCASE("AI is a subact and A(I^n) = (A I^{n-1}) I")
    {
        for (auto & A : act_pool(3, 4)) {
            for (auto & I : enumerate_right_ideals(A.monoid(), false)) {
                auto AI = act_ideal_product(A, I);
                CHECK(is_subact(A, AI));
                auto prev = AI;
                for (std::size_t n = 2; n <= 4; ++n) {
                    auto direct = act_ideal_product(A, ideal_power(A.monoid(), I, n));
                    ActSubset stepwise(A.size());
                    prev.for_each([&](Element a) {
                        I.for_each([&](Element s) { stepwise.insert(A.act(a, s)); });
                    });
                    CHECK(direct == stepwise);
                    prev = direct;
                }
            }
        }
    }
}

TEST_CASE("generating sets")
{
    auto R = regular_act(catalog::full_transformation(2));
    CHECK(is_generating(R, ActSubset(4, {R.monoid().identity()})));

    auto A = z3_residue();
    CHECK(minimal_generating_sets(A) == std::vector<ActSubset>{ActSubset(3, {1}), ActSubset(3, {2})});

    auto T = trivial_act(catalog::two_element_semilattice(), 2);
    CHECK(minimal_generating_sets(T) == std::vector<ActSubset>{T.all()});

    SUBCASE("returned sets are inclusion-minimal generators")
    {
        for (auto & A : act_pool(3, 4)) {
            auto sets = minimal_generating_sets(A);
            CHECK_FALSE(sets.empty());
            for (auto & X : sets) {
                CHECK(is_generating(A, X));
                X.for_each([&](Element x) {
                    auto Y = X;
                    Y.erase(x);
                    CHECK_FALSE(is_generating(A, Y));
                });
            }
        }
    }
}

TEST_CASE("quasi-strong faithfulness")
{
    CHECK(is_quasi_strongly_faithful(fixtures::theta_a()));
    CHECK_FALSE(is_quasi_strongly_faithful(trivial_act(catalog::two_element_semilattice(), 2)));
    CHECK(is_quasi_strongly_faithful(z3_residue()));
    // a group has no non-invertible elements
    CHECK(is_quasi_strongly_faithful(trivial_act(catalog::cyclic_group(3), 2)));
    // singleton acts
    CHECK(is_quasi_strongly_faithful(trivial_act(catalog::multiplicative_mod(4), 1)));
    // two zeros and M nonempty: never
    auto two_zeros = disjoint_union(fixtures::theta_a(), trivial_act(catalog::two_element_semilattice(), 1));
    CHECK_FALSE(is_quasi_strongly_faithful(two_zeros));
}

TEST_CASE("maximal subact condition equivalence")
{
    // For B maximal and a outside B:
    //   M = {s | as ∈ B}   <=>   (as = a  =>  s ∉ M)
    std::size_t triples = 0;
    for (auto & A : act_pool(3, 4)) {
        const auto & S = A.monoid();
        auto M = maximal_right_ideal(S);
        for (auto & B : maximal_subacts(A)) {
            for (Element a = 0; a < A.size(); ++a) {
                if (B.contains(a))
                    continue;
                ElementSet into_B(S.order());
                bool fixers_invertible = true;
                for (Element s = 0; s < S.order(); ++s) {
                    if (B.contains(A.act(a, s)))
                        into_B.insert(s);
                    if (A.act(a, s) == a && M.contains(s))
                        fixers_invertible = false;
                }
                CHECK((into_B == M) == fixers_invertible);
                ++triples;
            }
        }
    }
    CHECK(triples > 100);
}

TEST_CASE("act isomorphism agrees with the all-bijections oracle")
{
    std::mt19937 rng(7);
    std::size_t pairs = 0;
    for (auto & S : fixtures::monoids_up_to(3)) {
        std::vector<FiniteAct> pool;
        for (std::size_t m = 1; m <= 4; ++m)
            for (auto & A : enumerate_acts(S, m)) {
                pool.push_back(A);
                pool.push_back(relabel(A, fixtures::random_permutation(m, rng)));
            }
        for (auto & A : pool)
            for (auto & B : pool) {
                if (A.size() != B.size())
                    continue;
                ++pairs;
                auto f = act_isomorphic(A, B);
                CHECK(f.has_value() == oracle::acts_isomorphic(A, B));
                if (f)
                    CHECK(is_equivariant(A, B, f->map));
            }
    }
    CHECK(pairs > 1000);

    auto Z4 = catalog::multiplicative_mod(4);
    CHECK_THROWS_AS(act_isomorphic(regular_act(Z4), regular_act(catalog::cyclic_group(4))), Error);
}

TEST_CASE("decomposition, projectivity and freeness")
{
    auto E = catalog::two_element_semilattice();
    auto R = regular_act(E);
    CHECK(is_free(R).free);
    CHECK(is_free(R).rank == 1);

    auto eS = principal_act(E, 1);
    CHECK(eS.size() == 1);
    auto p = is_projective(eS);
    CHECK(p.projective);
    REQUIRE(p.idempotent_witness.size() == 1);
    CHECK(p.idempotent_witness[0] == Element{1});
    CHECK_FALSE(is_free(eS).free);

    auto RR = disjoint_union(R, R);
    CHECK(decompose_indecomposable(RR).size() == 2);
    CHECK(is_free(RR).free);
    CHECK(is_free(RR).rank == 2);

    CHECK_FALSE(is_projective(trivial_act(catalog::cyclic_group(2), 1)).projective);

    for (auto & A : act_pool(3, 4)) {
        auto parts = decompose_indecomposable(A);
        ActSubset covered(A.size());
        for (auto & P : parts) {
            CHECK(is_subact(A, P));
            CHECK((covered & P).empty());
            covered = covered | P;
        }
        CHECK(covered.is_full());
        if (is_free(A).free)
            CHECK(is_projective(A).projective);
    }
}

TEST_CASE("induced quotient act")
{
    auto ta = fixtures::theta_a();
    auto q = induced_quotient_act(ta, ElementSet(2, {1}));
    CHECK(q.quotient.monoid.order() == 2);
    CHECK(q.act.size() == 2);

    for (auto & A : act_pool(3, 3)) {
        auto M = maximal_right_ideal(A.monoid());
        if (M.empty() || !is_two_sided(A.monoid(), M))
            continue;
        auto Q = induced_quotient_act(A, M);
        CHECK(Q.act.monoid().same_structure(Q.quotient.monoid));
        // π(a)·[s] = π(a·s)
        for (Element a = 0; a < A.size(); ++a)
            for (Element s = 0; s < A.monoid().order(); ++s)
                if (!M.contains(s))
                    CHECK(Q.act.act(Q.projection.map[a], Q.quotient.carrier_map[s]) == Q.projection.map[A.act(a, s)]);
    }
}

TEST_CASE("restriction to a subact")
{
    auto A = z3_residue();
    auto r = restrict_to(A, ActSubset(3, {0}));
    CHECK(r.act.size() == 1);
    CHECK(r.inclusion.map == std::vector<Element>{0});
    CHECK_THROWS_AS(restrict_to(A, ActSubset(3, {1})), Error);
}
