// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <actlab/catalog.hpp>
#include <actlab/enumeration.hpp>
#include <actlab/sweep.hpp>
#include <actlab/verifiers.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace actlab;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string str(std::size_t n)
{
    return std::to_string(n);
}

/// All (S, A) with |S| <= 3 and |A| <= 4.
void for_each_small_instance(const std::function<void(const MonoidPtr &, const MonoidFacts &, const FiniteAct &)> & f)
{
    for (auto & S : fixtures::monoids_up_to(3)) {
        MonoidFacts facts(*S);
        for (std::size_t m = 1; m <= 4; ++m)
            for (auto & A : enumerate_acts(S, m))
                f(S, facts, A);
    }
}

SweepReport small_sweep(std::vector<Statement> statements)
{
    SweepConfig c;
    c.max_monoid_order = 3;
    c.max_act_size = 4;
    c.statements = std::move(statements);
    c.workers = 4;
    return run_sweep(c);
}

std::string tally_text(const Tally & t)
{
    return "pass=" + str(t.pass) + " fail=" + str(t.fail) + " vacuous=" + str(t.vacuous) +
        " n/a=" + str(t.not_applicable);
}

Outcome monoid_counts()
{
    // number of monoids of order n up to isomorphism (OEIS A058129)
    const std::size_t published[] = {1, 2, 7, 35};
    std::string detail;
    bool ok = true;
    double order4 = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        auto t0 = Clock::now();
        auto smart = enumerate_monoids(n).size();
        if (n == 4)
            order4 = seconds_since(t0);
        auto naive = enumerate_monoids_naive(n).size();
        ok = ok && smart == published[n - 1] && naive == published[n - 1];
        detail += (n > 1 ? ", " : "") + str(smart) + "/" + str(naive);
    }
    ok = ok && order4 < 60;
    return {ok, "counts (backtracking/naive) " + detail + "; order 4 in " + std::to_string(order4) + " s"};
}

Outcome unit_symmetry_crosscheck()
{
    std::size_t checked = 0, disagreements = 0;
    for (auto & S : fixtures::monoids_up_to(4)) {
        auto M = maximal_right_ideal(*S);
        if (M.empty())
            continue;
        ++checked;
        disagreements += is_two_sided(*S, M) != check_unit_symmetry(*S);
    }
    return {disagreements == 0 && checked > 0,
        str(checked) + " monoids with M nonempty, " + str(disagreements) + " disagreements"};
}

Outcome nakayama_general_sweep()
{
    auto report = small_sweep({Statement::nakayama_general});
    const auto & t = report.tallies.at(Statement::nakayama_general);
    // recheck the conclusion directly on every hypotheses-PASS instance
    std::size_t violations = 0;
    for_each_small_instance([&](const MonoidPtr &, const MonoidFacts & facts, const FiniteAct & A) {
        if (verify_nakayama_general(A, facts).hypotheses != Status::pass)
            return;
        for (auto & I : facts.proper_right_ideals)
            violations += act_ideal_product(A, I).is_full();
    });
    return {t.fail == 0 && report.counterexamples.empty() && t.pass >= 1 && violations == 0,
        tally_text(t) + "; direct AI = A violations " + str(violations)};
}

Outcome maximal_subact_condition()
{
    std::size_t triples = 0, disagreements = 0;
    for_each_small_instance([&](const MonoidPtr &, const MonoidFacts & facts, const FiniteAct & A) {
        const auto & S = A.monoid();
        for (auto & B : maximal_subacts(A))
            for (Element a = 0; a < A.size(); ++a) {
                if (B.contains(a))
                    continue;
                ++triples;
                ElementSet into_B(S.order());
                bool no_fixer_in_M = true;
                for (Element s = 0; s < S.order(); ++s) {
                    if (B.contains(A.act(a, s)))
                        into_B.insert(s);
                    if (A.act(a, s) == a && facts.maximal_ideal.contains(s))
                        no_fixer_in_M = false;
                }
                disagreements += (into_B == facts.maximal_ideal) != no_fixer_in_M;
            }
    });
    auto report = small_sweep({Statement::nakayama_condition});
    const auto & t = report.tallies.at(Statement::nakayama_condition);
    return {disagreements == 0 && t.fail == 0 && triples > 0,
        str(triples) + " (A, B, a) triples, " + str(disagreements) + " disagreements; verifier " + tally_text(t)};
}

Outcome nakayama_particular_sweep()
{
    auto report = small_sweep({Statement::nakayama_particular});
    const auto & t = report.tallies.at(Statement::nakayama_particular);
    std::size_t violations = 0, singletons = 0;
    for_each_small_instance([&](const MonoidPtr &, const MonoidFacts & facts, const FiniteAct & A) {
        if (verify_nakayama_particular(A, facts).hypotheses != Status::pass)
            return;
        singletons += A.size() == 1;
        for (auto & I : facts.proper_right_ideals)
            if (act_ideal_product(A, I).is_full() && A.size() != 1)
                ++violations;
    });
    auto theta_a = verify_nakayama_particular(fixtures::theta_a());
    const bool family = theta_a.hypotheses == Status::pass && theta_a.conclusion == Status::pass;
    return {t.fail == 0 && report.counterexamples.empty() && t.pass >= 1 && violations == 0 && family &&
            singletons > 0,
        tally_text(t) + "; singleton witnesses " + str(singletons) + "; {1,e} on {θ,a} " +
            (family ? "non-vacuous PASS" : "not exercised")};
}

Outcome remaining_act_sweeps()
{
    const Statement statements[] = {
        Statement::nakayama_subact_cover, Statement::generator_lifting, Statement::generating_set_dimension};
    auto report = small_sweep({std::begin(statements), std::end(statements)});
    bool ok = report.counterexamples.empty();
    std::string detail;
    for (auto s : statements) {
        const auto & t = report.tallies.at(s);
        ok = ok && t.fail == 0;
        detail += std::string(detail.empty() ? "" : "; ") + std::string(to_string(s)) + " " + tally_text(t);
    }
    return {ok, detail};
}

Outcome krull_sweeps()
{
    auto report = small_sweep({Statement::krull_intersection, Statement::krull_zero});
    const auto & k = report.tallies.at(Statement::krull_intersection);
    const auto & z = report.tallies.at(Statement::krull_zero);
    // universal: every (S, I, A) must pass, with no hypothesis filtering
    std::size_t instances = 0;
    for_each_small_instance(
        [&](const MonoidPtr &, const MonoidFacts & facts, const FiniteAct &) { instances += facts.right_ideals.size(); });
    return {k.fail == 0 && k.pass == instances && k.total() == instances && z.fail == 0,
        "krull_intersection " + tally_text(k) + " over " + str(instances) + " instances; krull_zero " + tally_text(z)};
}

Outcome projective_free()
{
    std::size_t with_idempotents = 0, trivial = 0, failures = 0, witnesses = 0;
    for (auto & S : fixtures::monoids_up_to(4)) {
        if (!is_commutative(*S))
            continue;
        auto v = verify_projective_free(S, 5);
        failures += v.hypotheses != Status::pass || v.conclusion != Status::pass;
        if (idempotents(*S).size() == 1) {
            ++trivial;
        }
        else {
            ++with_idempotents;
            auto & w = v.witnesses.front();
            witnesses += w["projective"] == true && w["free"] == false;
        }
    }
    return {failures == 0 && witnesses == with_idempotents && trivial > 0,
        str(with_idempotents) + " commutative monoids with E(S) != {1}, " + str(witnesses) +
            " projective non-free witnesses; " + str(trivial) + " with E(S) = {1}, all projective acts of size <= 5 free; " +
            str(failures) + " failures"};
}

Outcome oracle_equivalence()
{
    std::mt19937 rng(20261019);
    std::size_t pairs = 0, disagreements = 0;

    for (std::size_t n = 1; n <= 4; ++n) {
        std::vector<MonoidPtr> pool;
        for (auto & S : enumerate_monoids(n)) {
            pool.push_back(S);
            pool.push_back(std::make_shared<const FiniteMonoid>(relabel(*S, fixtures::random_permutation(n, rng))));
        }
        for (auto & S : pool)
            for (auto & T : pool) {
                ++pairs;
                disagreements += monoid_isomorphic(*S, *T).has_value() != oracle::monoids_isomorphic(*S, *T);
            }
    }
    const std::size_t monoid_pairs = pairs;

    for (auto & S : fixtures::monoids_up_to(4))
        for (std::size_t m = 1; m <= 4; ++m) {
            std::vector<FiniteAct> pool;
            for (auto & A : enumerate_acts(S, m)) {
                pool.push_back(A);
                pool.push_back(relabel(A, fixtures::random_permutation(m, rng)));
            }
            for (auto & A : pool)
                for (auto & B : pool) {
                    ++pairs;
                    disagreements += act_isomorphic(A, B).has_value() != oracle::acts_isomorphic(A, B);
                }
        }
    return {disagreements == 0 && pairs >= 10000,
        str(pairs) + " pairs (" + str(monoid_pairs) + " monoid, " + str(pairs - monoid_pairs) + " act), " +
            str(disagreements) + " disagreements"};
}

Outcome trivial_action_regression()
{
    std::size_t monoids = 0, problems = 0;
    for (auto & S : fixtures::monoids_up_to(4)) {
        MonoidFacts facts(*S);
        if (facts.maximal_ideal.empty())
            continue;
        ++monoids;
        auto A = trivial_act(S, 2);
        for (auto & I : facts.proper_right_ideals)
            problems += !act_ideal_product(A, I).is_full();
        problems += unique_zero(A).has_value();
        auto v = verify_nakayama_particular(A, facts);
        problems += v.hypotheses != Status::fail || v.conclusion != Status::vacuous;
    }
    return {problems == 0 && monoids > 0,
        str(monoids) + " monoids with M nonempty; hypotheses FAIL and conclusion VACUOUS on every trivial act; " +
            str(problems) + " problems"};
}

Outcome default_sweep()
{
    SweepConfig c1;
    c1.workers = 1;
    auto t0 = Clock::now();
    auto first = run_sweep(c1);
    const double elapsed = seconds_since(t0);
    SweepConfig c4;
    c4.workers = 4;
    auto second = run_sweep(c4);
    auto third = run_sweep(c1);

    const auto a = to_json(first, false).dump();
    const bool stable = a == to_json(second, false).dump() && a == to_json(third, false).dump();
    std::size_t fails = 0;
    for (auto & [s, t] : first.tallies)
        fails += t.fail;
    return {elapsed < 600 && stable && fails == 0 && !first.budget_exceeded,
        str(first.monoids) + " monoids, " + str(first.acts) + " acts, " + str(fails) + " failures in " +
            std::to_string(elapsed) + " s; report " + (stable ? "byte-stable" : "NOT stable") +
            " across reruns and worker counts (" + str(a.size()) + " bytes)"};
}

} // namespace

int main()
{
    const std::pair<const char *, Outcome (*)()> criteria[] = {
        {"monoid enumeration counts", monoid_counts},
        {"two-sided M <=> unit symmetry", unit_symmetry_crosscheck},
        {"general Nakayama sweep", nakayama_general_sweep},
        {"maximal subact condition equivalence", maximal_subact_condition},
        {"particular Nakayama sweep", nakayama_particular_sweep},
        {"subact cover / generator lifting / generating-set dimension sweeps", remaining_act_sweeps},
        {"Krull intersection sweeps", krull_sweeps},
        {"projective vs free over commutative monoids", projective_free},
        {"isomorphism oracles", oracle_equivalence},
        {"trivial-action regression", trivial_action_regression},
        {"default sweep runtime and stability", default_sweep},
    };
    int failed = 0;
    int index = 0;
    for (auto & [name, check] : criteria) {
        ++index;
        Outcome o;
        try {
            o = check();
        }
        catch (const std::exception & e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::printf("%s  %2d  %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed;
}
