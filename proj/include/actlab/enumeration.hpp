#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <actlab/act.hpp>

namespace actlab {

/// Calls `visit` once per isomorphism class of monoids of the given order.
/// Each representative has its identity at index 0 and is the canonical
/// table of its class: elements sorted by an invariant vector, then the
/// lexicographically least table among relabellings that keep that order.
void for_each_monoid(std::size_t order, const std::function<void(const FiniteMonoid &)> & visit);

/// Representatives in generation order, named "M<order>.<k>".
std::vector<MonoidPtr> enumerate_monoids(std::size_t order);

/// Generate-then-filter reference: every identity-at-0 table, associativity
/// filter, canonical form by minimising over all relabellings.
std::vector<MonoidPtr> enumerate_monoids_naive(std::size_t order);

/// A small generating set of S as a monoid (greedy, then redundant
/// generators removed). Empty for the trivial monoid.
std::vector<Element> monoid_generating_set(const FiniteMonoid & S);

/// All acts of the given size over S up to isomorphism, as homomorphisms
/// S -> T_size determined by the images of a generating set. Sorted by
/// canonical table; named "A<size>.<k>".
std::vector<FiniteAct> enumerate_acts(MonoidPtr S, std::size_t size);

/// Every action table filtered by the act axioms, deduplicated pairwise with
/// act_isomorphic. Exponential; small bounds only.
std::vector<FiniteAct> enumerate_acts_naive(MonoidPtr S, std::size_t size);

/// Lexicographically least action table over all relabellings of A.
Table canonical_act_table(const FiniteAct & A);

} // namespace actlab
