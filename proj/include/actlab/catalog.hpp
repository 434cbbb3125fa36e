#pragma once

#include <cstddef>

#include <actlab/act.hpp>

namespace actlab::catalog {

/// (Z_n, ·); identity 1 (for n = 1 the single element).
MonoidPtr multiplicative_mod(std::size_t n);

/// (Z_n, +); identity 0.
MonoidPtr cyclic_group(std::size_t n);

/// {1, e} with e² = e. Index 0 is 1, index 1 is e.
MonoidPtr two_element_semilattice();

/// All maps {0..k-1} -> {0..k-1} composed left to right (x(st) = (xs)t).
/// A map f is stored at index sum f(i)·k^i.
MonoidPtr full_transformation(std::size_t k);

/// S × T with componentwise product; (s, t) sits at index s·|T| + t.
MonoidPtr direct_product(const FiniteMonoid & S, const FiniteMonoid & T);

/// {1} ∪ {0..k-1} where the k non-identity elements are right zeros
/// (xy = y). Not commutative for k >= 2.
MonoidPtr right_zero_with_identity(std::size_t k);

} // namespace actlab::catalog
