#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <actlab/error.hpp>
#include <actlab/subset.hpp>

namespace actlab {

using Table = std::vector<std::vector<Element>>;

/// A finite monoid given by its Cayley table. `product(s, t)` is st: the row
/// index is the left factor. The identity may sit at any index.
class FiniteMonoid {
public:
    /// Validates `rows` and builds the monoid. Checks run in the order
    /// shape, range, associativity, identity; the first violation is thrown
    /// as an Error carrying its witness. If `identity` is given it must be
    /// the identity of the table.
    static FiniteMonoid from_table(const Table & rows, std::optional<Element> identity = std::nullopt,
        std::string name = {});

    std::size_t order() const { return order_; }
    Element identity() const { return identity_; }
    const std::string & name() const { return name_; }

    Element product(Element s, Element t) const { return table_[s * order_ + t]; }
    std::span<const Element> row(Element s) const { return {table_.data() + s * order_, order_}; }
    Table rows() const;

    ElementSet none() const { return ElementSet(order_); }
    ElementSet all() const { return ElementSet::full(order_); }

    /// Same table and identity; the label is ignored.
    bool same_structure(const FiniteMonoid & other) const
    {
        return order_ == other.order_ && identity_ == other.identity_ && table_ == other.table_;
    }

    bool operator==(const FiniteMonoid &) const = default;

private:
    FiniteMonoid() = default;

    std::size_t order_ = 0;
    Element identity_ = 0;
    std::vector<Element> table_;
    std::string name_;
};

FiniteMonoid validate_monoid(const Table & rows);

bool is_right_invertible(const FiniteMonoid & S, Element s);

/// The set of right non-invertible elements: the unique maximal right ideal.
/// Empty exactly when S is a group.
ElementSet maximal_right_ideal(const FiniteMonoid & S);

/// Nonempty and closed under right multiplication by S.
bool is_right_ideal(const FiniteMonoid & S, const ElementSet & X);

/// A right ideal that is also closed under left multiplication by S.
bool is_two_sided(const FiniteMonoid & S, const ElementSet & X);

/// st = 1 implies ts = 1 for all s, t.
bool check_unit_symmetry(const FiniteMonoid & S);

ElementSet idempotents(const FiniteMonoid & S);
bool is_commutative(const FiniteMonoid & S);

/// sS
ElementSet principal_right_ideal(const FiniteMonoid & S, Element s);

/// All right ideals in canonical order, generated as unions of principal
/// right ideals.
std::vector<ElementSet> enumerate_right_ideals(const FiniteMonoid & S, bool proper_only);

/// Reference strategy: filters every nonempty subset. Exponential in the
/// order; kept for cross-checking.
std::vector<ElementSet> enumerate_right_ideals_naive(const FiniteMonoid & S, bool proper_only);

/// IJ = {st | s in I, t in J}
ElementSet ideal_product(const FiniteMonoid & S, const ElementSet & I, const ElementSet & J);

/// I^n for n >= 1. Throws std::invalid_argument for n = 0.
ElementSet ideal_power(const FiniteMonoid & S, const ElementSet & I, unsigned n);

/// S/I for a two-sided proper ideal I. Elements outside I keep their relative
/// order; the zero class [I] is the last element.
struct QuotientMonoid {
    FiniteMonoid monoid;
    std::vector<Element> carrier_map;
    Element zero_class;
};

QuotientMonoid rees_quotient_monoid(const FiniteMonoid & S, const ElementSet & I);

/// An identity-preserving, product-preserving bijection S -> T, if any.
/// `result[s]` is the image of s.
std::optional<std::vector<Element>> monoid_isomorphic(const FiniteMonoid & S, const FiniteMonoid & T);

/// True if `map` is a bijective homomorphism S -> T that sends 1 to 1.
bool is_monoid_isomorphism(const FiniteMonoid & S, const FiniteMonoid & T, std::span<const Element> map);

/// The two-sided zero of S (zs = sz = z for all s), if there is one.
std::optional<Element> monoid_zero(const FiniteMonoid & S);

/// The table obtained by renaming every element x to perm[x].
FiniteMonoid relabel(const FiniteMonoid & S, std::span<const Element> perm);

} // namespace actlab
