#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <actlab/monoid.hpp>

namespace actlab {

using MonoidPtr = std::shared_ptr<const FiniteMonoid>;

/// A finite right S-act. `act(a, s)` is a·s; the host monoid is shared and
/// immutable.
class FiniteAct {
public:
    /// Validates shape, range, the unit law a·1 = a and compatibility
    /// a·(st) = (a·s)·t, in that order.
    static FiniteAct from_table(MonoidPtr host, const Table & rows, std::string name = {});

    std::size_t size() const { return size_; }
    const FiniteMonoid & monoid() const { return *host_; }
    const MonoidPtr & host() const { return host_; }
    const std::string & name() const { return name_; }

    Element act(Element a, Element s) const { return action_[a * host_->order() + s]; }
    Table rows() const;

    ActSubset none() const { return ActSubset(size_); }
    ActSubset all() const { return ActSubset::full(size_); }

    bool same_structure(const FiniteAct & other) const
    {
        return size_ == other.size_ && action_ == other.action_ && host_->same_structure(*other.host_);
    }

    bool operator==(const FiniteAct & other) const
    {
        return same_structure(other) && name_ == other.name_ && *host_ == *other.host_;
    }

private:
    FiniteAct() = default;

    std::size_t size_ = 0;
    MonoidPtr host_;
    std::vector<Element> action_;
    std::string name_;
};

/// An equivariant map between acts: map[a] is the image of a.
struct ActMorphism {
    std::vector<Element> map;
};

FiniteAct validate_act(MonoidPtr host, const Table & rows);

bool is_equivariant(const FiniteAct & domain, const FiniteAct & codomain, std::span<const Element> map);

ActSubset zeros(const FiniteAct & A);
std::optional<Element> unique_zero(const FiniteAct & A);

/// Nonempty and closed under the action.
bool is_subact(const FiniteAct & A, const ActSubset & X);

/// XS, the smallest subact containing X.
ActSubset subact_generated(const FiniteAct & A, const ActSubset & X);

/// aS
ActSubset cyclic_subact(const FiniteAct & A, Element a);

/// Every subact, canonical order. Built as the union-closure of the cyclic
/// subacts aS.
std::vector<ActSubset> all_subacts(const FiniteAct & A);

/// Filters all nonempty subsets; cross-check only.
std::vector<ActSubset> all_subacts_naive(const FiniteAct & A);

/// Proper subacts not strictly contained in another proper subact.
std::vector<ActSubset> maximal_subacts(const FiniteAct & A);

struct ReesFactor {
    FiniteAct act;
    ActMorphism projection;
    Element zero_class;
};

/// A/B. The class of B takes the position of min(B); other elements keep
/// their relative order, so collapsing a singleton is the identity map.
ReesFactor rees_factor(const FiniteAct & A, const ActSubset & B);

/// AI = {as | a in A, s in I} for a right ideal I.
ActSubset act_ideal_product(const FiniteAct & A, const ElementSet & I);

/// A subact as a standalone act; elements renumbered in ascending order.
struct RestrictedAct {
    FiniteAct act;
    ActMorphism inclusion;
};

RestrictedAct restrict_to(const FiniteAct & A, const ActSubset & B);

bool is_generating(const FiniteAct & A, const ActSubset & X);

/// All inclusion-minimal generating sets, by ascending size then canonical
/// order.
std::vector<ActSubset> minimal_generating_sets(const FiniteAct & A);

/// a·s = a forces s outside the maximal right ideal, for every a other than
/// the unique zero (when A has exactly one zero).
bool is_quasi_strongly_faithful(const FiniteAct & A);
bool is_quasi_strongly_faithful(const FiniteAct & A, const ElementSet & maximal_ideal);

/// Equivariant bijection A -> B, if one exists. Both acts must be over the
/// same monoid table.
std::optional<ActMorphism> act_isomorphic(const FiniteAct & A, const FiniteAct & B);

/// Connected components of the graph a -- a·s, ordered by smallest member.
std::vector<ActSubset> decompose_indecomposable(const FiniteAct & A);

struct ProjectivityVerdict {
    bool projective = false;
    /// Per component (in decomposition order): the smallest idempotent e with
    /// component ≅ eS, if any.
    std::vector<std::optional<Element>> idempotent_witness;
};

struct FreenessVerdict {
    bool free = false;
    /// Number of components; meaningful when `free`.
    std::size_t rank = 0;
};

ProjectivityVerdict is_projective(const FiniteAct & A);
FreenessVerdict is_free(const FiniteAct & A);

/// Elements of A first, then elements of B shifted by |A|.
FiniteAct disjoint_union(const FiniteAct & A, const FiniteAct & B);

/// The act A/AI over S/I: π(a)·[s] = π(a·s) for s outside I, and the zero
/// class of S/I sends everything to the zero of A/AI.
struct InducedQuotient {
    QuotientMonoid quotient;
    FiniteAct act;
    ActMorphism projection;
    Element zero_class;
};

InducedQuotient induced_quotient_act(const FiniteAct & A, const ElementSet & I);

/// Re-host an act on an equal monoid table (used when decoding acts whose
/// monoid was given separately).
FiniteAct with_host(const FiniteAct & A, MonoidPtr host);

/// Act with every element renamed a -> perm[a].
FiniteAct relabel(const FiniteAct & A, std::span<const Element> perm);

} // namespace actlab

namespace actlab {

/// S as an act over itself.
FiniteAct regular_act(MonoidPtr S);

/// m points, a·s = a.
FiniteAct trivial_act(MonoidPtr S, std::size_t m);

/// sS with the restricted action; elements numbered in ascending order of
/// their value in S.
FiniteAct principal_act(MonoidPtr S, Element s);

} // namespace actlab
