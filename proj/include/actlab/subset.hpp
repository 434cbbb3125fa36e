#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace actlab {

/// Index of an element in a monoid or an act carrier.
using Element = std::uint32_t;

/// Largest carrier a monoid or act may have; subsets are single-word masks.
inline constexpr std::size_t max_carrier = 64;

struct MonoidElements;
struct ActElements;

/// A subset of a finite carrier {0, ..., universe-1} with bitset semantics.
/// The tag keeps subsets of monoid elements and of act elements apart.
template <class Tag>
class Subset {
public:
    Subset() = default;

    explicit Subset(std::size_t universe, std::uint64_t mask = 0) : universe_(universe), mask_(mask)
    {
        if (universe > max_carrier)
            throw std::length_error("subset universe exceeds 64 elements");
        if (universe < 64 && (mask >> universe) != 0)
            throw std::out_of_range("subset mask has members outside the universe");
    }

    Subset(std::size_t universe, std::initializer_list<Element> members) : Subset(universe)
    {
        for (auto m : members)
            insert(m);
    }

    static Subset full(std::size_t universe)
    {
        return Subset(universe, universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1));
    }

    static Subset from_elements(std::size_t universe, const std::vector<Element> & members)
    {
        Subset out(universe);
        for (auto m : members)
            out.insert(m);
        return out;
    }

    std::size_t universe() const { return universe_; }
    std::uint64_t mask() const { return mask_; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const { return mask_ == 0; }
    bool is_full() const { return *this == full(universe_); }

    bool contains(Element x) const { return x < universe_ && ((mask_ >> x) & 1U); }

    void insert(Element x)
    {
        if (x >= universe_)
            throw std::out_of_range("element outside subset universe");
        mask_ |= std::uint64_t{1} << x;
    }

    void erase(Element x)
    {
        if (x < universe_)
            mask_ &= ~(std::uint64_t{1} << x);
    }

    bool is_subset_of(const Subset & other) const { return (mask_ & ~other.mask_) == 0; }
    bool is_proper_subset_of(const Subset & other) const { return is_subset_of(other) && mask_ != other.mask_; }

    Subset operator|(const Subset & o) const { return Subset(universe_, mask_ | o.mask_); }
    Subset operator&(const Subset & o) const { return Subset(universe_, mask_ & o.mask_); }
    Subset minus(const Subset & o) const { return Subset(universe_, mask_ & ~o.mask_); }
    Subset complement() const { return full(universe_).minus(*this); }

    template <class F>
    void for_each(F && f) const
    {
        for (auto m = mask_; m != 0; m &= m - 1)
            f(static_cast<Element>(std::countr_zero(m)));
    }

    std::vector<Element> elements() const
    {
        std::vector<Element> out;
        out.reserve(size());
        for_each([&](Element x) { out.push_back(x); });
        return out;
    }

    std::optional<Element> first() const
    {
        if (mask_ == 0)
            return std::nullopt;
        return static_cast<Element>(std::countr_zero(mask_));
    }

    bool operator==(const Subset &) const = default;

private:
    std::size_t universe_ = 0;
    std::uint64_t mask_ = 0;
};

/// Ascending cardinality, then lexicographic on the sorted member lists.
/// This is the deterministic order every enumerated list of subsets uses.
template <class Tag>
bool canonical_less(const Subset<Tag> & a, const Subset<Tag> & b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    auto diff = a.mask() ^ b.mask();
    if (diff == 0)
        return false;
    return (a.mask() & (diff & (~diff + 1))) != 0;
}

template <class Tag>
void sort_canonical(std::vector<Subset<Tag>> & sets)
{
    std::sort(sets.begin(), sets.end(), [](const auto & a, const auto & b) { return canonical_less(a, b); });
}

using ElementSet = Subset<MonoidElements>;
using ActSubset = Subset<ActElements>;

} // namespace actlab
