#include <actlab/monoid.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace actlab {

using std::optional;
using std::size_t;
using std::to_string;
using std::vector;

FiniteMonoid FiniteMonoid::from_table(const Table & rows, optional<Element> identity, std::string name)
{
    const size_t n = rows.size();
    if (n == 0)
        throw Error(ErrorKind::Malformed, "monoid table is empty");
    if (n > max_carrier)
        throw Error(ErrorKind::TooLarge, "monoid order " + to_string(n) + " exceeds " + to_string(max_carrier));
    for (size_t s = 0; s < n; ++s)
        if (rows[s].size() != n)
            throw Error(ErrorKind::Malformed, "row " + to_string(s) + " has " + to_string(rows[s].size())
                    + " entries, expected " + to_string(n), {static_cast<Element>(s)});

    FiniteMonoid m;
    m.order_ = n;
    m.name_ = std::move(name);
    m.table_.reserve(n * n);
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            auto v = rows[s][t];
            if (v >= n)
                throw Error(ErrorKind::OutOfRangeEntry, "entry (" + to_string(s) + ", " + to_string(t) + ") = "
                        + to_string(v) + " is out of range", {static_cast<Element>(s), static_cast<Element>(t)});
            m.table_.push_back(v);
        }

    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t)
            for (Element u = 0; u < n; ++u)
                if (m.product(m.product(s, t), u) != m.product(s, m.product(t, u)))
                    throw Error(ErrorKind::NotAssociative, "(st)u != s(tu) for s=" + to_string(s) + ", t="
                            + to_string(t) + ", u=" + to_string(u), {s, t, u});

    auto is_identity = [&](Element e) {
        for (Element x = 0; x < n; ++x)
            if (m.product(e, x) != x || m.product(x, e) != x)
                return false;
        return true;
    };

    if (identity) {
        if (*identity >= n || ! is_identity(*identity))
            throw Error(ErrorKind::NoIdentity, "declared identity " + to_string(*identity) + " is not an identity",
                {*identity});
        m.identity_ = *identity;
    }
    else {
        Element e = 0;
        while (e < n && ! is_identity(e))
            ++e;
        if (e == n)
            throw Error(ErrorKind::NoIdentity, "table has no identity element");
        m.identity_ = e;
    }
    return m;
}

Table FiniteMonoid::rows() const
{
    Table out(order_);
    for (size_t s = 0; s < order_; ++s)
        out[s].assign(table_.begin() + s * order_, table_.begin() + (s + 1) * order_);
    return out;
}

FiniteMonoid validate_monoid(const Table & rows)
{
    return FiniteMonoid::from_table(rows);
}

bool is_right_invertible(const FiniteMonoid & S, Element s)
{
    if (s >= S.order())
        throw std::out_of_range("element outside monoid");
    for (Element t = 0; t < S.order(); ++t)
        if (S.product(s, t) == S.identity())
            return true;
    return false;
}

ElementSet maximal_right_ideal(const FiniteMonoid & S)
{
    ElementSet out = S.none();
    for (Element s = 0; s < S.order(); ++s)
        if (! is_right_invertible(S, s))
            out.insert(s);
    return out;
}

bool is_right_ideal(const FiniteMonoid & S, const ElementSet & X)
{
    if (X.empty() || X.universe() != S.order())
        return false;
    bool closed = true;
    X.for_each([&](Element s) {
        for (Element t = 0; t < S.order() && closed; ++t)
            closed = X.contains(S.product(s, t));
    });
    return closed;
}

bool is_two_sided(const FiniteMonoid & S, const ElementSet & X)
{
    if (! is_right_ideal(S, X))
        return false;
    bool closed = true;
    X.for_each([&](Element s) {
        for (Element t = 0; t < S.order() && closed; ++t)
            closed = X.contains(S.product(t, s));
    });
    return closed;
}

bool check_unit_symmetry(const FiniteMonoid & S)
{
    for (Element s = 0; s < S.order(); ++s)
        for (Element t = 0; t < S.order(); ++t)
            if (S.product(s, t) == S.identity() && S.product(t, s) != S.identity())
                return false;
    return true;
}

ElementSet idempotents(const FiniteMonoid & S)
{
    ElementSet out = S.none();
    for (Element s = 0; s < S.order(); ++s)
        if (S.product(s, s) == s)
            out.insert(s);
    return out;
}

bool is_commutative(const FiniteMonoid & S)
{
    for (Element s = 0; s < S.order(); ++s)
        for (Element t = s + 1; t < S.order(); ++t)
            if (S.product(s, t) != S.product(t, s))
                return false;
    return true;
}

ElementSet principal_right_ideal(const FiniteMonoid & S, Element s)
{
    ElementSet out = S.none();
    for (auto v : S.row(s))
        out.insert(v);
    return out;
}

std::vector<ElementSet> enumerate_right_ideals(const FiniteMonoid & S, bool proper_only)
{
    // Every right ideal is the union of the principal right ideals of its
    // members, so the ideals are exactly the nonempty unions of principals.
    vector<ElementSet> principals;
    for (Element s = 0; s < S.order(); ++s) {
        auto p = principal_right_ideal(S, s);
        if (std::find(principals.begin(), principals.end(), p) == principals.end())
            principals.push_back(p);
    }

    std::set<std::uint64_t> seen;
    vector<ElementSet> frontier;
    for (auto & p : principals)
        if (seen.insert(p.mask()).second)
            frontier.push_back(p);
    vector<ElementSet> out = frontier;
    while (! frontier.empty()) {
        vector<ElementSet> next;
        for (auto & f : frontier)
            for (auto & p : principals) {
                auto u = f | p;
                if (seen.insert(u.mask()).second) {
                    next.push_back(u);
                    out.push_back(u);
                }
            }
        frontier = std::move(next);
    }

    if (proper_only)
        std::erase_if(out, [](const ElementSet & x) { return x.is_full(); });
    sort_canonical(out);
    return out;
}

std::vector<ElementSet> enumerate_right_ideals_naive(const FiniteMonoid & S, bool proper_only)
{
    vector<ElementSet> out;
    const std::uint64_t limit = std::uint64_t{1} << S.order();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        ElementSet X(S.order(), mask);
        if (proper_only && X.is_full())
            continue;
        if (is_right_ideal(S, X))
            out.push_back(X);
    }
    sort_canonical(out);
    return out;
}

ElementSet ideal_product(const FiniteMonoid & S, const ElementSet & I, const ElementSet & J)
{
    ElementSet out = S.none();
    I.for_each([&](Element s) { J.for_each([&](Element t) { out.insert(S.product(s, t)); }); });
    return out;
}

ElementSet ideal_power(const FiniteMonoid & S, const ElementSet & I, unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("ideal powers start at 1");
    ElementSet out = I;
    for (unsigned k = 1; k < n; ++k)
        out = ideal_product(S, out, I);
    return out;
}

QuotientMonoid rees_quotient_monoid(const FiniteMonoid & S, const ElementSet & I)
{
    if (! is_two_sided(S, I))
        throw Error(ErrorKind::NotTwoSided, "Rees quotient needs a two-sided ideal");
    if (I.is_full())
        throw Error(ErrorKind::NotTwoSided, "Rees quotient needs a proper ideal");

    const size_t n = S.order();
    vector<Element> carrier(n);
    Element next = 0;
    for (Element s = 0; s < n; ++s)
        if (! I.contains(s))
            carrier[s] = next++;
    const Element zero = next;
    for (Element s = 0; s < n; ++s)
        if (I.contains(s))
            carrier[s] = zero;

    vector<Element> rep(zero + 1);
    for (Element s = 0; s < n; ++s)
        rep[carrier[s]] = s;

    Table rows(zero + 1, vector<Element>(zero + 1));
    for (Element x = 0; x <= zero; ++x)
        for (Element y = 0; y <= zero; ++y)
            rows[x][y] = carrier[S.product(rep[x], rep[y])];

    std::string name = S.name().empty() ? std::string{} : S.name() + "/I";
    return {FiniteMonoid::from_table(rows, carrier[S.identity()], std::move(name)), std::move(carrier), zero};
}

bool is_monoid_isomorphism(const FiniteMonoid & S, const FiniteMonoid & T, std::span<const Element> map)
{
    const size_t n = S.order();
    if (T.order() != n || map.size() != n)
        return false;
    vector<bool> hit(n, false);
    for (auto v : map) {
        if (v >= n || hit[v])
            return false;
        hit[v] = true;
    }
    if (map[S.identity()] != T.identity())
        return false;
    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t)
            if (map[S.product(s, t)] != T.product(map[s], map[t]))
                return false;
    return true;
}

namespace {

    // Isomorphism-invariant fingerprint of a single element.
    using ElementInvariant = std::array<std::size_t, 6>;

    ElementInvariant element_invariant(const FiniteMonoid & S, Element s)
    {
        // index and period of the cyclic subsemigroup generated by s
        vector<Element> powers{s};
        std::size_t index = 0, period = 0;
        for (;;) {
            auto next = S.product(powers.back(), s);
            auto it = std::find(powers.begin(), powers.end(), next);
            if (it != powers.end()) {
                index = static_cast<std::size_t>(it - powers.begin());
                period = powers.size() - index;
                break;
            }
            powers.push_back(next);
        }
        std::size_t left_fixed = 0;
        for (Element t = 0; t < S.order(); ++t)
            left_fixed += S.product(t, s) == s;
        return {S.product(s, s) == s, is_right_invertible(S, s), principal_right_ideal(S, s).size(), index, period,
            left_fixed};
    }

    struct IsoSearch {
        const FiniteMonoid & S;
        const FiniteMonoid & T;
        vector<vector<Element>> candidates;
        vector<Element> order;

        static constexpr Element unset = ~Element{0};

        // Assigns s -> x and everything forced by products of assigned pairs.
        bool assign(vector<Element> & f, vector<Element> & inv, Element s, Element x) const
        {
            vector<std::pair<Element, Element>> pending{{s, x}};
            while (! pending.empty()) {
                auto [a, b] = pending.back();
                pending.pop_back();
                if (f[a] != unset) {
                    if (f[a] != b)
                        return false;
                    continue;
                }
                if (inv[b] != unset)
                    return false;
                if (std::find(candidates[a].begin(), candidates[a].end(), b) == candidates[a].end())
                    return false;
                f[a] = b;
                inv[b] = a;
                for (Element t = 0; t < S.order(); ++t) {
                    if (f[t] == unset)
                        continue;
                    pending.emplace_back(S.product(a, t), T.product(b, f[t]));
                    pending.emplace_back(S.product(t, a), T.product(f[t], b));
                }
            }
            return true;
        }

        bool search(vector<Element> & f, vector<Element> & inv, std::size_t depth) const
        {
            while (depth < order.size() && f[order[depth]] != unset)
                ++depth;
            if (depth == order.size())
                return true;
            Element s = order[depth];
            for (auto x : candidates[s]) {
                if (inv[x] != unset)
                    continue;
                auto f2 = f;
                auto inv2 = inv;
                if (assign(f2, inv2, s, x) && search(f2, inv2, depth + 1)) {
                    f = std::move(f2);
                    inv = std::move(inv2);
                    return true;
                }
            }
            return false;
        }
    };

} // namespace

optional<vector<Element>> monoid_isomorphic(const FiniteMonoid & S, const FiniteMonoid & T)
{
    const size_t n = S.order();
    if (T.order() != n)
        return std::nullopt;

    vector<ElementInvariant> inv_s(n), inv_t(n);
    for (Element s = 0; s < n; ++s) {
        inv_s[s] = element_invariant(S, s);
        inv_t[s] = element_invariant(T, s);
    }
    {
        auto a = inv_s, b = inv_t;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    IsoSearch search{S, T, vector<vector<Element>>(n), {}};
    for (Element s = 0; s < n; ++s)
        for (Element x = 0; x < n; ++x)
            if (inv_s[s] == inv_t[x])
                search.candidates[s].push_back(x);
    search.order.resize(n);
    std::iota(search.order.begin(), search.order.end(), Element{0});
    std::stable_sort(search.order.begin(), search.order.end(),
        [&](Element a, Element b) { return search.candidates[a].size() < search.candidates[b].size(); });

    vector<Element> f(n, IsoSearch::unset), inv(n, IsoSearch::unset);
    if (! search.assign(f, inv, S.identity(), T.identity()))
        return std::nullopt;
    if (! search.search(f, inv, 0))
        return std::nullopt;
    return f;
}

optional<Element> monoid_zero(const FiniteMonoid & S)
{
    for (Element z = 0; z < S.order(); ++z) {
        bool zero = true;
        for (Element s = 0; s < S.order() && zero; ++s)
            zero = S.product(z, s) == z && S.product(s, z) == z;
        if (zero)
            return z;
    }
    return std::nullopt;
}

FiniteMonoid relabel(const FiniteMonoid & S, std::span<const Element> perm)
{
    const size_t n = S.order();
    if (perm.size() != n)
        throw std::invalid_argument("relabelling has the wrong length");
    Table rows(n, vector<Element>(n));
    for (Element s = 0; s < n; ++s)
        for (Element t = 0; t < n; ++t)
            rows[perm[s]][perm[t]] = perm[S.product(s, t)];
    return FiniteMonoid::from_table(rows, perm[S.identity()], S.name());
}

} // namespace actlab
