#include <actlab/act.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace actlab {

using std::optional;
using std::size_t;
using std::to_string;
using std::vector;

FiniteAct FiniteAct::from_table(MonoidPtr host, const Table & rows, std::string name)
{
    if (! host)
        throw std::invalid_argument("act needs a host monoid");
    const size_t m = rows.size();
    const size_t n = host->order();
    if (m == 0)
        throw Error(ErrorKind::Malformed, "act carrier is empty");
    if (m > max_carrier)
        throw Error(ErrorKind::TooLarge, "act size " + to_string(m) + " exceeds " + to_string(max_carrier));
    for (size_t a = 0; a < m; ++a)
        if (rows[a].size() != n)
            throw Error(ErrorKind::Malformed, "action row " + to_string(a) + " has " + to_string(rows[a].size())
                    + " entries, expected " + to_string(n), {static_cast<Element>(a)});

    FiniteAct A;
    A.size_ = m;
    A.host_ = std::move(host);
    A.name_ = std::move(name);
    A.action_.reserve(m * n);
    for (size_t a = 0; a < m; ++a)
        for (size_t s = 0; s < n; ++s) {
            auto v = rows[a][s];
            if (v >= m)
                throw Error(ErrorKind::OutOfRangeEntry, "action entry (" + to_string(a) + ", " + to_string(s)
                        + ") = " + to_string(v) + " is out of range", {static_cast<Element>(a), static_cast<Element>(s)});
            A.action_.push_back(v);
        }

    const auto & S = *A.host_;
    for (Element a = 0; a < m; ++a)
        if (A.act(a, S.identity()) != a)
            throw Error(ErrorKind::UnitLawViolation, "a·1 != a for a=" + to_string(a), {a});
    for (Element a = 0; a < m; ++a)
        for (Element s = 0; s < n; ++s)
            for (Element t = 0; t < n; ++t)
                if (A.act(a, S.product(s, t)) != A.act(A.act(a, s), t))
                    throw Error(ErrorKind::CompatibilityViolation, "a(st) != (as)t for a=" + to_string(a) + ", s="
                            + to_string(s) + ", t=" + to_string(t), {a, s, t});
    return A;
}

Table FiniteAct::rows() const
{
    const size_t n = host_->order();
    Table out(size_);
    for (size_t a = 0; a < size_; ++a)
        out[a].assign(action_.begin() + a * n, action_.begin() + (a + 1) * n);
    return out;
}

FiniteAct validate_act(MonoidPtr host, const Table & rows)
{
    return FiniteAct::from_table(std::move(host), rows);
}

bool is_equivariant(const FiniteAct & domain, const FiniteAct & codomain, std::span<const Element> map)
{
    if (map.size() != domain.size() || ! domain.monoid().same_structure(codomain.monoid()))
        return false;
    for (auto v : map)
        if (v >= codomain.size())
            return false;
    for (Element a = 0; a < domain.size(); ++a)
        for (Element s = 0; s < domain.monoid().order(); ++s)
            if (map[domain.act(a, s)] != codomain.act(map[a], s))
                return false;
    return true;
}

ActSubset zeros(const FiniteAct & A)
{
    ActSubset out = A.none();
    for (Element a = 0; a < A.size(); ++a) {
        bool zero = true;
        for (Element s = 0; s < A.monoid().order() && zero; ++s)
            zero = A.act(a, s) == a;
        if (zero)
            out.insert(a);
    }
    return out;
}

optional<Element> unique_zero(const FiniteAct & A)
{
    auto z = zeros(A);
    if (z.size() != 1)
        return std::nullopt;
    return z.first();
}

bool is_subact(const FiniteAct & A, const ActSubset & X)
{
    if (X.empty() || X.universe() != A.size())
        return false;
    bool closed = true;
    X.for_each([&](Element a) {
        for (Element s = 0; s < A.monoid().order() && closed; ++s)
            closed = X.contains(A.act(a, s));
    });
    return closed;
}

ActSubset cyclic_subact(const FiniteAct & A, Element a)
{
    ActSubset out = A.none();
    for (Element s = 0; s < A.monoid().order(); ++s)
        out.insert(A.act(a, s));
    return out;
}

ActSubset subact_generated(const FiniteAct & A, const ActSubset & X)
{
    ActSubset out = A.none();
    X.for_each([&](Element a) { out = out | cyclic_subact(A, a); });
    return out;
}

std::vector<ActSubset> all_subacts(const FiniteAct & A)
{
    // Subacts are exactly the nonempty unions of cyclic subacts.
    vector<ActSubset> cyclic;
    for (Element a = 0; a < A.size(); ++a) {
        auto c = cyclic_subact(A, a);
        if (std::find(cyclic.begin(), cyclic.end(), c) == cyclic.end())
            cyclic.push_back(c);
    }
    std::set<std::uint64_t> seen;
    vector<ActSubset> out, frontier;
    for (auto & c : cyclic)
        if (seen.insert(c.mask()).second)
            frontier.push_back(c);
    out = frontier;
    while (! frontier.empty()) {
        vector<ActSubset> next;
        for (auto & f : frontier)
            for (auto & c : cyclic) {
                auto u = f | c;
                if (seen.insert(u.mask()).second) {
                    next.push_back(u);
                    out.push_back(u);
                }
            }
        frontier = std::move(next);
    }
    sort_canonical(out);
    return out;
}

std::vector<ActSubset> all_subacts_naive(const FiniteAct & A)
{
    vector<ActSubset> out;
    const std::uint64_t limit = std::uint64_t{1} << A.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        ActSubset X(A.size(), mask);
        if (is_subact(A, X))
            out.push_back(X);
    }
    sort_canonical(out);
    return out;
}

std::vector<ActSubset> maximal_subacts(const FiniteAct & A)
{
    auto subacts = all_subacts(A);
    std::erase_if(subacts, [](const ActSubset & x) { return x.is_full(); });
    vector<ActSubset> out;
    for (auto & b : subacts) {
        bool maximal = std::none_of(
            subacts.begin(), subacts.end(), [&](const ActSubset & c) { return b.is_proper_subset_of(c); });
        if (maximal)
            out.push_back(b);
    }
    return out;
}

ReesFactor rees_factor(const FiniteAct & A, const ActSubset & B)
{
    if (B.empty())
        throw Error(ErrorKind::EmptySubact, "Rees factor by an empty subset");
    if (! is_subact(A, B))
        throw Error(ErrorKind::NotASubact, "Rees factor by a subset that is not a subact");

    const size_t m = A.size();
    const Element first = *B.first();
    vector<Element> pi(m);
    vector<Element> rep;
    for (Element a = 0; a < m; ++a) {
        if (B.contains(a) && a != first)
            continue;
        pi[a] = static_cast<Element>(rep.size());
        rep.push_back(a);
    }
    const Element zero = pi[first];
    B.for_each([&](Element b) { pi[b] = zero; });

    Table rows(rep.size(), vector<Element>(A.monoid().order()));
    for (Element x = 0; x < rep.size(); ++x)
        for (Element s = 0; s < A.monoid().order(); ++s)
            rows[x][s] = pi[A.act(rep[x], s)];
    return {FiniteAct::from_table(A.host(), rows), ActMorphism{std::move(pi)}, zero};
}

ActSubset act_ideal_product(const FiniteAct & A, const ElementSet & I)
{
    if (! is_right_ideal(A.monoid(), I))
        throw std::invalid_argument("act_ideal_product needs a right ideal");
    ActSubset out = A.none();
    for (Element a = 0; a < A.size(); ++a)
        I.for_each([&](Element s) { out.insert(A.act(a, s)); });
    return out;
}

RestrictedAct restrict_to(const FiniteAct & A, const ActSubset & B)
{
    if (B.empty())
        throw Error(ErrorKind::EmptySubact, "cannot restrict to an empty subset");
    if (! is_subact(A, B))
        throw Error(ErrorKind::NotASubact, "cannot restrict to a subset that is not a subact");
    auto members = B.elements();
    vector<Element> index(A.size(), 0);
    for (Element i = 0; i < members.size(); ++i)
        index[members[i]] = i;
    Table rows(members.size(), vector<Element>(A.monoid().order()));
    for (Element i = 0; i < members.size(); ++i)
        for (Element s = 0; s < A.monoid().order(); ++s)
            rows[i][s] = index[A.act(members[i], s)];
    return {FiniteAct::from_table(A.host(), rows), ActMorphism{std::move(members)}};
}

bool is_generating(const FiniteAct & A, const ActSubset & X)
{
    return subact_generated(A, X).is_full();
}

std::vector<ActSubset> minimal_generating_sets(const FiniteAct & A)
{
    const size_t m = A.size();
    vector<std::uint64_t> cyclic(m);
    for (Element a = 0; a < m; ++a)
        cyclic[a] = cyclic_subact(A, a).mask();
    const auto full = A.all().mask();

    vector<ActSubset> out;
    for (size_t k = 1; k <= m; ++k) {
        // Gosper's hack: all masks of popcount k in increasing order.
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t limit = m == 64 ? 0 : std::uint64_t{1} << m;
        while (mask < limit || (m == 64 && mask != 0)) {
            bool covered = std::any_of(
                out.begin(), out.end(), [&](const ActSubset & g) { return (g.mask() & ~mask) == 0; });
            if (! covered) {
                std::uint64_t reach = 0;
                for (auto r = mask; r != 0; r &= r - 1)
                    reach |= cyclic[std::countr_zero(r)];
                if (reach == full)
                    out.emplace_back(m, mask);
            }
            auto c = mask & (~mask + 1);
            auto r = mask + c;
            if (r == 0)
                break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    sort_canonical(out);
    return out;
}

bool is_quasi_strongly_faithful(const FiniteAct & A, const ElementSet & maximal_ideal)
{
    auto zero = unique_zero(A);
    for (Element a = 0; a < A.size(); ++a) {
        if (zero && a == *zero)
            continue;
        bool fixed_by_non_unit = false;
        maximal_ideal.for_each([&](Element s) { fixed_by_non_unit = fixed_by_non_unit || A.act(a, s) == a; });
        if (fixed_by_non_unit)
            return false;
    }
    return true;
}

bool is_quasi_strongly_faithful(const FiniteAct & A)
{
    return is_quasi_strongly_faithful(A, maximal_right_ideal(A.monoid()));
}

namespace {

    struct ActInvariant {
        std::size_t orbit;
        std::uint64_t fixers;
        auto operator<=>(const ActInvariant &) const = default;
    };

    ActInvariant act_invariant(const FiniteAct & A, Element a)
    {
        std::uint64_t fixers = 0;
        for (Element s = 0; s < A.monoid().order(); ++s)
            if (A.act(a, s) == a)
                fixers |= std::uint64_t{1} << s;
        return {cyclic_subact(A, a).size(), fixers};
    }

    constexpr Element unset = ~Element{0};

    bool assign_act(const FiniteAct & A, const FiniteAct & B, const vector<ActInvariant> & inv_a,
        const vector<ActInvariant> & inv_b, vector<Element> & f, vector<Element> & g, Element a, Element b)
    {
        vector<std::pair<Element, Element>> pending{{a, b}};
        while (! pending.empty()) {
            auto [x, y] = pending.back();
            pending.pop_back();
            if (f[x] != unset) {
                if (f[x] != y)
                    return false;
                continue;
            }
            if (g[y] != unset || inv_a[x] != inv_b[y])
                return false;
            f[x] = y;
            g[y] = x;
            for (Element s = 0; s < A.monoid().order(); ++s)
                pending.emplace_back(A.act(x, s), B.act(y, s));
        }
        return true;
    }

    bool search_act(const FiniteAct & A, const FiniteAct & B, const vector<ActInvariant> & inv_a,
        const vector<ActInvariant> & inv_b, vector<Element> & f, vector<Element> & g)
    {
        Element x = 0;
        while (x < A.size() && f[x] != unset)
            ++x;
        if (x == A.size())
            return true;
        for (Element y = 0; y < B.size(); ++y) {
            if (g[y] != unset || inv_a[x] != inv_b[y])
                continue;
            auto f2 = f;
            auto g2 = g;
            if (assign_act(A, B, inv_a, inv_b, f2, g2, x, y) && search_act(A, B, inv_a, inv_b, f2, g2)) {
                f = std::move(f2);
                g = std::move(g2);
                return true;
            }
        }
        return false;
    }

} // namespace

optional<ActMorphism> act_isomorphic(const FiniteAct & A, const FiniteAct & B)
{
    if (! A.monoid().same_structure(B.monoid()))
        throw Error(ErrorKind::HostMismatch, "act isomorphism needs both acts over the same monoid");
    const size_t m = A.size();
    if (B.size() != m)
        return std::nullopt;

    vector<ActInvariant> inv_a(m), inv_b(m);
    for (Element a = 0; a < m; ++a) {
        inv_a[a] = act_invariant(A, a);
        inv_b[a] = act_invariant(B, a);
    }
    {
        auto x = inv_a, y = inv_b;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y)
            return std::nullopt;
    }
    vector<Element> f(m, unset), g(m, unset);
    if (! search_act(A, B, inv_a, inv_b, f, g))
        return std::nullopt;
    return ActMorphism{std::move(f)};
}

std::vector<ActSubset> decompose_indecomposable(const FiniteAct & A)
{
    const size_t m = A.size();
    vector<Element> parent(m);
    std::iota(parent.begin(), parent.end(), Element{0});
    auto find = [&](Element x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Element a = 0; a < m; ++a)
        for (Element s = 0; s < A.monoid().order(); ++s) {
            auto x = find(a), y = find(A.act(a, s));
            if (x != y)
                parent[std::max(x, y)] = std::min(x, y);
        }
    vector<ActSubset> out;
    vector<int> slot(m, -1);
    for (Element a = 0; a < m; ++a) {
        auto r = find(a);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.push_back(A.none());
        }
        out[slot[r]].insert(a);
    }
    return out;
}

ProjectivityVerdict is_projective(const FiniteAct & A)
{
    const auto & S = A.monoid();
    auto E = idempotents(S);
    vector<FiniteAct> candidates;
    vector<Element> candidate_idempotent;
    E.for_each([&](Element e) {
        candidates.push_back(principal_act(A.host(), e));
        candidate_idempotent.push_back(e);
    });

    ProjectivityVerdict out{true, {}};
    for (auto & component : decompose_indecomposable(A)) {
        auto piece = restrict_to(A, component).act;
        optional<Element> witness;
        for (size_t i = 0; i < candidates.size() && ! witness; ++i)
            if (candidates[i].size() == piece.size() && act_isomorphic(piece, candidates[i]))
                witness = candidate_idempotent[i];
        out.projective = out.projective && witness.has_value();
        out.idempotent_witness.push_back(witness);
    }
    return out;
}

FreenessVerdict is_free(const FiniteAct & A)
{
    auto S = regular_act(A.host());
    auto components = decompose_indecomposable(A);
    for (auto & component : components) {
        if (component.size() != S.size())
            return {false, 0};
        if (! act_isomorphic(restrict_to(A, component).act, S))
            return {false, 0};
    }
    return {true, components.size()};
}

FiniteAct disjoint_union(const FiniteAct & A, const FiniteAct & B)
{
    if (! A.monoid().same_structure(B.monoid()))
        throw Error(ErrorKind::HostMismatch, "disjoint union needs both acts over the same monoid");
    auto rows = A.rows();
    const auto shift = static_cast<Element>(A.size());
    for (auto row : B.rows()) {
        for (auto & v : row)
            v += shift;
        rows.push_back(std::move(row));
    }
    return FiniteAct::from_table(A.host(), rows);
}

InducedQuotient induced_quotient_act(const FiniteAct & A, const ElementSet & I)
{
    auto quotient = rees_quotient_monoid(A.monoid(), I);
    auto factor = rees_factor(A, act_ideal_product(A, I));
    auto host = std::make_shared<const FiniteMonoid>(quotient.monoid);

    constexpr Element unfilled = ~Element{0};
    const auto & pi = factor.projection.map;
    Table rows(factor.act.size(), vector<Element>(host->order(), unfilled));
    for (Element a = 0; a < A.size(); ++a)
        for (Element s = 0; s < A.monoid().order(); ++s) {
            auto & cell = rows[pi[a]][quotient.carrier_map[s]];
            auto value = pi[A.act(a, s)];
            if (quotient.carrier_map[s] == quotient.zero_class && value != factor.zero_class)
                throw Error(ErrorKind::WellDefinednessFailure, "zero class of S/I does not act as zero", {a, s});
            if (cell != unfilled && cell != value)
                throw Error(ErrorKind::WellDefinednessFailure,
                    "action of S/I on A/AI depends on the representative", {a, s});
            cell = value;
        }
    return {std::move(quotient), FiniteAct::from_table(host, rows), std::move(factor.projection), factor.zero_class};
}

FiniteAct with_host(const FiniteAct & A, MonoidPtr host)
{
    if (! host || ! host->same_structure(A.monoid()))
        throw Error(ErrorKind::HostMismatch, "replacement host has a different table");
    return FiniteAct::from_table(std::move(host), A.rows(), A.name());
}

FiniteAct relabel(const FiniteAct & A, std::span<const Element> perm)
{
    if (perm.size() != A.size())
        throw std::invalid_argument("relabelling has the wrong length");
    Table rows(A.size(), vector<Element>(A.monoid().order()));
    for (Element a = 0; a < A.size(); ++a)
        for (Element s = 0; s < A.monoid().order(); ++s)
            rows[perm[a]][s] = perm[A.act(a, s)];
    return FiniteAct::from_table(A.host(), rows, A.name());
}

FiniteAct regular_act(MonoidPtr S)
{
    auto rows = S->rows();
    return FiniteAct::from_table(std::move(S), rows);
}

FiniteAct trivial_act(MonoidPtr S, std::size_t m)
{
    Table rows(m);
    for (Element a = 0; a < m; ++a)
        rows[a].assign(S->order(), a);
    return FiniteAct::from_table(std::move(S), rows);
}

FiniteAct principal_act(MonoidPtr S, Element s)
{
    auto regular = regular_act(S);
    return restrict_to(regular, ActSubset(S->order(), principal_right_ideal(*S, s).mask())).act;
}

} // namespace actlab
