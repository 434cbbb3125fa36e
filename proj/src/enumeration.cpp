#include <actlab/enumeration.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace actlab {

using std::size_t;
using std::vector;

namespace {

    constexpr Element unset = ~Element{0};

    // Partial Cayley table with the identity fixed at index 0.
    struct PartialTable {
        size_t n;
        vector<Element> cells;

        explicit PartialTable(size_t order) : n(order), cells(order * order, unset)
        {
            for (Element x = 0; x < n; ++x) {
                at(0, x) = x;
                at(x, 0) = x;
            }
        }

        Element & at(Element s, Element t) { return cells[s * n + t]; }
        Element at(Element s, Element t) const { return cells[s * n + t]; }

        // Associativity on every triple whose four products are known.
        bool consistent() const
        {
            for (Element x = 1; x < n; ++x)
                for (Element y = 1; y < n; ++y) {
                    auto xy = at(x, y);
                    if (xy == unset)
                        continue;
                    for (Element z = 1; z < n; ++z) {
                        auto yz = at(y, z);
                        if (yz == unset)
                            continue;
                        auto left = at(xy, z);
                        auto right = at(x, yz);
                        if (left != unset && right != unset && left != right)
                            return false;
                    }
                }
            return true;
        }
    };

    using Invariant = std::array<size_t, 7>;

    Invariant table_invariant(const PartialTable & T, Element s)
    {
        const size_t n = T.n;
        vector<Element> powers{s};
        size_t index = 0, period = 0;
        for (;;) {
            auto next = T.at(powers.back(), s);
            auto it = std::find(powers.begin(), powers.end(), next);
            if (it != powers.end()) {
                index = static_cast<size_t>(it - powers.begin());
                period = powers.size() - index;
                break;
            }
            powers.push_back(next);
        }
        std::uint64_t right = 0, left = 0;
        size_t right_fixed = 0, left_fixed = 0;
        bool invertible = false;
        for (Element t = 0; t < n; ++t) {
            right |= std::uint64_t{1} << T.at(s, t);
            left |= std::uint64_t{1} << T.at(t, s);
            right_fixed += T.at(t, s) == s;
            left_fixed += T.at(s, t) == t;
            invertible = invertible || T.at(s, t) == 0;
        }
        return {T.at(s, s) == s, invertible, static_cast<size_t>(std::popcount(right)),
            static_cast<size_t>(std::popcount(left)), index * 64 + period, right_fixed, left_fixed};
    }

    // Compares the table relabelled by `perm` with T in row-major order of
    // the new labels. Negative if the relabelled table is smaller.
    int compare_relabelled(const PartialTable & T, const vector<Element> & perm, const vector<Element> & inverse)
    {
        const size_t n = T.n;
        for (Element i = 0; i < n; ++i)
            for (Element j = 0; j < n; ++j) {
                auto relabelled = perm[T.at(inverse[i], inverse[j])];
                auto original = T.at(i, j);
                if (relabelled != original)
                    return relabelled < original ? -1 : 1;
            }
        return 0;
    }

    // Visits every permutation of {1..n-1} that maps each block of equal
    // invariants onto itself. `visit` returns false to stop.
    template <class F>
    bool for_each_block_permutation(const vector<std::pair<size_t, size_t>> & blocks, vector<Element> & perm,
        size_t block, F && visit)
    {
        if (block == blocks.size())
            return visit();
        auto [lo, hi] = blocks[block];
        std::sort(perm.begin() + lo, perm.begin() + hi);
        do {
            if (! for_each_block_permutation(blocks, perm, block + 1, visit))
                return false;
        } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
        return true;
    }

    bool is_canonical(const PartialTable & T)
    {
        const size_t n = T.n;
        vector<Invariant> inv(n);
        for (Element s = 1; s < n; ++s)
            inv[s] = table_invariant(T, s);
        for (Element s = 2; s < n; ++s)
            if (inv[s] < inv[s - 1])
                return false;

        vector<std::pair<size_t, size_t>> blocks;
        for (size_t lo = 1; lo < n;) {
            size_t hi = lo + 1;
            while (hi < n && inv[hi] == inv[lo])
                ++hi;
            if (hi - lo > 1)
                blocks.emplace_back(lo, hi);
            lo = hi;
        }

        vector<Element> perm(n), inverse(n);
        std::iota(perm.begin(), perm.end(), Element{0});
        bool minimal = true;
        for_each_block_permutation(blocks, perm, 0, [&] {
            for (Element x = 0; x < n; ++x)
                inverse[perm[x]] = x;
            if (compare_relabelled(T, perm, inverse) < 0)
                minimal = false;
            return minimal;
        });
        return minimal;
    }

    FiniteMonoid to_monoid(const PartialTable & T, std::string name)
    {
        Table rows(T.n, vector<Element>(T.n));
        for (Element s = 0; s < T.n; ++s)
            for (Element t = 0; t < T.n; ++t)
                rows[s][t] = T.at(s, t);
        return FiniteMonoid::from_table(rows, Element{0}, std::move(name));
    }

    void extend(PartialTable & T, size_t cell, const std::function<void(const FiniteMonoid &)> & visit, size_t & count)
    {
        const size_t n = T.n;
        const size_t free_cells = (n - 1) * (n - 1);
        if (cell == free_cells) {
            if (is_canonical(T))
                visit(to_monoid(T, "M" + std::to_string(n) + "." + std::to_string(count++)));
            return;
        }
        const auto s = static_cast<Element>(1 + cell / (n - 1));
        const auto t = static_cast<Element>(1 + cell % (n - 1));
        for (Element v = 0; v < n; ++v) {
            T.at(s, t) = v;
            if (T.consistent())
                extend(T, cell + 1, visit, count);
        }
        T.at(s, t) = unset;
    }

} // namespace

void for_each_monoid(size_t order, const std::function<void(const FiniteMonoid &)> & visit)
{
    if (order == 0 || order > max_carrier)
        throw std::invalid_argument("monoid order must be between 1 and 64");
    PartialTable T(order);
    size_t count = 0;
    extend(T, 0, visit, count);
}

vector<MonoidPtr> enumerate_monoids(size_t order)
{
    vector<MonoidPtr> out;
    for_each_monoid(order, [&](const FiniteMonoid & S) { out.push_back(std::make_shared<const FiniteMonoid>(S)); });
    return out;
}

vector<MonoidPtr> enumerate_monoids_naive(size_t order)
{
    if (order == 0 || order > 5)
        throw std::invalid_argument("naive monoid enumeration supports orders 1 to 5");
    const size_t n = order;
    const size_t free_cells = (n - 1) * (n - 1);
    vector<Element> digits(free_cells, 0);

    auto product = [&](Element s, Element t) -> Element {
        if (s == 0)
            return t;
        if (t == 0)
            return s;
        return digits[(s - 1) * (n - 1) + (t - 1)];
    };

    vector<Element> perm(n);
    std::set<vector<Element>> canonical;
    for (;;) {
        bool associative = true;
        for (Element x = 1; x < n && associative; ++x)
            for (Element y = 1; y < n && associative; ++y)
                for (Element z = 1; z < n && associative; ++z)
                    associative = product(product(x, y), z) == product(x, product(y, z));
        if (associative) {
            vector<Element> best;
            std::iota(perm.begin(), perm.end(), Element{0});
            do {
                vector<Element> relabelled(n * n);
                for (Element s = 0; s < n; ++s)
                    for (Element t = 0; t < n; ++t)
                        relabelled[perm[s] * n + perm[t]] = perm[product(s, t)];
                if (best.empty() || relabelled < best)
                    best = std::move(relabelled);
            } while (std::next_permutation(perm.begin() + 1, perm.end()));
            canonical.insert(std::move(best));
        }

        size_t i = 0;
        while (i < free_cells && ++digits[i] == n)
            digits[i++] = 0;
        if (i == free_cells)
            break;
    }

    vector<MonoidPtr> out;
    size_t k = 0;
    for (auto & flat : canonical) {
        Table rows(n, vector<Element>(n));
        for (Element s = 0; s < n; ++s)
            for (Element t = 0; t < n; ++t)
                rows[s][t] = flat[s * n + t];
        out.push_back(std::make_shared<const FiniteMonoid>(
            FiniteMonoid::from_table(rows, Element{0}, "N" + std::to_string(n) + "." + std::to_string(k++))));
    }
    return out;
}

namespace {
    ElementSet generated_submonoid(const FiniteMonoid & S, const vector<Element> & gens)
    {
        ElementSet reached = S.none();
        reached.insert(S.identity());
        vector<Element> frontier{S.identity()};
        while (! frontier.empty()) {
            vector<Element> next;
            for (auto x : frontier)
                for (auto g : gens) {
                    auto y = S.product(x, g);
                    if (! reached.contains(y)) {
                        reached.insert(y);
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        return reached;
    }
} // namespace

vector<Element> monoid_generating_set(const FiniteMonoid & S)
{
    vector<Element> gens;
    for (Element s = 0; s < S.order(); ++s)
        if (! generated_submonoid(S, gens).contains(s))
            gens.push_back(s);
    for (size_t i = gens.size(); i-- > 0;) {
        auto without = gens;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (generated_submonoid(S, without).is_full())
            gens = std::move(without);
    }
    return gens;
}

Table canonical_act_table(const FiniteAct & A)
{
    const size_t m = A.size(), n = A.monoid().order();
    vector<Element> perm(m);
    std::iota(perm.begin(), perm.end(), Element{0});
    Table best;
    Table candidate(m, vector<Element>(n));
    do {
        for (Element a = 0; a < m; ++a)
            for (Element s = 0; s < n; ++s)
                candidate[perm[a]][s] = perm[A.act(a, s)];
        if (best.empty() || candidate < best)
            best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

    // Backtracking over the images of the generators of S in T_m. Every
    // element s has a word: s = prev[s]·gen[s], reached from 1 by BFS.
    struct ActSearch {
        const FiniteMonoid & S;
        size_t m;
        vector<Element> gens;
        vector<Element> bfs;          // elements in BFS order, identity first
        vector<Element> prev;         // s = prev[s] · gens[via[s]]
        vector<size_t> via;
        vector<vector<Element>> image; // image[g][a] = a·gens[g]
        vector<vector<Element>> column; // column[s][a] = a·s, or unset
        std::set<Table> found;

        ActSearch(const FiniteMonoid & monoid, size_t size) :
            S(monoid), m(size), gens(monoid_generating_set(monoid)), prev(monoid.order(), unset),
            via(monoid.order(), 0), image(gens.size(), vector<Element>(size, unset)),
            column(monoid.order(), vector<Element>(size, unset))
        {
            vector<bool> seen(S.order(), false);
            seen[S.identity()] = true;
            bfs.push_back(S.identity());
            for (size_t i = 0; i < bfs.size(); ++i)
                for (size_t g = 0; g < gens.size(); ++g) {
                    auto y = S.product(bfs[i], gens[g]);
                    if (! seen[y]) {
                        seen[y] = true;
                        prev[y] = bfs[i];
                        via[y] = g;
                        bfs.push_back(y);
                    }
                }
            for (Element a = 0; a < m; ++a)
                column[S.identity()][a] = static_cast<Element>(a);
        }

        void derive_columns()
        {
            for (size_t i = 1; i < bfs.size(); ++i) {
                auto s = bfs[i];
                for (Element a = 0; a < m; ++a) {
                    auto x = column[prev[s]][a];
                    column[s][a] = x == unset ? unset : image[via[s]][x];
                }
            }
        }

        bool consistent() const
        {
            const size_t n = S.order();
            for (Element a = 0; a < m; ++a)
                for (Element s = 0; s < n; ++s) {
                    auto x = column[s][a];
                    if (x == unset)
                        continue;
                    for (Element t = 0; t < n; ++t) {
                        auto y = column[t][x];
                        auto z = column[S.product(s, t)][a];
                        if (y != unset && z != unset && y != z)
                            return false;
                    }
                }
            return true;
        }

        void leaf(const MonoidPtr & host)
        {
            Table rows(m, vector<Element>(S.order()));
            for (Element a = 0; a < m; ++a)
                for (Element s = 0; s < S.order(); ++s)
                    rows[a][s] = column[s][a];
            found.insert(canonical_act_table(FiniteAct::from_table(host, rows)));
        }

        void extend(const MonoidPtr & host, size_t cell)
        {
            if (cell == gens.size() * m) {
                leaf(host);
                return;
            }
            auto g = cell / m;
            auto a = cell % m;
            for (Element v = 0; v < m; ++v) {
                image[g][a] = v;
                derive_columns();
                if (consistent())
                    extend(host, cell + 1);
            }
            image[g][a] = unset;
            derive_columns();
        }
    };

} // namespace

vector<FiniteAct> enumerate_acts(MonoidPtr S, size_t size)
{
    if (size == 0 || size > max_carrier)
        throw std::invalid_argument("act size must be between 1 and 64");
    ActSearch search(*S, size);
    search.derive_columns();
    search.extend(S, 0);
    vector<FiniteAct> out;
    size_t k = 0;
    for (auto & rows : search.found)
        out.push_back(FiniteAct::from_table(S, rows, "A" + std::to_string(size) + "." + std::to_string(k++)));
    return out;
}

vector<FiniteAct> enumerate_acts_naive(MonoidPtr S, size_t size)
{
    const size_t m = size, n = S->order();
    if (m == 0)
        throw std::invalid_argument("act size must be positive");
    vector<Element> others;
    for (Element s = 0; s < n; ++s)
        if (s != S->identity())
            others.push_back(s);
    const size_t free_cells = m * others.size();

    Table rows(m, vector<Element>(n));
    for (Element a = 0; a < m; ++a)
        rows[a][S->identity()] = a;
    vector<Element> digits(free_cells, 0);
    vector<FiniteAct> reps;
    for (;;) {
        for (size_t i = 0; i < free_cells; ++i)
            rows[i / others.size()][others[i % others.size()]] = digits[i];
        bool compatible = true;
        for (Element a = 0; a < m && compatible; ++a)
            for (Element s = 0; s < n && compatible; ++s)
                for (Element t = 0; t < n && compatible; ++t)
                    compatible = rows[a][S->product(s, t)] == rows[rows[a][s]][t];
        if (compatible) {
            auto A = FiniteAct::from_table(S, rows);
            bool fresh = std::none_of(reps.begin(), reps.end(),
                [&](const FiniteAct & B) { return act_isomorphic(A, B).has_value(); });
            if (fresh)
                reps.push_back(std::move(A));
        }
        size_t i = 0;
        while (i < free_cells && ++digits[i] == m)
            digits[i++] = 0;
        if (i == free_cells)
            break;
    }
    return reps;
}

} // namespace actlab
