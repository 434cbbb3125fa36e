#include <actlab/catalog.hpp>

#include <memory>

namespace actlab::catalog {

using std::size_t;
using std::vector;

namespace {
    MonoidPtr make(const Table & rows, std::optional<Element> identity, std::string name)
    {
        return std::make_shared<const FiniteMonoid>(FiniteMonoid::from_table(rows, identity, std::move(name)));
    }
} // namespace

MonoidPtr multiplicative_mod(size_t n)
{
    Table rows(n, vector<Element>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            rows[s][t] = static_cast<Element>((s * t) % n);
    return make(rows, n == 1 ? 0 : 1, "Z" + std::to_string(n) + "*");
}

MonoidPtr cyclic_group(size_t n)
{
    Table rows(n, vector<Element>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            rows[s][t] = static_cast<Element>((s + t) % n);
    return make(rows, 0, "C" + std::to_string(n));
}

MonoidPtr two_element_semilattice()
{
    return make({{0, 1}, {1, 1}}, 0, "{1,e}");
}

MonoidPtr full_transformation(size_t k)
{
    size_t n = 1;
    for (size_t i = 0; i < k; ++i)
        n *= k;
    auto decode = [&](size_t code) {
        vector<size_t> f(k);
        for (size_t i = 0; i < k; ++i, code /= k)
            f[i] = code % k;
        return f;
    };
    auto encode = [&](const vector<size_t> & f) {
        size_t code = 0;
        for (size_t i = k; i-- > 0;)
            code = code * k + f[i];
        return static_cast<Element>(code);
    };
    Table rows(n, vector<Element>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t) {
            auto f = decode(s), g = decode(t);
            vector<size_t> h(k);
            for (size_t i = 0; i < k; ++i)
                h[i] = g[f[i]];
            rows[s][t] = encode(h);
        }
    vector<size_t> id(k);
    for (size_t i = 0; i < k; ++i)
        id[i] = i;
    return make(rows, encode(id), "T" + std::to_string(k));
}

MonoidPtr direct_product(const FiniteMonoid & S, const FiniteMonoid & T)
{
    const size_t n = S.order(), m = T.order();
    Table rows(n * m, vector<Element>(n * m));
    for (Element s1 = 0; s1 < n; ++s1)
        for (Element t1 = 0; t1 < m; ++t1)
            for (Element s2 = 0; s2 < n; ++s2)
                for (Element t2 = 0; t2 < m; ++t2)
                    rows[s1 * m + t1][s2 * m + t2] = static_cast<Element>(S.product(s1, s2) * m + T.product(t1, t2));
    return make(rows, static_cast<Element>(S.identity() * m + T.identity()), S.name() + "x" + T.name());
}

MonoidPtr right_zero_with_identity(size_t k)
{
    const size_t n = k + 1;
    Table rows(n, vector<Element>(n));
    for (size_t s = 0; s < n; ++s)
        for (size_t t = 0; t < n; ++t)
            rows[s][t] = static_cast<Element>(t == k ? s : t);
    return make(rows, static_cast<Element>(k), "RZ" + std::to_string(k) + "+1");
}

} // namespace actlab::catalog
