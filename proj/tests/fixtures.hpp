#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <actlab/catalog.hpp>
#include <actlab/enumeration.hpp>

namespace fixtures {

inline std::vector<actlab::MonoidPtr> monoids_up_to(std::size_t order)
{
    std::vector<actlab::MonoidPtr> out;
    for (std::size_t n = 1; n <= order; ++n)
        for (auto & S : actlab::enumerate_monoids(n))
            out.push_back(S);
    return out;
}

inline std::vector<actlab::Element> random_permutation(std::size_t n, std::mt19937 & rng)
{
    std::vector<actlab::Element> p(n);
    std::iota(p.begin(), p.end(), actlab::Element{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// {θ, a} over {1, e} with a·e = θ (θ at index 0).
inline actlab::FiniteAct theta_a()
{
    return actlab::FiniteAct::from_table(actlab::catalog::two_element_semilattice(), {{0, 0}, {1, 0}});
}

/// {0, 1, 1'} where 0, 1 are left zeros and 1' (index 2) is the identity.
inline actlab::MonoidPtr left_zero_with_identity()
{
    return std::make_shared<const actlab::FiniteMonoid>(
        actlab::FiniteMonoid::from_table({{0, 0, 0}, {1, 1, 1}, {0, 1, 2}}));
}

} // namespace fixtures
