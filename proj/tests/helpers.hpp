// Shared utilities for the test suites.
#ifndef TESTS_HELPERS_HPP
#define TESTS_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "censym/canon.hpp"
#include "censym/complex.hpp"
#include "censym/involution.hpp"
#include "censym/io.hpp"

namespace helpers {

// Complex spanned by the orbit representatives in digit notation under the
// central involution on 2m labels.
inline censym::Complex from_orbits(const std::string& text, int m) {
    auto inv = censym::Involution::canonical(m);
    return censym::Complex(2 * m,
                           censym::orbit_closure(censym::facets_from_text(text), inv));
}

// Uniformly random relabeling of 1..n (seeded for reproducibility).
inline std::vector<censym::VertexLabel> random_permutation(int n, std::mt19937& rng) {
    std::vector<censym::VertexLabel> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace helpers

#endif
