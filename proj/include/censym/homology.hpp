#ifndef CENSYM_HOMOLOGY_HPP
#define CENSYM_HOMOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "censym/complex.hpp"

namespace censym {

using MatZ = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

// Boundary map from k-chains to (k-1)-chains with the usual alternating
// signs; faces of each dimension are indexed lexicographically. k = 0 gives
// the augmentation-free zero map (0 rows).
MatZ boundary_matrix(const Complex& c, int k);

/// Diagonal invariant factors d_1 | d_2 | ... | d_r (all positive) of an
/// integer matrix, plus its rank.
struct SmithResult {
    std::vector<std::int64_t> invariants;
    int rank() const { return static_cast<int>(invariants.size()); }
};

// Throws std::overflow_error if intermediate entries leave int64 range.
SmithResult smith_normal_form(MatZ a);

/// Integral homology of a complex, one entry per dimension 0..dim.
struct HomologyGroups {
    std::vector<int> betti;                              // ranks of H_k
    std::vector<std::vector<std::int64_t>> torsion;      // factors > 1 of H_k

    // betti with H_0 lowered by one (reduced homology).
    std::vector<int> reduced_betti() const;
};

HomologyGroups homology(const Complex& c);

bool is_orientable(const Complex& c);

// "b0,b1,...,bd" with torsion appended as e.g. "9+Z2"; matches the notation
// used in the result tables.
std::string homology_string(const HomologyGroups& h);

} // namespace censym

#endif
