#ifndef CENSYM_ENUMERATE_HPP
#define CENSYM_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "censym/canon.hpp"
#include "censym/complex.hpp"
#include "censym/homology.hpp"
#include "censym/involution.hpp"

namespace censym {

/// Counters describing one enumeration run.
struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t prunes_ridge_overuse = 0;
    std::uint64_t complete_candidates = 0;
    std::uint64_t rejected_span = 0;          // not all labels used
    std::uint64_t rejected_disconnected = 0;
    std::uint64_t rejected_link = 0;          // some vertex link breaks
    std::uint64_t rejected_nonminimal = 0;    // a smaller symmetric relabeling exists
    std::uint64_t rejected_invalid = 0;       // failed full manifold validation
    std::uint64_t duplicates_rejected = 0;
    std::uint64_t results_emitted = 0;
};

struct EnumerateOptions {
    int jobs = 1;
    int split_depth = 4;          // orbit choices per parallel task prefix
    std::string checkpoint_path;  // empty = no checkpointing
    bool resume = false;          // continue from checkpoint_path
};

/// One closed centrally symmetric manifold, classified.
struct EnumerationResult {
    Complex complex;
    std::vector<Simplex> orbit_reps; // complex = orbit_closure(orbit_reps)
    HomologyGroups homology;
    bool orientable = false;
    CanonicalForm canonical;
};

// All centrally symmetric triangulated closed surfaces on 2m vertices under
// the involution v <-> 2m+1-v, one per isomorphism class, sorted by
// canonical form. Deterministic for any job count.
std::vector<EnumerationResult> enumerate_cs_surfaces(
    int m, const EnumerateOptions& opt = {}, SearchStats* stats = nullptr);

// Same for triangulated closed 3-manifolds.
std::vector<EnumerationResult> enumerate_cs_3manifolds(
    int m, const EnumerateOptions& opt = {}, SearchStats* stats = nullptr);

} // namespace censym

#endif
