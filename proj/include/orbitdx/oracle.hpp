#pragma once

#include <optional>
#include <vector>

#include "orbitdx/jordan.hpp"
#include "orbitdx/mat.hpp"
#include "orbitdx/orbit.hpp"

namespace orbitdx {

/**
 * Kernel filtration of (A - lambda I): dims[k] = dim ker (A - lambda I)^{k+1},
 * computed up to stabilization. The consecutive differences are the
 * conjugate partition of the chain lengths, which makes this the
 * independent ground truth for every Jordan-structure claim in the library.
 */
struct WeyrTable {
    GaussianRational eigenvalue;
    std::vector<int> dims;

    /// Algebraic multiplicity: the stabilized kernel dimension.
    int multiplicity() const { return dims.empty() ? 0 : dims.back(); }

    /// Chain lengths (non-increasing) recovered by conjugating the
    /// difference sequence.
    std::vector<int> chains() const;
};

WeyrTable weyr(const Mat& a, const GaussianRational& lambda);

/// Jordan structure of `a` given its exact spectrum. The list is validated:
/// every value must have a nontrivial kernel and the multiplicities must
/// sum to the matrix size; otherwise EigenvalueError.
JordanStructure jordan_structure_of(const Mat& a, const std::vector<GaussianRational>& eigenvalues);

struct OrbitReport {
    bool match = false;
    JordanStructure expected;
    std::optional<JordanStructure> found; // absent when the spectrum check failed
    std::vector<WeyrTable> tables;
    std::string note;
};

/// Membership test for the orbit of `j`: true iff `a` has exactly the
/// Jordan structure `j`. Mismatch is a report, not an error.
OrbitReport verify_on_orbit(const Mat& a, const JordanStructure& j);

/// Bundles a matrix with its structure after the oracle has confirmed the
/// membership; throws EigenvalueError when it has not.
OrbitPoint checked_orbit_point(Mat a, JordanStructure j);

} // namespace orbitdx
