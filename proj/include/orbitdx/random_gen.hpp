#pragma once

#include <cstdint>

#include "orbitdx/jordan.hpp"
#include "orbitdx/orbit.hpp"

namespace orbitdx {

/// splitmix64 stream. Self-contained so that seeded runs reproduce
/// bit-exactly on every platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next();

    /// Uniform in [lo, hi], inclusive, by rejection.
    long uniform(long lo, long hi);

private:
    uint64_t state_;
};

/// Random element of Q(i) with numerators uniform in [-bound, bound] and
/// denominator 1; the imaginary part stays zero unless with_imaginary.
GaussianRational random_scalar(Rng& rng, long bound, bool with_imaginary);

CanonicalCoords random_coords(const TypeSequence& t, Rng& rng, long bound, bool with_imaginary);

/// Product of a random unit lower- and unit upper-triangular integer
/// matrix; determinant 1, so the inverse is integral as well.
Mat random_unitriangular_product(int n, Rng& rng, long bound);

/// g J g^{-1} for the flight-compatible normal form J of t. Always lies on
/// the orbit.
Mat random_conjugate_point(const TypeSequence& t, Rng& rng, long bound);

/// Random Jordan structure with 1 <= N <= max_total (small integer
/// eigenvalues, random chain partitions).
JordanStructure random_structure(Rng& rng, int max_total);

} // namespace orbitdx
