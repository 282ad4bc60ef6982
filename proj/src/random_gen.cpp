#include "orbitdx/random_gen.hpp"

#include <algorithm>

namespace orbitdx {

uint64_t Rng::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    if (lo > hi)
        throw IndexError("empty range in Rng::uniform");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
}

GaussianRational random_scalar(Rng& rng, long bound, bool with_imaginary) {
    Rational re(rng.uniform(-bound, bound));
    Rational im(with_imaginary ? rng.uniform(-bound, bound) : 0);
    return {re, im};
}

CanonicalCoords random_coords(const TypeSequence& t, Rng& rng, long bound, bool with_imaginary) {
    CanonicalCoords c(t);
    int m = t.count();
    for (int j = 1; j <= m; ++j)
        for (int i = j + 1; i <= m; ++i) {
            int ni = t.steps()[i - 1].n, nj = t.steps()[j - 1].n;
            Mat qb(ni, nj), pb(nj, ni);
            for (int r = 0; r < ni; ++r)
                for (int s = 0; s < nj; ++s)
                    qb.at(r, s) = random_scalar(rng, bound, with_imaginary);
            for (int r = 0; r < nj; ++r)
                for (int s = 0; s < ni; ++s)
                    pb.at(r, s) = random_scalar(rng, bound, with_imaginary);
            c.set_q(i, j, std::move(qb));
            c.set_p(j, i, std::move(pb));
        }
    return c;
}

Mat random_unitriangular_product(int n, Rng& rng, long bound) {
    long b = std::min(bound, 9L); // keeps conjugated entries reviewable
    Mat lower = Mat::identity(n), upper = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            lower.at(i, j) = GaussianRational(rng.uniform(-b, b));
            upper.at(j, i) = GaussianRational(rng.uniform(-b, b));
        }
    return lower * upper;
}

Mat random_conjugate_point(const TypeSequence& t, Rng& rng, long bound) {
    int n = t.total_size();
    Mat g = random_unitriangular_product(n, rng, bound);
    return g * jordan_matrix(t) * inverse(g);
}

JordanStructure random_structure(Rng& rng, int max_total) {
    int total = static_cast<int>(rng.uniform(1, max_total));
    int n_eigs = static_cast<int>(rng.uniform(1, std::min(total, 3)));
    // distinct small eigenvalues
    std::vector<long> pool{0, 1, 2, -1, 3, -2, 5};
    for (int i = static_cast<int>(pool.size()) - 1; i > 0; --i)
        std::swap(pool[i], pool[rng.uniform(0, i)]);
    std::vector<EigenChains> eigs;
    int remaining = total;
    for (int e = 0; e < n_eigs; ++e) {
        int budget = (e == n_eigs - 1) ? remaining
                                       : static_cast<int>(rng.uniform(1, remaining - (n_eigs - 1 - e)));
        remaining -= budget;
        std::vector<int> chains;
        while (budget > 0) {
            int len = static_cast<int>(rng.uniform(1, budget));
            chains.push_back(len);
            budget -= len;
        }
        eigs.push_back({GaussianRational(pool[e]), std::move(chains)});
    }
    return JordanStructure(std::move(eigs));
}

} // namespace orbitdx
