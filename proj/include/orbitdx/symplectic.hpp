#pragma once

#include <vector>

#include "orbitdx/mat.hpp"
#include "orbitdx/orbit.hpp"

namespace orbitdx {

/// Tangent vector to the orbit at `at`: a matrix of the form [X, at].
struct TangentVector {
    Mat at;
    Mat v;
};

enum class CoordKind { P, Q };

/**
 * Names one scalar coordinate. The block position (block_row, block_col)
 * is its place in the M x M grid of blocks: p_j^i sits at (j, i) with
 * j < i, q_i^j at (i, j) with i > j; both have shape
 * n_{block_row} x n_{block_col}. `row`, `col` are 0-based inside the block.
 */
struct CoordinateIndex {
    CoordKind kind;
    int block_row, block_col;
    int row, col;

    friend bool operator==(const CoordinateIndex& a, const CoordinateIndex& b) {
        return a.kind == b.kind && a.block_row == b.block_row && a.block_col == b.block_col &&
               a.row == b.row && a.col == b.col;
    }
    std::string str() const;
};

/// All coordinates in the documented order: every p entry first, then every
/// q entry; blocks ordered lexicographically by (block_row, block_col) and
/// entries row-major inside each block. gram_matrix and canonical_gram both
/// use this enumeration.
std::vector<CoordinateIndex> coordinate_enumeration(const TypeSequence& t);

/// Exact partial derivative of A = Q rho Q^{-1} in one coordinate
/// direction. rho is affine in the p entries; for q entries the product
/// rule also has to differentiate rho, whose rows p_k [Q]_{M-k} contain
/// q blocks of later flights.
TangentVector coordinate_tangent(const CanonicalCoords& c, const CoordinateIndex& idx);

/// Any X with X a - a X = v. Dense exact solve of the commutator system;
/// throws InconsistentSystemError when v is not tangent at a.
Mat solve_infinitesimal(const Mat& a, const Mat& v);

/// Kirillov-Kostant form on two tangents at the same base point, evaluated
/// as tr(X2 v1) with [X2, a] = v2. The value does not depend on the choice
/// of X2. Sign convention: the simple 2x2 case gives omega(d_p, d_q) = +1.
GaussianRational kks_form(const TangentVector& t1, const TangentVector& t2);

/// The auxiliary linear symplectic form on (n+m) x (n+m) matrices:
/// tr(b2_21 b1_12) - tr(b2_12 b1_21) over the off-diagonal blocks.
GaussianRational aux_form(const Mat& b1, const Mat& b2, int n, int m);

/// Gram matrix of kks_form over all coordinate tangents at c, in the
/// enumeration order above. Equal to canonical_gram exactly when the
/// coordinates are Darboux.
Mat gram_matrix(const CanonicalCoords& c);

/// The constant canonical Gram matrix: (p_j^i)_{st} pairs with
/// (q_i^j)_{ts} to +1, everything else 0, antisymmetrized.
Mat canonical_gram(const TypeSequence& t);

} // namespace orbitdx
