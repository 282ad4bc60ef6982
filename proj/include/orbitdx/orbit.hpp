#pragma once

#include <map>
#include <utility>
#include <vector>

#include "orbitdx/jordan.hpp"
#include "orbitdx/mat.hpp"

namespace orbitdx {

/// A basis ordering, stored as the 0-based image perm[i] = original index
/// of the vector placed at position i. The charts of the orbit atlas are
/// indexed by these.
struct Chart {
    std::vector<int> perm;

    static Chart identity(int n);
    bool is_identity() const;
};

/// Matrix of the same operator after reordering the basis by the chart.
Mat apply_chart(const Mat& a, const Chart& chart);
/// Inverse reordering, so unapply_chart(apply_chart(a, c), c) = a.
Mat unapply_chart(const Mat& a, const Chart& chart);

/**
 * A point of the coordinate chart: the blocks q_i^j (n_i x n_j, j < i) below
 * the unit diagonal of Q and p_j^i (n_j x n_i) filling the row vectors
 * p_k = (p_k^{k+1} ... p_k^M). Every pair j < i carries exactly one block of
 * each kind; the total scalar count is the orbit dimension. All coordinate
 * values are legal (the chart covers the enlarged orbit), but only a
 * Zariski-open subset lands on the true orbit.
 */
class CanonicalCoords {
public:
    CanonicalCoords() = default;
    explicit CanonicalCoords(TypeSequence t); // all blocks zero

    const TypeSequence& type_seq() const { return tseq_; }
    int step_count() const { return tseq_.count(); }

    const Mat& q(int i, int j) const; // 1 <= j < i <= M, shape n_i x n_j
    const Mat& p(int j, int i) const; // 1 <= j < i <= M, shape n_j x n_i
    void set_q(int i, int j, Mat value);
    void set_p(int j, int i, Mat value);

    /// Horizontal concatenation (p_k^{k+1} ... p_k^M), shape n_k x m_k.
    Mat p_row_vector(int k) const;
    /// Vertical concatenation (q_{k+1}^k; ...; q_M^k), shape m_k x n_k.
    Mat q_col_vector(int k) const;

    int coordinate_count() const;

    friend bool operator==(const CanonicalCoords& a, const CanonicalCoords& b);
    friend bool operator!=(const CanonicalCoords& a, const CanonicalCoords& b) { return !(a == b); }

private:
    void check_pair(int i, int j) const;

    TypeSequence tseq_;
    std::map<std::pair<int, int>, Mat> q_, p_; // keyed (i,j) resp. (j,i)
};

/// The block-unitriangular matrix Q: unit blocks on the diagonal, q_i^j
/// below.
Mat build_Q(const CanonicalCoords& c);

/// Trailing diagonal k x k block submatrix of Q (block count k, covering
/// steps M-k+1..M), so trailing_Q(c, M) = Q and trailing_Q(c, 1) = I_{n_M}.
Mat trailing_Q(const CanonicalCoords& c, int k);

/// The block upper-triangular matrix rho: lambda_k I on the diagonal and
/// row vectors rho_k = p_k * [Q]_{M-k} above it.
Mat build_rho(const CanonicalCoords& c);

/// Forward map A = Q rho Q^{-1}. Defined for every coordinate value.
Mat parameterize(const CanonicalCoords& c);

/// Same map built by the flight recursion
/// A_{k-1} = L_k (lambda_k I, P_k; 0, A_k) L_k^{-1} instead of the closed
/// formula; the two must agree everywhere. Kept as an independent route.
Mat parameterize_hierarchical(const CanonicalCoords& c);

struct FlightResult {
    Mat q_col;  // m x n Grassmannian chart matrix of the kernel
    Mat p_row;  // n x m fiber coordinate
    Mat a_next; // m x m residue
};

/// One flight: splits off the lambda-eigenspace of a_prev. The kernel must
/// have dimension exactly n and be transverse to the trailing coordinate
/// subspace; the conjugated matrix must have an exactly-zero lower-left
/// block. Failures throw FlightError with the failing condition.
FlightResult flight(const Mat& a_prev, const GaussianRational& lambda, int n);

/// Inverse map: runs M-1 flights over the given chart and collects the
/// blocks. The final residue must equal lambda_M I exactly (ResidueError
/// otherwise). If `residues` is non-null the intermediate matrices A_1..
/// A_{M-1} are appended to it.
CanonicalCoords extract(const TypeSequence& t, const Mat& a, const Chart& chart,
                        std::vector<Mat>* residues = nullptr);

/// Finds a chart under which extract succeeds, greedily: every flight picks
/// a set of pivot rows of the kernel basis as the deleted coordinates and
/// the choices compose into one permutation. Throws NoChartError when some
/// flight sees the wrong kernel dimension (the matrix is off-orbit).
Chart find_chart(const TypeSequence& t, const Mat& a);

/// A matrix together with the structure it is supposed to carry.
struct OrbitPoint {
    Mat a;
    JordanStructure structure;
};

} // namespace orbitdx
