#include "orbitdx/symplectic.hpp"

namespace orbitdx {

std::string CoordinateIndex::str() const {
    std::string s = kind == CoordKind::P ? "p" : "q";
    return s + "[" + std::to_string(block_row) + "," + std::to_string(block_col) + "](" +
           std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

std::vector<CoordinateIndex> coordinate_enumeration(const TypeSequence& t) {
    std::vector<CoordinateIndex> out;
    int m = t.count();
    for (int j = 1; j <= m; ++j)
        for (int i = j + 1; i <= m; ++i) {
            int nj = t.steps()[j - 1].n, ni = t.steps()[i - 1].n;
            for (int s = 0; s < nj; ++s)
                for (int u = 0; u < ni; ++u)
                    out.push_back({CoordKind::P, j, i, s, u});
        }
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j < i; ++j) {
            int ni = t.steps()[i - 1].n, nj = t.steps()[j - 1].n;
            for (int s = 0; s < ni; ++s)
                for (int u = 0; u < nj; ++u)
                    out.push_back({CoordKind::Q, i, j, s, u});
        }
    return out;
}

namespace {

void check_index(const TypeSequence& t, const CoordinateIndex& idx) {
    int m = t.count();
    int lo = std::min(idx.block_row, idx.block_col);
    int hi = std::max(idx.block_row, idx.block_col);
    bool block_ok = 1 <= lo && lo < hi && hi <= m &&
                    (idx.kind == CoordKind::P ? idx.block_row < idx.block_col
                                              : idx.block_row > idx.block_col);
    if (!block_ok)
        throw IndexError("coordinate block out of range: " + idx.str());
    int rows = t.steps()[idx.block_row - 1].n;
    int cols = t.steps()[idx.block_col - 1].n;
    if (idx.row < 0 || idx.row >= rows || idx.col < 0 || idx.col >= cols)
        throw IndexError("coordinate entry out of range: " + idx.str());
}

// Trailing principal submatrix covering steps k+1..M.
Mat trailing_block(const TypeSequence& t, const Mat& full, int k) {
    int off = t.offset(k + 1);
    return block(full, off, t.total_size(), off, t.total_size());
}

// d(rho) for a variation dQ of Q (an N x N matrix living in the strict
// lower block triangle): row k of rho is p_k [Q]_{M-k}, so its variation is
// p_k [dQ]_{M-k}.
Mat rho_variation(const CanonicalCoords& c, const Mat& dq) {
    const TypeSequence& t = c.type_seq();
    int n = t.total_size(), m = t.count();
    Mat out(n, n);
    for (int k = 1; k < m; ++k) {
        Mat row = c.p_row_vector(k) * trailing_block(t, dq, k);
        int roff = t.offset(k), coff = t.offset(k + 1);
        for (int r = 0; r < row.rows(); ++r)
            for (int s = 0; s < row.cols(); ++s)
                out.at(roff + r, coff + s) = row.at(r, s);
    }
    return out;
}

} // namespace

TangentVector coordinate_tangent(const CanonicalCoords& c, const CoordinateIndex& idx) {
    const TypeSequence& t = c.type_seq();
    check_index(t, idx);
    int n = t.total_size();
    Mat q = build_Q(c);
    Mat q_inv = inverse(q);
    Mat rho = build_rho(c);
    Mat a = q * rho * q_inv;
    Mat da;
    if (idx.kind == CoordKind::P) {
        // rho is affine in p: d(rho) has a single row block
        // E [Q]_{M-j} with E elementary inside the row vector p_j.
        int j = idx.block_row, i = idx.block_col;
        Mat dp(t.steps()[j - 1].n, 0);
        for (int l = j + 1; l <= t.count(); ++l) {
            Mat piece = Mat::zeros(t.steps()[j - 1].n, t.steps()[l - 1].n);
            if (l == i)
                piece.at(idx.row, idx.col) = GaussianRational(1);
            dp = hcat(dp, piece);
        }
        Mat row = dp * trailing_Q(c, t.count() - j);
        Mat drho(n, n);
        int roff = t.offset(j), coff = t.offset(j + 1);
        for (int r = 0; r < row.rows(); ++r)
            for (int s = 0; s < row.cols(); ++s)
                drho.at(roff + r, coff + s) = row.at(r, s);
        da = q * drho * q_inv;
    } else {
        Mat dq(n, n);
        dq.at(t.offset(idx.block_row) + idx.row, t.offset(idx.block_col) + idx.col) =
            GaussianRational(1);
        Mat drho = rho_variation(c, dq);
        da = dq * rho * q_inv + q * drho * q_inv - a * dq * q_inv;
    }
    return {std::move(a), std::move(da)};
}

Mat solve_infinitesimal(const Mat& a, const Mat& v) {
    if (a.rows() != a.cols())
        throw ShapeError("base point must be square");
    if (v.rows() != a.rows() || v.cols() != a.cols())
        throw ShapeError("tangent matrix shape mismatch");
    int n = a.rows();
    // unknowns x_{ij} flattened row-major; equation (X a - a X)[i][j] = v[i][j]
    Mat sys(n * n, n * n);
    Mat rhs(n * n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int eq = i * n + j;
            for (int k = 0; k < n; ++k) {
                sys.at(eq, i * n + k) += a.at(k, j);
                sys.at(eq, k * n + j) -= a.at(i, k);
            }
            rhs.at(eq, 0) = v.at(i, j);
        }
    auto x = solve(sys, rhs);
    if (!x)
        throw InconsistentSystemError("matrix is not tangent to the orbit at the base point");
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = x->at(i * n + j, 0);
    return out;
}

GaussianRational kks_form(const TangentVector& t1, const TangentVector& t2) {
    if (t1.at != t2.at)
        throw InvariantError("tangent vectors have different base points");
    Mat x2 = solve_infinitesimal(t2.at, t2.v);
    return trace_of_product(x2, t1.v);
}

GaussianRational aux_form(const Mat& b1, const Mat& b2, int n, int m) {
    if (n < 0 || m < 0 || b1.rows() != n + m || b1.cols() != n + m || b2.rows() != n + m ||
        b2.cols() != n + m)
        throw ShapeError("aux_form operands must be (n+m) x (n+m)");
    Mat b1_12 = block(b1, 0, n, n, n + m);
    Mat b1_21 = block(b1, n, n + m, 0, n);
    Mat b2_12 = block(b2, 0, n, n, n + m);
    Mat b2_21 = block(b2, n, n + m, 0, n);
    return trace_of_product(b2_21, b1_12) - trace_of_product(b2_12, b1_21);
}

Mat gram_matrix(const CanonicalCoords& c) {
    const TypeSequence& t = c.type_seq();
    std::vector<CoordinateIndex> coords = coordinate_enumeration(t);
    int d = static_cast<int>(coords.size());
    std::vector<TangentVector> tangents;
    tangents.reserve(coords.size());
    for (const auto& idx : coords)
        tangents.push_back(coordinate_tangent(c, idx));
    std::vector<Mat> solved;
    solved.reserve(coords.size());
    for (const auto& tv : tangents)
        solved.push_back(solve_infinitesimal(tv.at, tv.v));
    Mat out(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            out.at(a, b) = trace_of_product(solved[b], tangents[a].v);
    return out;
}

Mat canonical_gram(const TypeSequence& t) {
    std::vector<CoordinateIndex> coords = coordinate_enumeration(t);
    int d = static_cast<int>(coords.size());
    Mat out(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const CoordinateIndex& pa = coords[a];
            const CoordinateIndex& qb = coords[b];
            if (pa.kind == CoordKind::P && qb.kind == CoordKind::Q &&
                pa.block_row == qb.block_col && pa.block_col == qb.block_row &&
                pa.row == qb.col && pa.col == qb.row) {
                out.at(a, b) = GaussianRational(1);
                out.at(b, a) = GaussianRational(-1);
            }
        }
    return out;
}

} // namespace orbitdx
