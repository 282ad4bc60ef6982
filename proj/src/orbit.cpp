#include "orbitdx/orbit.hpp"

#include <algorithm>
#include <numeric>

namespace orbitdx {

Chart Chart::identity(int n) {
    Chart c;
    c.perm.resize(n);
    std::iota(c.perm.begin(), c.perm.end(), 0);
    return c;
}

bool Chart::is_identity() const {
    for (size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i))
            return false;
    return true;
}

Mat apply_chart(const Mat& a, const Chart& chart) { return permute_basis(a, chart.perm); }

Mat unapply_chart(const Mat& a, const Chart& chart) {
    return permute_basis(a, inverse_permutation(chart.perm));
}

CanonicalCoords::CanonicalCoords(TypeSequence t) : tseq_(std::move(t)) {
    int m = tseq_.count();
    for (int j = 1; j <= m; ++j)
        for (int i = j + 1; i <= m; ++i) {
            int ni = tseq_.steps()[i - 1].n;
            int nj = tseq_.steps()[j - 1].n;
            q_[{i, j}] = Mat::zeros(ni, nj);
            p_[{j, i}] = Mat::zeros(nj, ni);
        }
}

void CanonicalCoords::check_pair(int i, int j) const {
    if (!(1 <= j && j < i && i <= tseq_.count()))
        throw IndexError("block pair (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range");
}

const Mat& CanonicalCoords::q(int i, int j) const {
    check_pair(i, j);
    return q_.at({i, j});
}

const Mat& CanonicalCoords::p(int j, int i) const {
    check_pair(i, j);
    return p_.at({j, i});
}

void CanonicalCoords::set_q(int i, int j, Mat value) {
    check_pair(i, j);
    int ni = tseq_.steps()[i - 1].n, nj = tseq_.steps()[j - 1].n;
    if (value.rows() != ni || value.cols() != nj)
        throw ShapeError("block q " + std::to_string(i) + "," + std::to_string(j) +
                         " must have shape " + std::to_string(ni) + "x" + std::to_string(nj));
    q_[{i, j}] = std::move(value);
}

void CanonicalCoords::set_p(int j, int i, Mat value) {
    check_pair(i, j);
    int ni = tseq_.steps()[i - 1].n, nj = tseq_.steps()[j - 1].n;
    if (value.rows() != nj || value.cols() != ni)
        throw ShapeError("block p " + std::to_string(j) + "," + std::to_string(i) +
                         " must have shape " + std::to_string(nj) + "x" + std::to_string(ni));
    p_[{j, i}] = std::move(value);
}

Mat CanonicalCoords::p_row_vector(int k) const {
    int m = tseq_.count();
    if (k < 1 || k > m)
        throw IndexError("step index out of range");
    Mat row(tseq_.steps()[k - 1].n, 0);
    for (int i = k + 1; i <= m; ++i)
        row = hcat(row, p(k, i));
    return row;
}

Mat CanonicalCoords::q_col_vector(int k) const {
    int m = tseq_.count();
    if (k < 1 || k > m)
        throw IndexError("step index out of range");
    Mat col(0, tseq_.steps()[k - 1].n);
    for (int i = k + 1; i <= m; ++i)
        col = vcat(col, q(i, k));
    return col;
}

int CanonicalCoords::coordinate_count() const {
    int total = 0;
    for (const auto& [key, mat] : q_)
        total += mat.rows() * mat.cols();
    for (const auto& [key, mat] : p_)
        total += mat.rows() * mat.cols();
    return total;
}

bool operator==(const CanonicalCoords& a, const CanonicalCoords& b) {
    return a.tseq_ == b.tseq_ && a.q_ == b.q_ && a.p_ == b.p_;
}

Mat build_Q(const CanonicalCoords& c) {
    const TypeSequence& t = c.type_seq();
    int n = t.total_size(), m = t.count();
    Mat out = Mat::identity(n);
    for (int j = 1; j <= m; ++j)
        for (int i = j + 1; i <= m; ++i) {
            const Mat& b = c.q(i, j);
            int roff = t.offset(i), coff = t.offset(j);
            for (int r = 0; r < b.rows(); ++r)
                for (int s = 0; s < b.cols(); ++s)
                    out.at(roff + r, coff + s) = b.at(r, s);
        }
    return out;
}

Mat trailing_Q(const CanonicalCoords& c, int k) {
    const TypeSequence& t = c.type_seq();
    int m = t.count();
    if (k < 0 || k > m)
        throw IndexError("trailing block count out of range");
    int off = t.offset(m - k + 1);
    Mat full = build_Q(c);
    return block(full, off, t.total_size(), off, t.total_size());
}

Mat build_rho(const CanonicalCoords& c) {
    const TypeSequence& t = c.type_seq();
    int n = t.total_size(), m = t.count();
    Mat out(n, n);
    for (int k = 1; k <= m; ++k) {
        int off = t.offset(k);
        for (int d = 0; d < t.steps()[k - 1].n; ++d)
            out.at(off + d, off + d) = t.steps()[k - 1].lambda;
    }
    for (int k = 1; k < m; ++k) {
        Mat row = c.p_row_vector(k) * trailing_Q(c, m - k);
        int roff = t.offset(k), coff = t.offset(k + 1);
        for (int r = 0; r < row.rows(); ++r)
            for (int s = 0; s < row.cols(); ++s)
                out.at(roff + r, coff + s) = row.at(r, s);
    }
    return out;
}

Mat parameterize(const CanonicalCoords& c) {
    Mat q = build_Q(c);
    return q * build_rho(c) * inverse(q);
}

Mat parameterize_hierarchical(const CanonicalCoords& c) {
    const TypeSequence& t = c.type_seq();
    int m = t.count();
    int nm = t.steps()[m - 1].n;
    Mat cur = t.steps()[m - 1].lambda * Mat::identity(nm);
    for (int k = m - 1; k >= 1; --k) {
        int nk = t.steps()[k - 1].n;
        Mat lam = t.steps()[k - 1].lambda * Mat::identity(nk);
        Mat prow = c.p_row_vector(k);
        Mat qcol = c.q_col_vector(k);
        Mat inner = assemble({{lam, prow}, {Mat::zeros(qcol.rows(), nk), cur}});
        Mat lower = assemble({{Mat::identity(nk), Mat::zeros(nk, qcol.rows())},
                              {qcol, Mat::identity(qcol.rows())}});
        Mat lower_inv = assemble({{Mat::identity(nk), Mat::zeros(nk, qcol.rows())},
                                  {-qcol, Mat::identity(qcol.rows())}});
        cur = lower * inner * lower_inv;
    }
    return cur;
}

FlightResult flight(const Mat& a_prev, const GaussianRational& lambda, int n) {
    if (a_prev.rows() != a_prev.cols())
        throw ShapeError("flight needs a square matrix");
    int dim = a_prev.rows();
    if (n < 1 || n > dim)
        throw IndexError("flight kernel dimension out of range");
    Mat shifted = a_prev - lambda * Mat::identity(dim);
    Mat w = kernel_basis(shifted);
    if (w.cols() != n)
        throw FlightError(FlightError::Kind::KernelDim, 0,
                          "kernel of (A - " + lambda.str() + " I) has dimension " +
                              std::to_string(w.cols()) + ", expected " + std::to_string(n));
    Mat top = block(w, 0, n, 0, n);
    Mat top_inv;
    try {
        top_inv = inverse(top);
    } catch (const SingularMatrixError&) {
        throw FlightError(FlightError::Kind::ChartDegenerate, 0,
                          "kernel is not transverse to the trailing coordinate subspace");
    }
    int m = dim - n;
    Mat q_col = block(w, n, dim, 0, n) * top_inv;
    Mat lower = assemble({{Mat::identity(n), Mat::zeros(n, m)}, {q_col, Mat::identity(m)}});
    Mat lower_inv = assemble({{Mat::identity(n), Mat::zeros(n, m)}, {-q_col, Mat::identity(m)}});
    Mat conj = lower_inv * a_prev * lower;
    if (!block(conj, n, dim, 0, n).is_zero() ||
        block(conj, 0, n, 0, n) != lambda * Mat::identity(n))
        throw FlightError(FlightError::Kind::ConjugationResidue, 0,
                          "conjugation did not produce the expected block triangle");
    FlightResult out;
    out.q_col = std::move(q_col);
    out.p_row = block(conj, 0, n, n, dim);
    out.a_next = block(conj, n, dim, n, dim);
    return out;
}

CanonicalCoords extract(const TypeSequence& t, const Mat& a, const Chart& chart,
                        std::vector<Mat>* residues) {
    int n = t.total_size(), m = t.count();
    if (a.rows() != n || a.cols() != n)
        throw ShapeError("matrix size does not match the type sequence");
    Mat cur = apply_chart(a, chart);
    CanonicalCoords coords(t);
    for (int k = 1; k < m; ++k) {
        const TypeStep& step = t.steps()[k - 1];
        FlightResult fl;
        try {
            fl = flight(cur, step.lambda, step.n);
        } catch (FlightError& e) {
            throw FlightError(e.kind, k, "flight " + std::to_string(k) + ": " + e.what());
        }
        int roff = 0, coff = 0;
        for (int i = k + 1; i <= m; ++i) {
            int ni = t.steps()[i - 1].n;
            coords.set_q(i, k, block(fl.q_col, roff, roff + ni, 0, step.n));
            coords.set_p(k, i, block(fl.p_row, 0, step.n, coff, coff + ni));
            roff += ni;
            coff += ni;
        }
        cur = fl.a_next;
        if (residues)
            residues->push_back(cur);
    }
    const TypeStep& last = t.steps()[m - 1];
    if (cur != last.lambda * Mat::identity(last.n))
        throw ResidueError("final residue is not " + last.lambda.str() + " I");
    return coords;
}

namespace {

// Row indices of w forming an invertible n x n submatrix, found by rref
// pivoting on the transpose.
std::vector<int> pivot_rows(const Mat& w) { return rref(transpose(w)).pivot_cols; }

} // namespace

Chart find_chart(const TypeSequence& t, const Mat& a) {
    int n = t.total_size(), m = t.count();
    if (a.rows() != n || a.cols() != n)
        throw ShapeError("matrix size does not match the type sequence");
    Chart chart = Chart::identity(n);
    Mat cur = a;
    int offset = 0;
    for (int k = 1; k < m; ++k) {
        const TypeStep& step = t.steps()[k - 1];
        int dim = cur.rows();
        Mat w = kernel_basis(cur - step.lambda * Mat::identity(dim));
        if (w.cols() != step.n)
            throw NoChartError("no chart: kernel at flight " + std::to_string(k) +
                               " has dimension " + std::to_string(w.cols()) + ", expected " +
                               std::to_string(step.n) + " (matrix is not on the orbit)");
        std::vector<int> rows = pivot_rows(w);
        std::vector<bool> picked(dim, false);
        for (int r : rows)
            picked[r] = true;
        std::vector<int> local = rows;
        for (int r = 0; r < dim; ++r)
            if (!picked[r])
                local.push_back(r);
        cur = permute_basis(cur, local);
        std::vector<int> updated(chart.perm.begin() + offset, chart.perm.end());
        for (int i = 0; i < dim; ++i)
            chart.perm[offset + i] = updated[local[i]];
        FlightResult fl = flight(cur, step.lambda, step.n);
        cur = fl.a_next;
        offset += step.n;
    }
    const TypeStep& last = t.steps()[m - 1];
    if (cur != last.lambda * Mat::identity(last.n))
        throw NoChartError("no chart: final residue is not " + last.lambda.str() +
                           " I (matrix is not on the orbit)");
    return chart;
}

} // namespace orbitdx
