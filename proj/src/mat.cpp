#include "orbitdx/mat.hpp"

#include <algorithm>
#include <sstream>

namespace orbitdx {

namespace {

void check_shape(bool ok, const std::string& what) {
    if (!ok)
        throw ShapeError(what);
}

} // namespace

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw ShapeError("negative matrix dimension");
    e_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
}

Mat::Mat(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    e_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        check_shape(static_cast<int>(r.size()) == cols_, "ragged initializer rows");
        for (const auto& v : r)
            e_.push_back(v);
    }
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = GaussianRational(1);
    return m;
}

GaussianRational& Mat::at(int i, int j) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexError("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

const GaussianRational& Mat::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw IndexError("matrix index out of range");
    return e_[static_cast<size_t>(i) * cols_ + j];
}

Mat Mat::operator-() const {
    Mat out(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k)
        out.e_[k] = -e_[k];
    return out;
}

Mat operator+(const Mat& a, const Mat& b) {
    check_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in +");
    Mat out(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k)
        out.e_[k] = a.e_[k] + b.e_[k];
    return out;
}

Mat operator-(const Mat& a, const Mat& b) {
    check_shape(a.rows_ == b.rows_ && a.cols_ == b.cols_, "shape mismatch in -");
    Mat out(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k)
        out.e_[k] = a.e_[k] - b.e_[k];
    return out;
}

Mat operator*(const Mat& a, const Mat& b) {
    check_shape(a.cols_ == b.rows_, "shape mismatch in matmul: " + std::to_string(a.rows_) + "x" +
                                        std::to_string(a.cols_) + " * " + std::to_string(b.rows_) +
                                        "x" + std::to_string(b.cols_));
    Mat out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Mat operator*(const GaussianRational& s, const Mat& a) {
    Mat out(a.rows_, a.cols_);
    for (size_t k = 0; k < a.e_.size(); ++k)
        out.e_[k] = s * a.e_[k];
    return out;
}

bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool Mat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const GaussianRational& v) { return v.is_zero(); });
}

bool Mat::is_identity() const {
    if (rows_ != cols_)
        return false;
    return *this == identity(rows_);
}

std::string Mat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (int j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 < rows_ ? "\n" : "");
    }
    os << "]";
    return os.str();
}

Rref rref(const Mat& m) {
    Rref out;
    out.reduced = m;
    Mat& a = out.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r)
            for (int j = 0; j < a.cols(); ++j)
                std::swap(a.at(r, j), a.at(pivot, j));
        GaussianRational inv = a.at(r, c).inv();
        for (int j = c; j < a.cols(); ++j)
            a.at(r, j) *= inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero())
                continue;
            GaussianRational f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
    Rref rr = rref(m);
    std::vector<int> free_cols;
    size_t p = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (p < rr.pivot_cols.size() && rr.pivot_cols[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    Mat out(m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int f = free_cols[k];
        out.at(f, static_cast<int>(k)) = GaussianRational(1);
        for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
            out.at(rr.pivot_cols[r], static_cast<int>(k)) = -rr.reduced.at(static_cast<int>(r), f);
    }
    return out;
}

namespace {

bool is_unit_lower_triangular(const Mat& m) {
    if (m.rows() != m.cols())
        return false;
    for (int i = 0; i < m.rows(); ++i) {
        if (m.at(i, i) != GaussianRational(1))
            return false;
        for (int j = i + 1; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                return false;
    }
    return true;
}

// Division-free inverse of a unit lower-triangular matrix.
Mat invert_unit_lower(const Mat& m) {
    int n = m.rows();
    Mat x = Mat::identity(n);
    for (int j = 0; j < n; ++j)
        for (int i = j + 1; i < n; ++i) {
            GaussianRational s;
            for (int k = j; k < i; ++k)
                s += m.at(i, k) * x.at(k, j);
            x.at(i, j) = -s;
        }
    return x;
}

} // namespace

Mat inverse(const Mat& m) {
    check_shape(m.rows() == m.cols(), "inverse of non-square matrix");
    if (is_unit_lower_triangular(m))
        return invert_unit_lower(m);
    int n = m.rows();
    Rref rr = rref(hcat(m, Mat::identity(n)));
    // singular iff some pivot escapes into the identity half
    if (rr.rank < n || (n > 0 && rr.pivot_cols[n - 1] != n - 1))
        throw SingularMatrixError("matrix is singular");
    return block(rr.reduced, 0, n, n, 2 * n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    check_shape(a.rows() == b.rows(), "solve: row counts differ");
    Rref rr = rref(hcat(a, b));
    for (int c : rr.pivot_cols)
        if (c >= a.cols())
            return std::nullopt; // pivot in the right-hand side: inconsistent
    Mat x(a.cols(), b.cols());
    for (size_t r = 0; r < rr.pivot_cols.size(); ++r)
        for (int j = 0; j < b.cols(); ++j)
            x.at(rr.pivot_cols[r], j) = rr.reduced.at(static_cast<int>(r), a.cols() + j);
    return x;
}

Mat block(const Mat& m, int r0, int r1, int c0, int c1) {
    check_shape(0 <= r0 && r0 <= r1 && r1 <= m.rows() && 0 <= c0 && c0 <= c1 && c1 <= m.cols(),
                "block range out of bounds");
    Mat out(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j)
            out.at(i - r0, j - c0) = m.at(i, j);
    return out;
}

Mat assemble(const std::vector<std::vector<Mat>>& grid) {
    if (grid.empty())
        return Mat();
    size_t gcols = grid.front().size();
    std::vector<int> heights(grid.size(), 0), widths(gcols, 0);
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        check_shape(grid[gi].size() == gcols, "assemble: ragged grid");
        for (size_t gj = 0; gj < gcols; ++gj) {
            const Mat& b = grid[gi][gj];
            if (gj == 0)
                heights[gi] = b.rows();
            else
                check_shape(b.rows() == heights[gi], "assemble: row heights differ");
            if (gi == 0)
                widths[gj] = b.cols();
            else
                check_shape(b.cols() == widths[gj], "assemble: column widths differ");
        }
    }
    int rows = 0, cols = 0;
    for (int h : heights)
        rows += h;
    for (int w : widths)
        cols += w;
    Mat out(rows, cols);
    int roff = 0;
    for (size_t gi = 0; gi < grid.size(); ++gi) {
        int coff = 0;
        for (size_t gj = 0; gj < gcols; ++gj) {
            const Mat& b = grid[gi][gj];
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j)
                    out.at(roff + i, coff + j) = b.at(i, j);
            coff += widths[gj];
        }
        roff += heights[gi];
    }
    return out;
}

Mat hcat(const Mat& a, const Mat& b) { return assemble({{a, b}}); }

Mat vcat(const Mat& a, const Mat& b) { return assemble({{a}, {b}}); }

Mat transpose(const Mat& m) {
    Mat out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(j, i) = m.at(i, j);
    return out;
}

GaussianRational trace(const Mat& m) {
    check_shape(m.rows() == m.cols(), "trace of non-square matrix");
    GaussianRational t;
    for (int i = 0; i < m.rows(); ++i)
        t += m.at(i, i);
    return t;
}

GaussianRational trace_of_product(const Mat& a, const Mat& b) {
    check_shape(a.cols() == b.rows() && a.rows() == b.cols(), "trace_of_product shape mismatch");
    GaussianRational t;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            t += a.at(i, j) * b.at(j, i);
    return t;
}

Mat permute_basis(const Mat& m, const std::vector<int>& perm) {
    check_shape(m.rows() == m.cols(), "permute_basis needs a square matrix");
    int n = m.rows();
    check_shape(static_cast<int>(perm.size()) == n, "permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v])
            throw InvariantError("not a permutation");
        seen[v] = true;
    }
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.at(i, j) = m.at(perm[i], perm[j]);
    return out;
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i)
        inv[perm[i]] = static_cast<int>(i);
    return inv;
}

} // namespace orbitdx
