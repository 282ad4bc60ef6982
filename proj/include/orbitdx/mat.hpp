#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "orbitdx/scalar.hpp"

namespace orbitdx {

/**
 * Dense matrix over Q(i), row-major. Zero-sized matrices (0 rows and/or
 * 0 columns) are legal; they show up as degenerate blocks.
 */
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols);
    Mat(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Mat identity(int n);
    static Mat zeros(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    GaussianRational& at(int i, int j);
    const GaussianRational& at(int i, int j) const;

    Mat operator-() const;
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator*(const GaussianRational& s, const Mat& a);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero() const;
    bool is_identity() const;

    std::string str() const; // multi-line, for diagnostics

private:
    int rows_, cols_;
    std::vector<GaussianRational> e_;
};

struct Rref {
    Mat reduced;
    std::vector<int> pivot_cols; // 0-based
    int rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan. Pivot selection is
/// first-nonzero in column order, which keeps the result deterministic.
Rref rref(const Mat& m);

int rank(const Mat& m);

/// Columns form a basis of the right null space, width = cols - rank.
/// Free variables are set to 1 in column order.
Mat kernel_basis(const Mat& m);

/// Exact inverse. Unit lower-triangular inputs take a division-free
/// forward-substitution path, so their inverses stay polynomial in the
/// entries. Throws SingularMatrixError.
Mat inverse(const Mat& m);

/// Any particular solution x of a x = b (b may have several columns), or
/// nullopt when the system is inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

/// Submatrix over half-open ranges [r0, r1) x [c0, c1).
Mat block(const Mat& m, int r0, int r1, int c0, int c1);

/// Glues a grid of blocks; row heights must agree along grid rows and
/// column widths along grid columns. Zero-sized blocks are fine.
Mat assemble(const std::vector<std::vector<Mat>>& grid);

Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);

Mat transpose(const Mat& m);

GaussianRational trace(const Mat& m);

/// Trace of a*b without forming the product.
GaussianRational trace_of_product(const Mat& a, const Mat& b);

/// Matrix of the same operator after reordering basis vectors:
/// out[i][j] = m[perm[i]][perm[j]] (perm 0-based, a bijection).
Mat permute_basis(const Mat& m, const std::vector<int>& perm);

std::vector<int> inverse_permutation(const std::vector<int>& perm);

} // namespace orbitdx
