#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kyfan2k {

/// Dense real matrix, row-major. Entries are validated to be finite on
/// construction and on every mutation entry point that accepts raw data.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<double> entries);

    static Matrix identity(int n);
    static Matrix diag(std::span<const double> d);
    static Matrix diag(std::span<const double> d, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }

    double operator()(int i, int j) const { return entries_[std::size_t(i) * cols_ + j]; }
    double& operator()(int i, int j) { return entries_[std::size_t(i) * cols_ + j]; }

    std::span<const double> data() const { return entries_; }
    std::span<double> data() { return entries_; }

    Matrix transposed() const;

    Matrix& operator+=(const Matrix& B);
    Matrix& operator-=(const Matrix& B);
    Matrix& operator*=(double c);

    friend Matrix operator+(Matrix A, const Matrix& B) { return A += B; }
    friend Matrix operator-(Matrix A, const Matrix& B) { return A -= B; }
    friend Matrix operator*(Matrix A, double c) { return A *= c; }
    friend Matrix operator*(double c, Matrix A) { return A *= c; }

    bool same_shape(const Matrix& B) const { return rows_ == B.rows_ && cols_ == B.cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> entries_;
};

Matrix matmul(const Matrix& A, const Matrix& B);

double frobenius_norm(const Matrix& A);
double l1_norm(const Matrix& A);
double linf_norm(const Matrix& A);
/// trace(A^T X); shapes must match.
double inner(const Matrix& A, const Matrix& X);

/// Singular value decomposition A = U diag(S) V^T with p = min(rows, cols).
/// U is rows x p, V is cols x p, both with orthonormal columns; S is
/// nonincreasing and nonnegative. The first nonzero entry of each column of
/// U is nonnegative so decompositions are reproducible.
struct SvdFactors {
    Matrix U;
    std::vector<double> S;
    Matrix V;
};

SvdFactors svd(const Matrix& A);

/// Same factorization, seeded with an orthonormal guess V0 (cols x p) for the
/// right singular basis. Identical contract as svd(); the guess only reduces
/// the number of Jacobi sweeps when A is close to a previously factored matrix.
SvdFactors svd_warm(const Matrix& A, const Matrix& V0);

std::vector<double> singular_values(const Matrix& A);

/// Eigendecomposition of a symmetric matrix, eigenvalues nonincreasing.
struct EigFactors {
    std::vector<double> values;
    Matrix vectors;  // column i is the eigenvector for values[i]
};

EigFactors symmetric_eig(const Matrix& S);

// Text format: first line "rows cols", then one line per row of
// whitespace-separated decimals. Writer emits 17 significant digits so a
// read-back reproduces every entry to full double precision.
void write_matrix(const Matrix& A, std::ostream& out);
Matrix read_matrix(std::istream& in);
void save_matrix(const Matrix& A, const std::string& path);
Matrix load_matrix(const std::string& path);

}  // namespace kyfan2k
