#include "kyfan2k/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kyfan2k {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_finite(std::span<const double> xs) {
    for (double x : xs)
        require(std::isfinite(x), "matrix entries must be finite");
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    entries_.assign(std::size_t(rows) * cols, 0.0);
}

Matrix::Matrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    require(entries_.size() == std::size_t(rows) * cols, "entry count must equal rows*cols");
    check_finite(entries_);
}

Matrix Matrix::identity(int n) {
    Matrix I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
}

Matrix Matrix::diag(std::span<const double> d) {
    return diag(d, int(d.size()), int(d.size()));
}

Matrix Matrix::diag(std::span<const double> d, int rows, int cols) {
    require(int(d.size()) <= std::min(rows, cols), "diagonal longer than min dimension");
    Matrix A(rows, cols);
    for (int i = 0; i < int(d.size()); ++i) A(i, i) = d[i];
    check_finite(A.entries_);
    return A;
}

Matrix Matrix::transposed() const {
    Matrix T(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

Matrix& Matrix::operator+=(const Matrix& B) {
    require(same_shape(B), "shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += B.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& B) {
    require(same_shape(B), "shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= B.entries_[i];
    return *this;
}

Matrix& Matrix::operator*=(double c) {
    require(std::isfinite(c), "scalar must be finite");
    for (double& x : entries_) x *= c;
    return *this;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    require(A.cols() == B.rows(), "inner dimensions must agree");
    Matrix C(A.rows(), B.cols());
    const int m = A.rows(), k = A.cols(), n = B.cols();
    for (int i = 0; i < m; ++i) {
        for (int l = 0; l < k; ++l) {
            const double a = A(i, l);
            if (a == 0.0) continue;
            for (int j = 0; j < n; ++j) C(i, j) += a * B(l, j);
        }
    }
    return C;
}

double frobenius_norm(const Matrix& A) {
    double s = 0.0;
    for (double x : A.data()) s += x * x;
    return std::sqrt(s);
}

double l1_norm(const Matrix& A) {
    double s = 0.0;
    for (double x : A.data()) s += std::abs(x);
    return s;
}

double linf_norm(const Matrix& A) {
    double s = 0.0;
    for (double x : A.data()) s = std::max(s, std::abs(x));
    return s;
}

double inner(const Matrix& A, const Matrix& X) {
    require(A.same_shape(X), "shape mismatch");
    double s = 0.0;
    auto a = A.data(), x = X.data();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

namespace {

// One-sided Jacobi on the columns of W (m x n), accumulating the right
// rotations into V (n x n). On exit the columns of W are mutually orthogonal.
void one_sided_jacobi(Matrix& W, Matrix& V) {
    const int m = W.rows(), n = W.cols();
    const double tol = 1e-15;
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int i = 0; i < m; ++i) {
                    const double wp = W(i, p), wq = W(i, q);
                    app += wp * wp;
                    aqq += wq * wq;
                    apq += wp * wq;
                }
                if (app == 0.0 || aqq == 0.0) continue;
                if (std::abs(apq) <= tol * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < m; ++i) {
                    const double wp = W(i, p), wq = W(i, q);
                    W(i, p) = c * wp - s * wq;
                    W(i, q) = s * wp + c * wq;
                }
                for (int i = 0; i < n; ++i) {
                    const double vp = V(i, p), vq = V(i, q);
                    V(i, p) = c * vp - s * vq;
                    V(i, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }
}

// Orthonormalize candidate against the first `count` columns of U; returns
// false when the residual is negligible.
bool gram_schmidt_insert(Matrix& U, int count, std::vector<double>& cand) {
    const int m = U.rows();
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < count; ++j) {
            double d = 0.0;
            for (int i = 0; i < m; ++i) d += U(i, j) * cand[i];
            for (int i = 0; i < m; ++i) cand[i] -= d * U(i, j);
        }
    }
    double nrm = 0.0;
    for (double x : cand) nrm += x * x;
    nrm = std::sqrt(nrm);
    if (nrm < 1e-8) return false;
    for (double& x : cand) x /= nrm;
    return true;
}

SvdFactors svd_tall(const Matrix& A, const Matrix* guess) {
    const int m = A.rows(), n = A.cols();
    Matrix W = A;
    Matrix V = Matrix::identity(n);
    if (guess && guess->rows() == n && guess->cols() == n) {
        W = matmul(A, *guess);
        V = *guess;
    }
    one_sided_jacobi(W, V);

    std::vector<double> sigma(n, 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += W(i, j) * W(i, j);
        sigma[j] = std::sqrt(s);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sigma[a] > sigma[b]; });

    const double zero_cut = linf_norm(A) * double(std::max(m, n)) * 1e-18;
    SvdFactors f;
    f.U = Matrix(m, n);
    f.V = Matrix(n, n);
    f.S.resize(n);
    int ucols = 0;
    std::vector<int> deferred;
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        f.S[j] = sigma[src];
        for (int i = 0; i < n; ++i) f.V(i, j) = V(i, src);
        if (sigma[src] > zero_cut) {
            for (int i = 0; i < m; ++i) f.U(i, j) = W(i, src) / sigma[src];
            ucols = j + 1;
        } else {
            f.S[j] = 0.0;
            deferred.push_back(j);
        }
    }
    // Complete U with orthonormal columns for zero singular values.
    int next_axis = 0;
    for (int j : deferred) {
        std::vector<double> cand(m, 0.0);
        while (true) {
            std::fill(cand.begin(), cand.end(), 0.0);
            require(next_axis < m, "failed to complete orthonormal basis");
            cand[next_axis++] = 1.0;
            std::vector<double> trial = cand;
            if (gram_schmidt_insert(f.U, ucols, trial)) {
                for (int i = 0; i < m; ++i) f.U(i, j) = trial[i];
                ucols = std::max(ucols, j + 1);
                break;
            }
        }
    }

    // Sign convention: first nonzero entry of each U column nonnegative.
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < m; ++i) {
            const double u = f.U(i, j);
            if (u == 0.0) continue;
            if (u < 0.0) {
                for (int r = 0; r < m; ++r) f.U(r, j) = -f.U(r, j);
                for (int r = 0; r < n; ++r) f.V(r, j) = -f.V(r, j);
            }
            break;
        }
    }
    return f;
}

}  // namespace

SvdFactors svd(const Matrix& A) {
    check_finite(A.data());
    if (A.rows() >= A.cols()) return svd_tall(A, nullptr);
    SvdFactors t = svd_tall(A.transposed(), nullptr);
    SvdFactors f;
    f.U = std::move(t.V);
    f.S = std::move(t.S);
    f.V = std::move(t.U);
    // re-apply the sign convention to the swapped factors
    const int m = A.rows(), n = A.cols(), p = std::min(m, n);
    for (int j = 0; j < p; ++j) {
        for (int i = 0; i < m; ++i) {
            const double u = f.U(i, j);
            if (u == 0.0) continue;
            if (u < 0.0) {
                for (int r = 0; r < m; ++r) f.U(r, j) = -f.U(r, j);
                for (int r = 0; r < n; ++r) f.V(r, j) = -f.V(r, j);
            }
            break;
        }
    }
    return f;
}

SvdFactors svd_warm(const Matrix& A, const Matrix& V0) {
    check_finite(A.data());
    if (A.rows() >= A.cols()) return svd_tall(A, &V0);
    return svd(A);  // warm path only wired for the tall orientation
}

std::vector<double> singular_values(const Matrix& A) {
    return svd(A).S;
}

EigFactors symmetric_eig(const Matrix& S) {
    require(S.rows() == S.cols(), "symmetric_eig needs a square matrix");
    const int n = S.rows();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            require(std::abs(S(i, j) - S(j, i)) <= 1e-10 * std::max(1.0, linf_norm(S)),
                    "matrix is not symmetric");

    Matrix A = S;
    Matrix V = Matrix::identity(n);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(A(i, j)));
        if (off <= 1e-15 * std::max(1.0, linf_norm(S))) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) <= 1e-18 * std::max(1.0, linf_norm(S))) continue;
                const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int i = 0; i < n; ++i) {
                    const double aip = A(i, p), aiq = A(i, q);
                    A(i, p) = c * aip - s * aiq;
                    A(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = A(p, i), aqi = A(q, i);
                    A(p, i) = c * api - s * aqi;
                    A(q, i) = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    const double vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip - s * viq;
                    V(i, q) = s * vip + c * viq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A(a, a) > A(b, b); });
    EigFactors f;
    f.values.resize(n);
    f.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        f.values[j] = A(order[j], order[j]);
        for (int i = 0; i < n; ++i) f.vectors(i, j) = V(i, order[j]);
    }
    return f;
}

void write_matrix(const Matrix& A, std::ostream& out) {
    out << A.rows() << ' ' << A.cols() << '\n';
    out << std::setprecision(17);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) {
            if (j) out << ' ';
            out << A(i, j);
        }
        out << '\n';
    }
}

Matrix read_matrix(std::istream& in) {
    int rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw std::invalid_argument("matrix header unreadable");
    require(rows > 0 && cols > 0, "matrix dimensions must be positive");
    std::vector<double> entries(std::size_t(rows) * cols);
    for (double& x : entries)
        if (!(in >> x)) throw std::invalid_argument("matrix body truncated");
    return Matrix(rows, cols, std::move(entries));
}

void save_matrix(const Matrix& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_matrix(A, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_matrix(in);
}

}  // namespace kyfan2k
