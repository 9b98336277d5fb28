#pragma once

#include <cstddef>
#include <vector>

namespace meannorm {

/// Dense row-major matrix of binary64 entries. Indices are 0-based.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Symmetric matrix stored as the packed lower triangle; the upper
/// triangle is mirrored on read, so A(i,j) == A(j,i) holds exactly.
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;
  explicit DenseSymMatrix(std::size_t n) : n_(n), data_(n * (n + 1) / 2, 0.0) {}

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return i >= j ? data_[index(i, j)] : data_[index(j, i)];
  }
  void set(std::size_t i, std::size_t j, double v) {
    data_[i >= j ? index(i, j) : index(j, i)] = v;
  }

  /// Full row-major copy (Jacobi sweeps mutate a working square array).
  DenseMatrix to_dense() const;

  /// Symmetrize a square matrix whose asymmetry is pure roundoff.
  /// Throws if max |A_ij - A_ji| exceeds tol * max(1, max|A|).
  static DenseSymMatrix from_dense(const DenseMatrix& a, double tol);

 private:
  std::size_t index(std::size_t i, std::size_t j) const { return i * (i + 1) / 2 + j; }

  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// y = A x
std::vector<double> matvec(const DenseMatrix& a, const std::vector<double>& x);
std::vector<double> matvec(const DenseSymMatrix& a, const std::vector<double>& x);
/// y = A^t x
std::vector<double> matvec_transposed(const DenseMatrix& a, const std::vector<double>& x);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);

/// B^t B, accumulated with compensated dot products.
DenseSymMatrix gram(const DenseMatrix& b);
/// B B^t.
DenseSymMatrix gram_transposed(const DenseMatrix& b);

/// Entrywise (Schur/Hadamard) product; shapes must agree.
DenseMatrix hadamard_product(const DenseMatrix& x, const DenseMatrix& y);

double max_abs(const DenseMatrix& a);
double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double max_abs_diff(const DenseSymMatrix& a, const DenseSymMatrix& b);

}  // namespace meannorm
