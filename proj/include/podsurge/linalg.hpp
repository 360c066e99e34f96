#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace podsurge::linalg {

/// Dense row-major matrix of 64-bit reals. Shapes are validated at
/// operation boundaries, not by construction; element access is unchecked.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Thin SVD a = u * diag(singular_values) * vt with r = min(rows, cols).
/// u has orthonormal columns (rows x r), vt orthonormal rows (r x cols),
/// singular values descending and non-negative. Values below
/// 1e-12 * sigma_max are clamped to exactly zero.
struct SvdResult {
  Matrix u;
  std::vector<double> singular_values;
  Matrix vt;
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

std::vector<double> matvec(const Matrix& a, std::span<const double> x);
/// a^T * x without forming the transpose.
std::vector<double> matvec_transposed(const Matrix& a, std::span<const double> x);

/// One-sided Jacobi SVD on the taller orientation (input is transposed
/// internally when cols > rows). Deterministic cyclic sweep order,
/// capped at 60 sweeps; convergence when every column pair satisfies
/// |<a_p, a_q>| <= 1e-12 * |a_p| * |a_q|.
SvdResult svd(const Matrix& a);

double frobenius_norm(const Matrix& a);
/// ||a - b||_F / ||a||_F. Throws on shape mismatch or ||a||_F == 0.
double frobenius_relative_error(const Matrix& a, const Matrix& b);

}  // namespace podsurge::linalg
