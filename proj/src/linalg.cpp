#include "podsurge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "podsurge/errors.hpp"

namespace podsurge::linalg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](double v) { return std::isfinite(v); });
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  if (!c.all_finite()) throw DomainError("matmul: non-finite product");
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) throw ShapeError("matvec: length mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto ai = a.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc += ai[j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> matvec_transposed(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.rows()) throw ShapeError("matvec_transposed: length mismatch");
  std::vector<double> y(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const auto ai = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += ai[j] * xi;
  }
  return y;
}

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kRotationTol = 1e-12;   // relative off-diagonal threshold
constexpr double kRankTol = 1e-12;       // sigma below kRankTol * sigma_max -> 0

// Orthonormal fill-in for columns whose singular value is (numerically)
// zero. Candidates cycle through standard basis vectors; two rounds of
// Gram-Schmidt keep the result orthogonal to everything accepted so far.
void complete_basis(Matrix& u, std::vector<bool> pending) {
  const std::size_t m = u.rows();
  const std::size_t n = u.cols();
  std::size_t next_axis = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!pending[j]) continue;
    std::vector<double> cand(m, 0.0);
    bool accepted = false;
    while (!accepted && next_axis < 2 * m) {
      std::fill(cand.begin(), cand.end(), 0.0);
      cand[next_axis % m] = 1.0;
      ++next_axis;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < n; ++k) {
          if (pending[k]) continue;  // orthogonalize against settled columns
          double dot = 0.0;
          for (std::size_t i = 0; i < m; ++i) dot += cand[i] * u(i, k);
          for (std::size_t i = 0; i < m; ++i) cand[i] -= dot * u(i, k);
        }
      }
      double norm = 0.0;
      for (double v : cand) norm += v * v;
      norm = std::sqrt(norm);
      if (norm > 0.5) {
        for (std::size_t i = 0; i < m; ++i) u(i, j) = cand[i] / norm;
        pending[j] = false;
        accepted = true;
      }
    }
    if (!accepted)
      throw ConvergenceError("svd: failed to complete orthonormal basis");
  }
}

}  // namespace

SvdResult svd(const Matrix& a) {
  if (a.rows() < 1 || a.cols() < 1) throw ShapeError("svd: empty matrix");
  if (!a.all_finite()) throw DomainError("svd: non-finite input");

  const bool transposed = a.cols() > a.rows();
  // Work on B = (transposed ? a^T : a), tall m x n with m >= n. Columns of
  // B are stored as rows of `work` so that rotations touch contiguous memory.
  const Matrix b = transposed ? transpose(a) : a;
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();

  Matrix work = transpose(b);             // n x m, row j = column j of B
  Matrix vt = Matrix::identity(n);        // accumulates V^T (rotations on rows)

  double max_off = 0.0;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    max_off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        auto wp = work.row(p);
        auto wq = work.row(q);
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += wp[i] * wp[i];
          beta += wq[i] * wq[i];
          gamma += wp[i] * wq[i];
        }
        const double scale = std::sqrt(alpha * beta);
        if (scale == 0.0) continue;
        const double off = std::abs(gamma) / scale;
        max_off = std::max(max_off, off);
        if (off <= kRotationTol) continue;

        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const double vp = wp[i], vq = wq[i];
          wp[i] = c * vp - s * vq;
          wq[i] = s * vp + c * vq;
        }
        auto vp_row = vt.row(p);
        auto vq_row = vt.row(q);
        for (std::size_t i = 0; i < n; ++i) {
          const double vp = vp_row[i], vq = vq_row[i];
          vp_row[i] = c * vp - s * vq;
          vq_row[i] = s * vp + c * vq;
        }
      }
    }
    converged = max_off <= kRotationTol;
  }
  if (!converged)
    throw ConvergenceError("svd: no convergence after " +
                           std::to_string(kMaxSweeps) +
                           " sweeps, residual " + std::to_string(max_off));

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) {
    double norm = 0.0;
    const auto wj = work.row(j);
    for (std::size_t i = 0; i < m; ++i) norm += wj[i] * wj[i];
    sigma[j] = std::sqrt(norm);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

  const double sigma_max = sigma.empty() ? 0.0 : sigma[order[0]];
  Matrix u_tall(m, n);
  Matrix vt_sorted(n, n);
  std::vector<double> sv(n);
  std::vector<bool> needs_fill(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    const auto wj = work.row(src);
    const auto vrow = vt.row(src);
    for (std::size_t i = 0; i < n; ++i) vt_sorted(j, i) = vrow[i];
    if (sigma[src] <= kRankTol * sigma_max || sigma[src] == 0.0) {
      sv[j] = 0.0;
      needs_fill[j] = true;
    } else {
      sv[j] = sigma[src];
      for (std::size_t i = 0; i < m; ++i) u_tall(i, j) = wj[i] / sv[j];
    }
  }
  complete_basis(u_tall, needs_fill);

  SvdResult out;
  if (!transposed) {
    out.u = std::move(u_tall);
    out.singular_values = std::move(sv);
    out.vt = std::move(vt_sorted);
  } else {
    // a = (B)^T = V Sigma U_b^T
    out.u = transpose(vt_sorted);
    out.singular_values = std::move(sv);
    out.vt = transpose(u_tall);
  }
  return out;
}

double frobenius_norm(const Matrix& a) {
  double acc = 0.0;
  for (double v : a.data()) acc += v * v;
  return std::sqrt(acc);
}

double frobenius_relative_error(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("frobenius_relative_error: shape mismatch");
  const double ref = frobenius_norm(a);
  if (ref == 0.0)
    throw DomainError("frobenius_relative_error: zero reference norm");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    const double d = a.data()[i] - b.data()[i];
    acc += d * d;
  }
  return std::sqrt(acc) / ref;
}

}  // namespace podsurge::linalg
