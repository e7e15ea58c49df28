#include "tsallis/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace tsallis {
namespace {

double condition_estimate(const Matrix& a) {
  Eigen::LDLT<Matrix> ldlt(a);
  const double rc = ldlt.rcond();
  return rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
}

bool is_diagonal(const Matrix& a) {
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j && a(i, j) != 0.0) return false;
  return true;
}

// Exact decomposition of a diagonal matrix: sorted diagonal, permutation Q.
SpectralDecomp diagonal_decompose(const Matrix& a) {
  const Index n = a.rows();
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return a(i, i) < a(j, j); });
  SpectralDecomp d{Vector(n), Matrix::Zero(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    d.eigenvalues[k] = a(src, src);
    d.eigenvectors(src, k) = 1.0;
  }
  return d;
}

}  // namespace

namespace detail {
void throw_function_domain(double eigenvalue, double result) {
  std::ostringstream os;
  os.precision(17);
  os << "scalar function undefined at eigenvalue " << eigenvalue
     << " (result " << result << ")";
  throw DomainError(os.str(), eigenvalue);
}
}  // namespace detail

SpdMatrix::SpdMatrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvalidMatrixError(InvalidMatrixError::Reason::kShape,
                             "matrix must be square and non-empty");
  if (!m.allFinite())
    throw InvalidMatrixError(InvalidMatrixError::Reason::kNonFinite,
                             "matrix has non-finite entries");
  if (!is_symmetric(m))
    throw InvalidMatrixError(InvalidMatrixError::Reason::kAsymmetric,
                             "matrix is not symmetric");
  m = symmetrize(m);
  const SpectralDecomp d = symmetric_eigen(m);
  if (!(d.eigenvalues[0] > 0.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "matrix is not positive definite (smallest eigenvalue "
       << d.eigenvalues[0] << ")";
    throw InvalidMatrixError(InvalidMatrixError::Reason::kNotPositiveDefinite,
                             os.str());
  }
  m_ = std::move(m);
}

SpdMatrix SpdMatrix::identity(Index n) {
  return SpdMatrix(Matrix::Identity(n, n), TrustedTag{});
}

SpdMatrix SpdMatrix::diagonal(const Vector& d) {
  return SpdMatrix(Matrix(d.asDiagonal()));
}

SpdMatrix SpdMatrix::trusted(Matrix m) {
  return SpdMatrix(symmetrize(m), TrustedTag{});
}

Matrix SpectralDecomp::reconstruct() const {
  return symmetrize(eigenvectors * eigenvalues.asDiagonal() *
                    eigenvectors.transpose());
}

Matrix symmetrize(const Matrix& x) { return 0.5 * (x + x.transpose()); }

bool is_symmetric(const Matrix& x, double rel_tol) {
  if (x.rows() != x.cols()) return false;
  const double bound =
      rel_tol * std::max(1.0, x.size() ? x.cwiseAbs().maxCoeff() : 0.0);
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = j + 1; i < x.rows(); ++i)
      if (std::abs(x(i, j) - x(j, i)) > bound) return false;
  return true;
}

double spectral_norm(const Matrix& sym) {
  if (sym.size() == 0) return 0.0;
  const SpectralDecomp d = symmetric_eigen(sym);
  return std::max(std::abs(d.eigenvalues[0]),
                  std::abs(d.eigenvalues[d.dim() - 1]));
}

SpectralDecomp symmetric_eigen(const Matrix& sym) {
  if (sym.rows() != sym.cols())
    throw DimensionError("eigen-decomposition needs a square matrix");
  if (is_diagonal(sym)) return diagonal_decompose(sym);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    const double cond = condition_estimate(sym);
    std::ostringstream os;
    os << "symmetric eigensolver did not converge (condition estimate "
       << cond << ")";
    throw ConvergenceError(os.str(), cond);
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomp spectral_decompose(const SpdMatrix& a) {
  SpectralDecomp d = symmetric_eigen(a.matrix());
  if (!(d.eigenvalues[0] > 0.0)) {
    const double cond = condition_estimate(a.matrix());
    std::ostringstream os;
    os << "eigensolver returned non-positive eigenvalue " << d.eigenvalues[0]
       << " for a positive definite input (condition estimate " << cond << ")";
    throw ConvergenceError(os.str(), cond);
  }
  return d;
}

Matrix congruence_sandwich(const SpdMatrix& a, const Matrix& x) {
  if (x.rows() != a.dim() || x.cols() != a.dim())
    throw DimensionError("congruence_sandwich: dimension mismatch");
  const Matrix half =
      apply_scalar_function(a, [](double t) { return std::sqrt(t); });
  return symmetrize(half * x * half);
}

SpdMatrix matrix_power(const SpdMatrix& a, double p) {
  if (p == 1.0) return a;
  if (p == 0.0) return SpdMatrix::identity(a.dim());
  return SpdMatrix::trusted(
      apply_scalar_function(a, [p](double t) { return std::pow(t, p); }));
}

LoewnerVerdict loewner_leq(const Matrix& lhs, const Matrix& rhs, double tol) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() ||
      lhs.rows() != lhs.cols())
    throw DimensionError("loewner_leq: dimension mismatch");
  LoewnerVerdict v;
  v.tol = tol;
  v.margin = symmetric_eigen(symmetrize(rhs - lhs)).eigenvalues[0];
  v.scale = std::max({1.0, spectral_norm(symmetrize(lhs)),
                      spectral_norm(symmetrize(rhs))});
  v.holds = v.margin >= -tol * v.scale;
  return v;
}

}  // namespace tsallis
