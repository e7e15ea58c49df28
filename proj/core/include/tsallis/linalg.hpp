#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <utility>

#include "tsallis/errors.hpp"

namespace tsallis {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kDefaultTol = 1e-9;

// Symmetric positive definite matrix; the finite-dimensional stand-in for a
// positive invertible operator. Immutable after construction.
class SpdMatrix {
 public:
  // Validates symmetry (relative 1e-12), finiteness and positive definiteness.
  explicit SpdMatrix(Matrix m);

  static SpdMatrix identity(Index n);
  static SpdMatrix diagonal(const Vector& d);

  // Skips the eigenvalue check; only symmetrizes. For values that are
  // positive definite by construction (products of the library itself).
  static SpdMatrix trusted(Matrix m);

  Index dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(Index i, Index j) const { return m_(i, j); }

  friend bool operator==(const SpdMatrix& a, const SpdMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  struct TrustedTag {};
  SpdMatrix(Matrix m, TrustedTag) : m_(std::move(m)) {}

  Matrix m_;
};

// Eigenvalues ascending; eigenvectors stored column-wise.
struct SpectralDecomp {
  Vector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
  Index dim() const noexcept { return eigenvalues.size(); }
};

Matrix symmetrize(const Matrix& x);

bool is_symmetric(const Matrix& x, double rel_tol = 1e-12);

// Largest absolute eigenvalue of a symmetric matrix.
double spectral_norm(const Matrix& sym);

// Eigen-decomposition of any real symmetric matrix. Throws ConvergenceError
// when the solver does not converge.
SpectralDecomp symmetric_eigen(const Matrix& sym);

SpectralDecomp spectral_decompose(const SpdMatrix& a);

namespace detail {
[[noreturn]] void throw_function_domain(double eigenvalue, double result);
}  // namespace detail

// Q diag(f(lambda_i)) Q^T. f must be finite on every eigenvalue; a DomainError
// names the first eigenvalue where it is not.
template <class F>
Matrix apply_scalar_function(const SpectralDecomp& d, F&& f) {
  Vector fx(d.dim());
  for (Index i = 0; i < d.dim(); ++i) {
    const double lambda = d.eigenvalues[i];
    double y = 0.0;
    try {
      y = f(lambda);
    } catch (const DomainError&) {
      detail::throw_function_domain(lambda, std::nan(""));
    }
    if (!std::isfinite(y)) detail::throw_function_domain(lambda, y);
    fx[i] = y;
  }
  Matrix out = d.eigenvectors * fx.asDiagonal() * d.eigenvectors.transpose();
  return symmetrize(out);
}

template <class F>
Matrix apply_scalar_function(const SpdMatrix& a, F&& f) {
  return apply_scalar_function(spectral_decompose(a), std::forward<F>(f));
}

// A^{1/2} X A^{1/2}, symmetrized.
Matrix congruence_sandwich(const SpdMatrix& a, const Matrix& x);

SpdMatrix matrix_power(const SpdMatrix& a, double p);

struct LoewnerVerdict {
  double margin = 0.0;  // lambda_min(R - L)
  double scale = 1.0;   // max(1, ||L||_2, ||R||_2)
  double tol = kDefaultTol;
  bool holds = false;

  double normalized_margin() const { return margin / scale; }
};

// Checks L <= R in the Loewner order: holds iff margin >= -tol * scale.
LoewnerVerdict loewner_leq(const Matrix& lhs, const Matrix& rhs,
                           double tol = kDefaultTol);

}  // namespace tsallis
