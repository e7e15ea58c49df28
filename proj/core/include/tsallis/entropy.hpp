#pragma once

#include <optional>

#include "tsallis/linalg.hpp"
#include "tsallis/scalar.hpp"

namespace tsallis {

// Slack allowed when certifying mA <= B <= MA from the eigenvalues of
// A^{-1/2} B A^{-1/2}; relative to max(1, M).
inline constexpr double kCertificateTol = 1e-10;

// A pair (A, B) of equal dimension, optionally with a certified relative
// spectral window: mA <= B <= MA.
class OperatorPair {
 public:
  OperatorPair(SpdMatrix a, SpdMatrix b);
  // Throws PreconditionError when the window cannot be certified.
  OperatorPair(SpdMatrix a, SpdMatrix b, SpectralWindow window);

  const SpdMatrix& a() const noexcept { return a_; }
  const SpdMatrix& b() const noexcept { return b_; }
  const std::optional<SpectralWindow>& window() const noexcept { return window_; }
  Index dim() const noexcept { return a_.dim(); }

 private:
  SpdMatrix a_;
  SpdMatrix b_;
  std::optional<SpectralWindow> window_;
};

// Cached geometry of a pair: A^{1/2}, A^{-1/2} and the spectral decomposition
// of X = A^{-1/2} B A^{-1/2}. Every perspective A^{1/2} f(X) A^{1/2} reuses it.
class Perspective {
 public:
  Perspective(const SpdMatrix& a, const SpdMatrix& b);
  explicit Perspective(const OperatorPair& p) : Perspective(p.a(), p.b()) {}

  template <class F>
  Matrix apply(F&& f) const {
    const Matrix fx_mat = apply_scalar_function(x_, std::forward<F>(f));
    return symmetrize(a_half_ * fx_mat * a_half_);
  }

  const SpectralDecomp& relative_spectrum() const noexcept { return x_; }
  double lambda_min() const { return x_.eigenvalues[0]; }
  double lambda_max() const { return x_.eigenvalues[x_.dim() - 1]; }
  const Matrix& a() const noexcept { return a_; }
  const Matrix& a_half() const noexcept { return a_half_; }
  Index dim() const noexcept { return x_.dim(); }

 private:
  Matrix a_;
  Matrix a_half_;
  SpectralDecomp x_;
};

// Eigenvalues of A^{-1/2} B A^{-1/2}, ascending.
Vector relative_spectrum(const SpdMatrix& a, const SpdMatrix& b);

// A natural_v B = A^{1/2} X^v A^{1/2}; the weighted geometric mean for v in [0, 1].
SpdMatrix natural_mean(const OperatorPair& p, double v);
SpdMatrix natural_mean(const Perspective& p, double v);
SpdMatrix natural_mean(const SpdMatrix& a, const SpdMatrix& b, double v);

// S(A|B) = A^{1/2} ln(X) A^{1/2}.
Matrix relative_entropy(const OperatorPair& p);
Matrix relative_entropy(const Perspective& p);

// T_v(A|B) = A^{1/2} ln_v(X) A^{1/2}, v in [-1, 0) U (0, 1].
Matrix tsallis_entropy(const OperatorPair& p, double v);
Matrix tsallis_entropy(const Perspective& p, double v);

// (A natural_v B - A)/v; the second algebraic route to T_v.
Matrix tsallis_entropy_mean_form(const OperatorPair& p, double v);

// E_v(A|B) = A^{1/2} exp_v(X) A^{1/2}. For v < 0 requires
// lambda_max(X) < 1/|v|.
SpdMatrix exp_entropy(const OperatorPair& p, double v);
SpdMatrix exp_entropy(const Perspective& p, double v);

// E(A|B) = A^{1/2} exp(X) A^{1/2}, the v -> 0 limit of E_v.
SpdMatrix exp_entropy_limit(const OperatorPair& p);
SpdMatrix exp_entropy_limit(const Perspective& p);

// Throws DomainError unless v is in [-1, 0) U (0, 1].
void require_entropy_parameter(double v);

// Throws DomainError naming lambda_max and 1/|v| when v < 0 and the relative
// spectrum leaves the exp_v domain.
void require_exp_domain(const Perspective& p, double v);

}  // namespace tsallis
