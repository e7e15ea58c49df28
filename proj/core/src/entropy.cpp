#include "tsallis/entropy.hpp"

#include <sstream>

namespace tsallis {

OperatorPair::OperatorPair(SpdMatrix a, SpdMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.dim() != b_.dim())
    throw DimensionError("operator pair needs A and B of equal dimension");
}

OperatorPair::OperatorPair(SpdMatrix a, SpdMatrix b, SpectralWindow window)
    : OperatorPair(std::move(a), std::move(b)) {
  const Vector spec = relative_spectrum(a_, b_);
  const double slack = kCertificateTol * std::max(1.0, window.big_m());
  const double lo = spec[0], hi = spec[spec.size() - 1];
  if (lo < window.m() - slack || hi > window.big_m() + slack) {
    std::ostringstream os;
    os.precision(17);
    os << "window certificate mA <= B <= MA fails: spectrum of "
          "A^{-1/2} B A^{-1/2} is ["
       << lo << ", " << hi << "], window is [" << window.m() << ", "
       << window.big_m() << "]";
    throw PreconditionError(os.str());
  }
  window_ = window;
}

Perspective::Perspective(const SpdMatrix& a, const SpdMatrix& b) : a_(a.matrix()) {
  if (a.dim() != b.dim())
    throw DimensionError("perspective needs A and B of equal dimension");
  const SpectralDecomp da = spectral_decompose(a);
  const Vector sq = da.eigenvalues.cwiseSqrt();
  a_half_ = symmetrize(da.eigenvectors * sq.asDiagonal() *
                       da.eigenvectors.transpose());
  const Matrix a_inv_half = symmetrize(
      da.eigenvectors * sq.cwiseInverse().asDiagonal() *
      da.eigenvectors.transpose());
  x_ = symmetric_eigen(symmetrize(a_inv_half * b.matrix() * a_inv_half));
  if (!(x_.eigenvalues[0] > 0.0)) {
    std::ostringstream os;
    os << "A^{-1/2} B A^{-1/2} lost positive definiteness numerically "
          "(smallest eigenvalue "
       << x_.eigenvalues[0] << ")";
    throw ConvergenceError(os.str(), 1.0 / std::abs(x_.eigenvalues[0]));
  }
}

Vector relative_spectrum(const SpdMatrix& a, const SpdMatrix& b) {
  return Perspective(a, b).relative_spectrum().eigenvalues;
}

void require_entropy_parameter(double v) {
  if (!(v >= -1.0 && v <= 1.0) || v == 0.0) {
    std::ostringstream os;
    os << "entropy parameter v must lie in [-1, 0) U (0, 1], got " << v;
    throw DomainError(os.str(), v);
  }
}

void require_exp_domain(const Perspective& p, double v) {
  if (v >= 0.0) return;
  const double bound = 1.0 / std::abs(v);
  if (!(p.lambda_max() < bound)) {
    std::ostringstream os;
    os.precision(17);
    os << "exp_v domain violated: lambda_max(A^{-1/2} B A^{-1/2}) = "
       << p.lambda_max() << " is not below 1/|v| = " << bound;
    throw DomainError(os.str(), p.lambda_max());
  }
}

SpdMatrix natural_mean(const Perspective& p, double v) {
  if (v == 0.0) return SpdMatrix::trusted(p.a());
  return SpdMatrix::trusted(p.apply([v](double x) { return std::pow(x, v); }));
}

SpdMatrix natural_mean(const OperatorPair& p, double v) {
  if (v == 0.0) return p.a();
  if (v == 1.0) return p.b();
  return natural_mean(Perspective(p), v);
}

SpdMatrix natural_mean(const SpdMatrix& a, const SpdMatrix& b, double v) {
  return natural_mean(OperatorPair(a, b), v);
}

Matrix relative_entropy(const Perspective& p) {
  return p.apply([](double x) { return std::log(x); });
}

Matrix relative_entropy(const OperatorPair& p) {
  return relative_entropy(Perspective(p));
}

Matrix tsallis_entropy(const Perspective& p, double v) {
  require_entropy_parameter(v);
  return p.apply([v](double x) { return ln_v(x, v); });
}

Matrix tsallis_entropy(const OperatorPair& p, double v) {
  return tsallis_entropy(Perspective(p), v);
}

Matrix tsallis_entropy_mean_form(const OperatorPair& p, double v) {
  require_entropy_parameter(v);
  return (natural_mean(p, v).matrix() - p.a().matrix()) / v;
}

SpdMatrix exp_entropy(const Perspective& p, double v) {
  require_entropy_parameter(v);
  require_exp_domain(p, v);
  return SpdMatrix::trusted(p.apply([v](double x) { return exp_v(x, v); }));
}

SpdMatrix exp_entropy(const OperatorPair& p, double v) {
  return exp_entropy(Perspective(p), v);
}

SpdMatrix exp_entropy_limit(const Perspective& p) {
  return SpdMatrix::trusted(p.apply([](double x) { return std::exp(x); }));
}

SpdMatrix exp_entropy_limit(const OperatorPair& p) {
  return exp_entropy_limit(Perspective(p));
}

}  // namespace tsallis
