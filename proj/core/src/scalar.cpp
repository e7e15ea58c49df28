#include "tsallis/scalar.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace tsallis {
namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (got " << value << ")";
  return os.str();
}

void require_positive(double x, const char* name) {
  if (!(x > 0.0)) throw DomainError(describe(name, x), x);
}

bool in_limit_band(double v) { return std::abs(v) < kVLimitBand; }

}  // namespace

SpectralWindow::SpectralWindow(double m, double big_m) : m_(m), big_m_(big_m) {
  if (!(m > 0.0) || !(big_m > m) || !std::isfinite(big_m))
    throw DomainError(describe("spectral window needs 0 < m < M", m), m);
}

double ln_v(double x, double v) {
  require_positive(x, "ln_v needs x > 0");
  if (in_limit_band(v)) return std::log(x);
  return std::expm1(v * std::log(x)) / v;
}

double exp_v(double x, double v) {
  if (in_limit_band(v)) return std::exp(x);
  const double base = 1.0 + v * x;
  if (!(base > 0.0))
    throw DomainError(describe("exp_v needs 1 + v*x > 0", x), x);
  return std::exp(std::log1p(v * x) / v);
}

double xi(double t, const SpectralWindow& w) {
  if (!w.contains(t)) throw DomainError(describe("xi needs t in [m, M]", t), t);
  const double m = w.m(), big_m = w.big_m(), d = w.width();
  const double num = std::pow(2.0, (t - m) / d) * (t - m) * (big_m - t) *
                     std::pow(big_m, (t - big_m) / d);
  return 1.0 + num / std::pow(big_m + m, (t + big_m - 2.0 * m) / d);
}

double psi(double t, const SpectralWindow& w) {
  if (!w.contains(t)) throw DomainError(describe("psi needs t in [m, M]", t), t);
  const double m = w.m(), big_m = w.big_m(), d = w.width();
  const double num = (t - m) * (big_m - t) * std::pow(big_m, (t - big_m) / d);
  return 1.0 + num / (2.0 * std::pow(m, (t + big_m - 2.0 * m) / d));
}

double young_lower_factor(double x, double v) {
  require_positive(x, "m_v needs x > 0");
  const double dx = x - 1.0;
  return 1.0 + std::pow(2.0, v) * v * (1.0 - v) * dx * dx /
                   std::pow(x + 1.0, v + 1.0);
}

double young_upper_factor(double x, double v) {
  require_positive(x, "M_v needs x > 0");
  const double dx = x - 1.0;
  return 1.0 + v * (1.0 - v) * dx * dx / (2.0 * std::pow(x, v + 1.0));
}

double kantorovich(double x) {
  require_positive(x, "K needs x > 0");
  return (x + 1.0) * (x + 1.0) / (4.0 * x);
}

double generalized_kantorovich(const SpectralWindow& w, double p) {
  if (p == 0.0 || !std::isfinite(p))
    throw DomainError(describe("K(m, M, p) needs a finite p != 0", p), p);
  if (std::abs(p - 1.0) < kVLimitBand) return 1.0;
  const double m = w.m(), big_m = w.big_m();
  const double mp = std::pow(m, p), big_mp = std::pow(big_m, p);
  const double cross = m * big_mp - big_m * mp;
  const double lead = cross / ((p - 1.0) * (big_m - m));
  const double inner = (p - 1.0) * (big_mp - mp) / (p * cross);
  return lead * std::pow(inner, p);
}

double g_remark(double v, double x) {
  if (!(v > 0.0 && v <= 1.0))
    throw DomainError(describe("g(v, x) needs 0 < v <= 1", v), v);
  if (!(x > 0.0 && x <= 1.0))
    throw DomainError(describe("g(v, x) needs 0 < x <= 1", x), x);
  return 2.0 * std::pow(x, v + 1.0) - (1.0 - v) * ((1.0 + v) * x - v);
}

double g_remark_argmin(double v) {
  if (!(v > 0.0 && v <= 1.0))
    throw DomainError(describe("g(v, x) needs 0 < v <= 1", v), v);
  return std::pow((1.0 - v) / 2.0, 1.0 / v);
}

double g_remark_min(double v) {
  return v * (1.0 - v) * (1.0 - g_remark_argmin(v));
}

double hermite_f(double t, double v) {
  require_positive(t, "f_v needs t > 0");
  return v * (1.0 - v) * (t - 1.0) / std::pow(t, v + 1.0);
}

double tangent_gap(double s, double t, double v) {
  require_positive(s, "tangent_gap needs s > 0");
  require_positive(t, "tangent_gap needs t > 0");
  return ln_v(s, v) + std::pow(s, v - 1.0) * (t - s) - ln_v(t, v);
}

ComparisonValues compare_fv(double s, double t, double v) {
  require_positive(s, "compare_fv needs s > 0");
  require_positive(t, "compare_fv needs t > 0");
  const double lns = ln_v(s, v);
  ComparisonValues out{};
  out.g = lns + std::pow(s, v - 1.0) * t - std::pow(s, v);
  out.h = s * t - 1.0 - lns * std::pow(t, v);
  out.f = out.g - out.h;
  return out;
}

double ln_v_chord(double t, const SpectralWindow& w, double v) {
  const double d = w.width();
  return ln_v(w.m(), v) * (w.big_m() - t) / d +
         ln_v(w.big_m(), v) * (t - w.m()) / d;
}

ClassicalEntropies classical_entropies(std::span<const double> s,
                                       std::span<const double> t, double v) {
  if (s.size() != t.size())
    throw DomainError("classical_entropies needs equal-length vectors",
                      static_cast<double>(t.size()));
  ClassicalEntropies out{};
  const bool limit = in_limit_band(v);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double sj = s[j], tj = t[j];
    if (!(sj >= 0.0)) throw DomainError(describe("entries must be >= 0", sj), sj);
    if (!(tj >= 0.0)) throw DomainError(describe("entries must be >= 0", tj), tj);
    const double ps = std::exp(-sj);
    out.shannon += sj * ps;
    out.relative += (tj - sj) * ps;
    if (limit) {
      out.tsallis += sj * ps;
      out.tsallis_relative += (tj - sj) * ps;
    } else {
      const double es = exp_v(-sj, -v);
      const double et = exp_v(-tj, -v);
      out.tsallis += sj * es;
      out.tsallis_relative += (std::pow(et / es, v) * tj - sj) * es;
    }
  }
  return out;
}

}  // namespace tsallis
