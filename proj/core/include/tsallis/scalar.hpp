#pragma once

#include <span>

#include "tsallis/errors.hpp"

namespace tsallis {

// |v| below this switches ln_v / exp_v to the natural log / exp branch.
inline constexpr double kVLimitBand = 1e-8;

// Spectral window 0 < m < M, e.g. a certified bound mA <= B <= MA.
class SpectralWindow {
 public:
  SpectralWindow(double m, double big_m);
  double m() const noexcept { return m_; }
  double big_m() const noexcept { return big_m_; }
  double width() const noexcept { return big_m_ - m_; }
  bool contains(double t) const noexcept { return t >= m_ && t <= big_m_; }

  friend bool operator==(const SpectralWindow&, const SpectralWindow&) = default;

 private:
  double m_;
  double big_m_;
};

// v-logarithm (x^v - 1)/v, natural log for |v| < kVLimitBand. x > 0.
double ln_v(double x, double v);

// v-exponential (1 + v x)^{1/v}, the inverse of ln_v; exp(x) for
// |v| < kVLimitBand. Requires 1 + v x > 0.
double exp_v(double x, double v);

// Lower and upper factors of the refined log-chord estimate over [m, M].
double xi(double t, const SpectralWindow& w);
double psi(double t, const SpectralWindow& w);

// Refined Young factors:
//   m_v(x) = 1 + 2^v v(1-v)(x-1)^2/(x+1)^{v+1}
//   M_v(x) = 1 + v(1-v)(x-1)^2/(2 x^{v+1})
double young_lower_factor(double x, double v);
double young_upper_factor(double x, double v);

// K(x) = (x+1)^2/(4x).
double kantorovich(double x);

// Generalized Kantorovich constant K(m, M, p) for p != 0; the limit value 1
// inside |p - 1| < kVLimitBand.
double generalized_kantorovich(const SpectralWindow& w, double p);

// g(v, x) = 2x^{v+1} - (1-v){(1+v)x - v}, 0 < v <= 1, 0 < x <= 1.
double g_remark(double v, double x);

// Closed-form minimizer ((1-v)/2)^{1/v} of g(v, .) and its minimum value.
double g_remark_argmin(double v);
double g_remark_min(double v);

// f_v(t) = v(1-v)(t-1)/t^{v+1}.
double hermite_f(double t, double v);

// ln_v(s) + s^{v-1}(t - s) - ln_v(t); nonnegative by concavity of ln_v.
double tangent_gap(double s, double t, double v);

struct ComparisonValues {
  double g;  // ln_v s + s^{v-1} t - s^v
  double h;  // s t - 1 - (ln_v s) t^v
  double f;  // g - h
};

ComparisonValues compare_fv(double s, double t, double v);

// Chord of ln_v through (m, ln_v m) and (M, ln_v M), evaluated at t.
double ln_v_chord(double t, const SpectralWindow& w, double v);

struct ClassicalEntropies {
  double shannon;          // H^exp(s) = sum s_j e^{-s_j}
  double tsallis;          // T_v^exp(s) = sum s_j exp_{-v}(-s_j)
  double relative;         // D^exp(s|t) = sum (t_j - s_j) e^{-s_j}
  double tsallis_relative; // D_v^exp(s|t)
};

ClassicalEntropies classical_entropies(std::span<const double> s,
                                       std::span<const double> t, double v);

}  // namespace tsallis
