#include "tsallis/harness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tsallis/quadrature.hpp"

namespace tsallis {
namespace {

using Id = InequalityId;

constexpr double kSignFloor = 1e-12;

[[noreturn]] void precondition(const InequalityCase& c, const std::string& msg) {
  throw PreconditionError(std::string(to_string(c.id)) + ": " + msg);
}

double param(const std::optional<double>& x) { return *x; }

// v in [-1, 0) U (0, 1]
void require_entropy_v(const InequalityCase& c) {
  const double v = param(c.v);
  if (!(v >= -1.0 && v <= 1.0) || v == 0.0)
    precondition(c, "v must lie in [-1, 0) U (0, 1]");
}

void require_positive_v(const InequalityCase& c) {
  const double v = param(c.v);
  if (!(v > 0.0 && v <= 1.0)) precondition(c, "v must lie in (0, 1]");
}

void require_negative_v(const InequalityCase& c) {
  const double v = param(c.v);
  if (!(v >= -1.0 && v < 0.0)) precondition(c, "v must lie in [-1, 0)");
}

void require_positive(const InequalityCase& c, const std::optional<double>& x,
                      const char* name) {
  if (!(param(x) > 0.0)) precondition(c, std::string(name) + " must be > 0");
}

void require_exp_domain(const InequalityCase& c, const Perspective& p, double v) {
  if (v < 0.0 && !(p.lambda_max() < 1.0 / std::abs(v))) {
    std::ostringstream os;
    os.precision(17);
    os << "exp_v domain needs lambda_max(A^{-1/2}BA^{-1/2}) = " << p.lambda_max()
       << " < 1/|v| = " << 1.0 / std::abs(v);
    precondition(c, os.str());
  }
}

const PositiveMapSpec& require_map(const InequalityCase& c) {
  const PositiveMapSpec& phi = *c.map;
  if (phi.input_dim() != c.pair.dim())
    precondition(c, "positive map input dimension does not match the pair");
  return phi;
}

double clamp_to(const SpectralWindow& w, double t) {
  return std::clamp(t, w.m(), w.big_m());
}

// (ln_v m)/(M-m) (MA - B) + (ln_v M)/(M-m) (B - mA); v = 0 gives ln.
Matrix chord_term(const OperatorPair& pair, const SpectralWindow& w, double v) {
  const Matrix& a = pair.a().matrix();
  const Matrix& b = pair.b().matrix();
  const double lm = ln_v(w.m(), v), lbig = ln_v(w.big_m(), v);
  return lm / w.width() * (w.big_m() * a - b) +
         lbig / w.width() * (b - w.m() * a);
}

Matrix tsallis_of(const SpdMatrix& a, const SpdMatrix& b, double v) {
  return tsallis_entropy(Perspective(a, b), v);
}

std::vector<LabeledTerm> known_bounds(const InequalityCase& c, bool tsallis) {
  const Perspective p(c.pair);
  const Matrix& a = c.pair.a().matrix();
  const Matrix& b = c.pair.b().matrix();
  Matrix mid;
  std::string label;
  if (tsallis) {
    require_entropy_v(c);
    mid = tsallis_entropy(p, param(c.v));
    label = "T_v(A|B)";
  } else {
    mid = relative_entropy(p);
    label = "S(A|B)";
  }
  return {{"A - AB^-1A", a - natural_mean(p, -1.0).matrix()},
          {label, std::move(mid)},
          {"B - A", b - a}};
}

std::vector<LabeledTerm> chord(const InequalityCase& c, bool tsallis) {
  const SpectralWindow& w = *c.pair.window();
  const Perspective p(c.pair);
  if (tsallis) {
    require_entropy_v(c);
    const double v = param(c.v);
    return {{"ln_v chord", chord_term(c.pair, w, v)},
            {"T_v(A|B)", tsallis_entropy(p, v)}};
  }
  return {{"ln chord", chord_term(c.pair, w, 0.0)},
          {"S(A|B)", relative_entropy(p)}};
}

enum class SandwichFactor { kXiPsi, kXiPsiReweighted, kDragomir, kDragomirLogK };

std::vector<LabeledTerm> log_chord_sandwich(const InequalityCase& c,
                                            SandwichFactor factor) {
  const SpectralWindow& w = *c.pair.window();
  const Perspective p(c.pair);
  const Index n = c.pair.dim();
  Matrix mid = relative_entropy(p) - chord_term(c.pair, w, 0.0);
  Matrix lower, upper;
  const double m = w.m(), big_m = w.big_m();
  switch (factor) {
    case SandwichFactor::kXiPsi:
      lower = p.apply([&](double t) { return std::log(xi(clamp_to(w, t), w)); });
      upper = p.apply([&](double t) { return std::log(psi(clamp_to(w, t), w)); });
      break;
    case SandwichFactor::kXiPsiReweighted: {
      // Young's inequality with a = M, b = m reproduces t at weight (M-t)/(M-m).
      const auto weight = [&](double t) { return (big_m - clamp_to(w, t)) / w.width(); };
      lower = p.apply([&](double t) {
        return std::log(young_lower_factor(m / big_m, weight(t)));
      });
      upper = p.apply([&](double t) {
        return std::log(young_upper_factor(m / big_m, weight(t)));
      });
      break;
    }
    case SandwichFactor::kDragomir:
    case SandwichFactor::kDragomirLogK: {
      const double k = kantorovich(big_m / m);
      const double coef = factor == SandwichFactor::kDragomir ? k : std::log(k);
      const double centre = 0.5 * (big_m + m);
      const Matrix abs_term =
          p.apply([&](double t) { return std::abs(t - centre); }) / w.width();
      const Matrix half_a = 0.5 * p.a();
      lower = coef * (half_a - abs_term);
      upper = coef * (half_a + abs_term);
      break;
    }
  }
  return {{"0", Matrix::Zero(n, n)},
          {"lower bound", std::move(lower)},
          {"S(A|B) - ln chord", std::move(mid)},
          {"upper bound", std::move(upper)}};
}

std::vector<LabeledTerm> tangent_bounds(const InequalityCase& c) {
  require_entropy_v(c);
  require_positive(c, c.s, "s");
  require_positive(c, c.t, "t");
  const double v = param(c.v), s = param(c.s), t = param(c.t);
  const Perspective p(c.pair);
  const Matrix& a = c.pair.a().matrix();
  const Matrix& b = c.pair.b().matrix();
  Matrix lower = ln_v(t, v) * a + natural_mean(p, v).matrix() -
                 t * natural_mean(p, v - 1.0).matrix();
  Matrix upper = ln_v(s, v) * a + std::pow(s, v - 1.0) * (b - s * a);
  return {{"(ln_v t)A + A nat_v B - t A nat_{v-1} B", std::move(lower)},
          {"T_v(A|B)", tsallis_entropy(p, v)},
          {"(ln_v s)A + s^{v-1}(B - sA)", std::move(upper)}};
}

std::vector<LabeledTerm> furuichi_36(const InequalityCase& c) {
  require_positive_v(c);
  require_positive(c, c.s, "s");
  const double v = param(c.v), s = param(c.s);
  const Perspective p(c.pair);
  const Matrix& a = c.pair.a().matrix();
  const Matrix& b = c.pair.b().matrix();
  const Matrix mean = natural_mean(p, v).matrix();
  const double lns = ln_v(s, v);
  Matrix lower = mean - s * natural_mean(p, v - 1.0).matrix() + lns * a;
  Matrix upper = s * b - a - lns * mean;
  return {{"A #_v B - s A nat_{v-1} B + (ln_v s)A", std::move(lower)},
          {"T_v(A|B)", tsallis_entropy(p, v)},
          {"sB - A - (ln_v s) A #_v B", std::move(upper)}};
}

std::vector<LabeledTerm> mono(const InequalityCase& c, bool refined) {
  if (refined)
    require_positive_v(c);
  else
    require_entropy_v(c);
  const PositiveMapSpec& phi = require_map(c);
  const double v = param(c.v);
  const SpdMatrix pa = apply_map(phi, c.pair.a());
  const SpdMatrix pb = apply_map(phi, c.pair.b());
  std::vector<LabeledTerm> terms;
  terms.push_back({"Phi(T_v(A|B))",
                   apply_map(phi, tsallis_entropy(c.pair, v))});
  if (refined)
    terms.push_back({"integral middle term",
                     integral_middle_term(c.pair, v, phi, c.quad_nodes)});
  terms.push_back({"T_v(Phi(A)|Phi(B))", tsallis_of(pa, pb, v)});
  return terms;
}

std::vector<LabeledTerm> ando(const InequalityCase& c) {
  const double v = param(c.v), mu = param(c.mu);
  if (!(v >= 0.0 && v <= 1.0)) precondition(c, "v must lie in [0, 1]");
  if (!(mu >= 0.0 && mu <= 1.0)) precondition(c, "mu must lie in [0, 1]");
  const PositiveMapSpec& phi = require_map(c);
  const SpdMatrix g = natural_mean(c.pair, v);
  const SpdMatrix g_a = natural_mean(g, c.pair.a(), mu);
  const SpdMatrix g_b = natural_mean(g, c.pair.b(), mu);
  const SpdMatrix pa = apply_map(phi, c.pair.a());
  const SpdMatrix pb = apply_map(phi, c.pair.b());
  return {{"Phi(A #_v B)", apply_map(phi, g.matrix())},
          {"Phi(G #_mu A) #_v Phi(G #_mu B)",
           natural_mean(apply_map(phi, g_a), apply_map(phi, g_b), v).matrix()},
          {"Phi(A) #_v Phi(B)", natural_mean(pa, pb, v).matrix()}};
}

std::vector<LabeledTerm> complementary(const InequalityCase& c) {
  require_positive_v(c);
  require_positive(c, c.s, "s");
  require_positive(c, c.t, "t");
  const PositiveMapSpec& phi = require_map(c);
  const double v = param(c.v), s = param(c.s), t = param(c.t);
  const Perspective p(c.pair);
  const Matrix& a = c.pair.a().matrix();
  const Matrix& b = c.pair.b().matrix();
  const SpdMatrix pa = apply_map(phi, c.pair.a());
  const SpdMatrix pb = apply_map(phi, c.pair.b());
  const Matrix inner =
      t * natural_mean(p, v - 1.0).matrix() - natural_mean(p, v).matrix();
  Matrix rhs = apply_map(phi, tsallis_entropy(p, v)) +
               (ln_v(s, v) - ln_v(t, v)) * pa.matrix() + apply_map(phi, inner) +
               std::pow(s, v - 1.0) * apply_map(phi, Matrix(b - s * a));
  return {{"T_v(Phi(A)|Phi(B))", tsallis_of(pa, pb, v)},
          {"complementary upper bound", std::move(rhs)}};
}

std::vector<LabeledTerm> complementary_limit(const InequalityCase& c,
                                             bool printed) {
  require_positive(c, c.s, "s");
  require_positive(c, c.t, "t");
  const PositiveMapSpec& phi = require_map(c);
  const double s = param(c.s), t = param(c.t);
  const Perspective p(c.pair);
  const SpdMatrix pa = apply_map(phi, c.pair.a());
  const SpdMatrix pb = apply_map(phi, c.pair.b());
  const Matrix harmonic = natural_mean(p, -1.0).matrix();  // A B^{-1} A
  const Matrix& b = c.pair.b().matrix();
  Matrix rhs = apply_map(phi, relative_entropy(p)) +
               (std::log(s / t) - 2.0) * pa.matrix();
  if (printed)
    rhs += apply_map(phi, Matrix(t * harmonic - b / s));
  else
    rhs += t * apply_map(phi, harmonic) + pb.matrix() / s;
  return {{"S(Phi(A)|Phi(B))", relative_entropy(Perspective(pa, pb))},
          {printed ? "printed limit bound" : "re-derived limit bound",
           std::move(rhs)}};
}

std::vector<LabeledTerm> expv_operator(const InequalityCase& c) {
  require_entropy_v(c);
  const double v = param(c.v);
  const Perspective p(c.pair);
  require_exp_domain(c, p, v);
  const Matrix& a = p.a();
  const double half_power = 0.5 * (1.0 - v);
  Matrix midpoint = a + p.apply([&](double x) {
    return x * std::pow(exp_v(x, 0.5 * v), half_power);
  });
  Matrix trapezoid = a + 0.5 * p.apply([&](double x) {
    return x + x * std::pow(exp_v(x, v), 1.0 - v);
  });
  Matrix ev = exp_entropy(p, v).matrix();
  if (v < 0.0)
    return {{"A + A^1/2[X exp_{v/2}(X)^{(1-v)/2}]A^1/2", std::move(midpoint)},
            {"E_v(A|B)", std::move(ev)},
            {"A + (1/2)A^1/2[X + X exp_v(X)^{1-v}]A^1/2", std::move(trapezoid)}};
  return {{"A + (1/2)A^1/2[X + X exp_v(X)^{1-v}]A^1/2", std::move(trapezoid)},
          {"E_v(A|B)", std::move(ev)},
          {"A + A^1/2[X exp_{v/2}(X)^{(1-v)/2}]A^1/2", std::move(midpoint)}};
}

std::vector<LabeledTerm> four_chain(const InequalityCase& c, bool positive) {
  if (positive)
    require_positive_v(c);
  else
    require_negative_v(c);
  const double v = param(c.v);
  const Perspective p(c.pair);
  require_exp_domain(c, p, v);
  std::vector<LabeledTerm> terms{
      {"S(A|B)", relative_entropy(p)},
      {"T_v(A|B)", tsallis_entropy(p, v)},
      {"E_v(A|B)", exp_entropy(p, v).matrix()},
      {"E(A|B)", exp_entropy_limit(p).matrix()}};
  if (!positive) std::reverse(terms.begin(), terms.end());
  return terms;
}

std::vector<LabeledTerm> ratio_k(const InequalityCase& c, bool reciprocal) {
  require_entropy_v(c);
  const double v = param(c.v);
  const SpectralWindow& kw = *c.k_window;
  if (v > 0.0 && !(kw.m() > 1.0)) precondition(c, "v > 0 needs m > 1");
  if (v < 0.0 && !(kw.big_m() < 1.0)) precondition(c, "v < 0 needs M < 1");
  const Perspective pb(c.pair);
  const Perspective pc(c.pair.a(), *c.c);
  // Sp(I + vX) within [m, M].
  const double slack = kCertificateTol * std::max(1.0, kw.big_m());
  const double e1 = 1.0 + v * pb.lambda_min(), e2 = 1.0 + v * pb.lambda_max();
  if (std::min(e1, e2) < kw.m() - slack || std::max(e1, e2) > kw.big_m() + slack)
    precondition(c, "Sp(I + vX) is not contained in [m, M]");
  if (!loewner_leq(c.pair.b().matrix(), c.c->matrix(), c.tol).holds)
    precondition(c, "B <= C does not hold");
  require_exp_domain(c, pb, v);
  require_exp_domain(c, pc, v);
  const double k = generalized_kantorovich(kw, reciprocal ? 1.0 / v : v);
  return {{"E_v(A|B)", exp_entropy(pb, v).matrix()},
          {reciprocal ? "K(m,M,1/v) E_v(A|C)" : "K(m,M,v) E_v(A|C)",
           k * exp_entropy(pc, v).matrix()}};
}

}  // namespace

std::vector<LabeledTerm> evaluate_terms(const InequalityCase& c) {
  validate_schema(c);
  switch (c.id) {
    case Id::kKnownBoundsS: return known_bounds(c, false);
    case Id::kKnownBoundsT: return known_bounds(c, true);
    case Id::kChordT: return chord(c, true);
    case Id::kChordS: return chord(c, false);
    case Id::kXiPsiSandwich: return log_chord_sandwich(c, SandwichFactor::kXiPsi);
    case Id::kXiPsiReweighted:
      return log_chord_sandwich(c, SandwichFactor::kXiPsiReweighted);
    case Id::kDragomirSandwich:
      return log_chord_sandwich(c, SandwichFactor::kDragomir);
    case Id::kDragomirLogK:
      return log_chord_sandwich(c, SandwichFactor::kDragomirLogK);
    case Id::kTangentBounds: return tangent_bounds(c);
    case Id::kFuruichi36: return furuichi_36(c);
    case Id::kMono13: return mono(c, false);
    case Id::kMonoRefined: return mono(c, true);
    case Id::kAndoSandwich: return ando(c);
    case Id::kComplementary: return complementary(c);
    case Id::kComplementaryLimit: return complementary_limit(c, false);
    case Id::kComplementaryLimitPrinted: return complementary_limit(c, true);
    case Id::kExpvOperator: return expv_operator(c);
    case Id::kFourChainPos: return four_chain(c, true);
    case Id::kFourChainNeg: return four_chain(c, false);
    case Id::kRatioK: return ratio_k(c, false);
    case Id::kRatioKReciprocal: return ratio_k(c, true);
  }
  precondition(c, "unhandled inequality id");
}

Verdict check_case(const InequalityCase& c) {
  const std::vector<LabeledTerm> terms = evaluate_terms(c);
  Verdict out;
  out.id = c.id;
  out.dim = c.pair.dim();
  out.seed = c.seed;
  out.index = c.index;
  out.v = c.v;
  out.overall_holds = true;
  out.min_normalized_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
    LinkVerdict link{terms[i].label, terms[i + 1].label,
                     loewner_leq(terms[i].value, terms[i + 1].value, c.tol)};
    out.overall_holds = out.overall_holds && link.verdict.holds;
    out.min_normalized_margin =
        std::min(out.min_normalized_margin, link.verdict.normalized_margin());
    out.links.push_back(std::move(link));
  }
  if (c.id == Id::kMonoRefined) {
    const Matrix& coarse = terms[1].value;
    const Matrix fine =
        integral_middle_term(c.pair, *c.v, *c.map, 2 * c.quad_nodes);
    const double delta = spectral_norm(symmetrize(fine - coarse));
    const double scale = std::max(1.0, spectral_norm(coarse));
    out.quadrature_delta = delta;
    out.quadrature_stable = delta <= kQuadratureTol * scale;
    out.overall_holds = out.overall_holds && out.quadrature_stable;
  }
  return out;
}

Matrix integral_middle_term(const OperatorPair& pair, double v,
                            const PositiveMapSpec& phi, int nodes) {
  if (!(v > 0.0 && v <= 1.0))
    throw PreconditionError("integral_middle_term: v must lie in (0, 1]");
  if (nodes < 2) throw PreconditionError("integral_middle_term: nodes >= 2");
  if (phi.input_dim() != pair.dim())
    throw PreconditionError("integral_middle_term: map dimension mismatch");
  const SpdMatrix g = natural_mean(pair, v);
  const Perspective g_to_a(g, pair.a());
  const Perspective g_to_b(g, pair.b());
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, 1.0);
  const Index k = phi.output_dim();
  Matrix integral = Matrix::Zero(k, k);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double mu = rule.nodes[i];
    const SpdMatrix left = apply_map(phi, natural_mean(g_to_a, mu));
    const SpdMatrix right = apply_map(phi, natural_mean(g_to_b, mu));
    integral += rule.weights[i] * natural_mean(left, right, v).matrix();
  }
  return symmetrize((integral - apply_map(phi, pair.a().matrix())) / v);
}

std::string_view to_string(NonorderingKind kind) {
  switch (kind) {
    case NonorderingKind::kFuruichiVsTangent: return "FURUICHI_36_VS_TANGENT";
    case NonorderingKind::kKantorovichVsYoungLower: return "DRAGOMIR_VS_XI_PSI";
    case NonorderingKind::kKantorovichVsYoungUpper: return "KR_VS_M_UPPER";
    case NonorderingKind::kKantorovichMaxVsYoungUpper: return "KBIGR_VS_M_UPPER";
  }
  return "unknown";
}

NonorderingEvidence search_nonordering(NonorderingKind kind,
                                       const GridSpec& grid) {
  const auto axis = [](double lo, double hi, int count, int i) {
    return count <= 1 ? lo : lo + (hi - lo) * i / (count - 1);
  };
  const bool two_axes = kind == NonorderingKind::kFuruichiVsTangent;
  const int b_count = two_axes ? std::max(grid.b_count, 1) : 1;
  NonorderingEvidence ev{kind};
  for (int iv = 0; iv < std::max(grid.v_count, 1); ++iv) {
    const double v = axis(grid.v_lo, grid.v_hi, grid.v_count, iv);
    for (int ia = 0; ia < std::max(grid.a_count, 1); ++ia) {
      const double a = axis(grid.a_lo, grid.a_hi, grid.a_count, ia);
      for (int ib = 0; ib < b_count; ++ib) {
        const double b = two_axes ? axis(grid.b_lo, grid.b_hi, grid.b_count, ib) : 0.0;
        double d = 0.0;
        switch (kind) {
          case NonorderingKind::kFuruichiVsTangent:
            d = compare_fv(a, b, v).f;
            break;
          case NonorderingKind::kKantorovichVsYoungLower:
            d = std::pow(kantorovich(a), std::min(v, 1.0 - v)) -
                young_lower_factor(a, v);
            break;
          case NonorderingKind::kKantorovichVsYoungUpper:
            d = std::pow(kantorovich(a), std::min(v, 1.0 - v)) -
                young_upper_factor(a, v);
            break;
          case NonorderingKind::kKantorovichMaxVsYoungUpper:
            d = std::pow(kantorovich(a), std::max(v, 1.0 - v)) -
                young_upper_factor(a, v);
            break;
        }
        ++ev.points;
        const GridPoint pt{a, b, v, d};
        if (d > kSignFloor && (!ev.positive || d > ev.positive->value))
          ev.positive = pt;
        if (d < -kSignFloor && (!ev.negative || d < ev.negative->value))
          ev.negative = pt;
      }
    }
  }
  return ev;
}

}  // namespace tsallis
