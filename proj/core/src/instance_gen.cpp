#include "tsallis/instance_gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "tsallis/random.hpp"

namespace tsallis {
namespace {

using Id = InequalityId;

Matrix sqrt_of(const SpdMatrix& a) {
  return apply_scalar_function(a, [](double x) { return std::sqrt(x); });
}

SpdMatrix random_spd(const GenSpec& spec, RandomStream& rs) {
  const Index n = spec.dim;
  Vector lambda(n);
  for (Index i = 0; i < n; ++i) lambda[i] = rs.log_uniform(1.0, spec.cond_max);
  if ((lambda.array() == lambda[0]).all())
    return SpdMatrix::trusted(lambda[0] * Matrix::Identity(n, n));
  const Matrix q = rs.orthogonal(n);
  return SpdMatrix::trusted(q * lambda.asDiagonal() * q.transpose());
}

// Symmetric W with spectrum in [lo, hi]; endpoints pinned with probability 1/2.
Matrix random_window_matrix(Index n, double lo, double hi, RandomStream& rs) {
  Vector w(n);
  for (Index i = 0; i < n; ++i) w[i] = rs.log_uniform(lo, hi);
  std::sort(w.begin(), w.end());
  if (rs.uniform() < 0.5) w[0] = lo;
  if (rs.uniform() < 0.5) w[n - 1] = hi;
  const Matrix q = rs.orthogonal(n);
  return symmetrize(q * w.asDiagonal() * q.transpose());
}

OperatorPair certified(const SpdMatrix& a, double lo, double hi,
                       RandomStream& rs) {
  const Matrix half = sqrt_of(a);
  const Matrix w = random_window_matrix(a.dim(), lo, hi, rs);
  SpdMatrix b = SpdMatrix::trusted(half * w * half);
  return OperatorPair(a, std::move(b), SpectralWindow(lo, hi));
}

std::string format_tag(std::string_view name, Index dim,
                       const std::optional<double>& v) {
  std::ostringstream os;
  os.precision(17);
  os << name << "/d" << dim << "/v";
  if (v)
    os << *v;
  else
    os << '-';
  return os.str();
}

SpectralWindow draw_window(RandomStream& rs, double max_upper) {
  const double m = rs.log_uniform(0.2, std::min(5.0, max_upper / 1.5));
  return SpectralWindow(m, std::min(m * rs.log_uniform(1.5, 50.0), max_upper));
}

// Window whose upper end stays inside the exp_v domain for v < 0.
SpectralWindow draw_exp_window(RandomStream& rs, double v, double max_upper) {
  if (v >= 0.0) return draw_window(rs, max_upper);
  const double big_m = rs.uniform(0.3, 0.95) / std::abs(v);
  return SpectralWindow(big_m / rs.log_uniform(1.5, 50.0), big_m);
}

SpectralWindow draw_ratio_window(RandomStream& rs, double v) {
  if (v > 0.0) {
    const double m = rs.uniform(1.05, 2.0);
    return SpectralWindow(m, m * rs.uniform(1.2, 3.0));
  }
  const double big_m = rs.uniform(0.3, 0.95);
  return SpectralWindow(big_m * rs.uniform(0.2, 0.8), big_m);
}

bool uses_exp(Id id) {
  return id == Id::kExpvOperator || id == Id::kFourChainPos ||
         id == Id::kFourChainNeg;
}

}  // namespace

std::string_view to_string(Constraint c) {
  switch (c) {
    case Constraint::kNone: return "none";
    case Constraint::kCertifiedWindow: return "certified-window";
    case Constraint::kExpDomain: return "exp-domain";
    case Constraint::kRatioK: return "ratio-K";
  }
  return "unknown";
}

void validate(const GenSpec& spec) {
  if (spec.dim < 2) throw ConfigError("GenSpec: dim must be >= 2");
  if (!(spec.cond_max >= 1.0)) throw ConfigError("GenSpec: cond_max must be >= 1");
  if (spec.constraint != Constraint::kNone && !spec.window)
    throw ConfigError(std::string("GenSpec: constraint ") +
                      std::string(to_string(spec.constraint)) +
                      " needs a window");
  if (!(spec.perturbation >= 0.0))
    throw ConfigError("GenSpec: perturbation must be >= 0");
}

SpdMatrix random_spd(const GenSpec& spec) {
  validate(spec);
  RandomStream rs(spec.seed, spec.tag + "/spd", spec.index);
  return random_spd(spec, rs);
}

OperatorPair random_certified_pair(const GenSpec& spec) {
  validate(spec);
  if (!spec.window) throw ConfigError("random_certified_pair needs a window");
  RandomStream rs(spec.seed, spec.tag + "/pair", spec.index);
  const SpdMatrix a = random_spd(spec, rs);
  return certified(a, spec.window->m(), spec.window->big_m(), rs);
}

RatioKInstance random_ratio_k_instance(const GenSpec& spec) {
  validate(spec);
  if (!spec.window) throw ConfigError("random_ratio_k_instance needs a window");
  const double v = spec.v, m = spec.window->m(), big_m = spec.window->big_m();
  if (!(v >= -1.0 && v <= 1.0) || v == 0.0)
    throw PreconditionError("ratio-K instance: v must lie in [-1, 0) U (0, 1]");
  if (v > 0.0 && !(m > 1.0))
    throw PreconditionError("ratio-K instance: v > 0 needs m > 1");
  if (v < 0.0 && !(big_m < 1.0))
    throw PreconditionError("ratio-K instance: v < 0 needs M < 1");

  // 1 + vx in [m, M] as a window on x.
  const double x_lo = v > 0.0 ? (m - 1.0) / v : (1.0 - big_m) / std::abs(v);
  const double x_hi = v > 0.0 ? (big_m - 1.0) / v : (1.0 - m) / std::abs(v);

  RandomStream rs(spec.seed, spec.tag + "/ratio", spec.index);
  const SpdMatrix a = random_spd(spec, rs);
  const OperatorPair pair = certified(a, x_lo, x_hi, rs);

  // R = G G^T of random rank, scaled to norm rho.
  const Index n = spec.dim;
  const Index rank = 1 + static_cast<Index>(rs.below(static_cast<std::uint64_t>(n)));
  const Matrix g = rs.gaussian(n, rank);
  Matrix r = symmetrize(g * g.transpose());
  const double cap = v < 0.0 ? 0.9 * (1.0 / std::abs(v) - x_hi) : x_hi;
  const double rho = spec.perturbation * rs.uniform() * cap;
  r *= rho / spectral_norm(r);
  const Matrix half = sqrt_of(a);
  SpdMatrix c = spec.perturbation == 0.0
                    ? pair.b()
                    : SpdMatrix::trusted(pair.b().matrix() + half * r * half);

  if (!loewner_leq(pair.b().matrix(), c.matrix(), 1e-10).holds)
    throw PreconditionError("ratio-K instance: B <= C certificate failed");
  if (v < 0.0) {
    const Vector spec_c = relative_spectrum(a, c);
    if (!(spec_c[n - 1] < 1.0 / std::abs(v)))
      throw PreconditionError("ratio-K instance: C leaves the exp_v domain");
  }
  return {pair.a(), pair.b(), std::move(c)};
}

OperatorPair generate_pair(const GenSpec& spec) {
  validate(spec);
  switch (spec.constraint) {
    case Constraint::kNone: {
      RandomStream rs(spec.seed, spec.tag + "/free", spec.index);
      SpdMatrix a = random_spd(spec, rs);
      SpdMatrix b = random_spd(spec, rs);
      return OperatorPair(std::move(a), std::move(b));
    }
    case Constraint::kCertifiedWindow:
      return random_certified_pair(spec);
    case Constraint::kExpDomain:
      if (spec.v < 0.0 && !(spec.window->big_m() < 1.0 / std::abs(spec.v)))
        throw PreconditionError("exp-domain: window must end below 1/|v|");
      return random_certified_pair(spec);
    case Constraint::kRatioK: {
      RatioKInstance r = random_ratio_k_instance(spec);
      return OperatorPair(std::move(r.a), std::move(r.b));
    }
  }
  throw ConfigError("unknown constraint");
}

InequalityId generation_parent(InequalityId id) {
  switch (id) {
    case Id::kComplementaryLimitPrinted: return Id::kComplementaryLimit;
    case Id::kXiPsiReweighted: return Id::kXiPsiSandwich;
    case Id::kDragomirLogK: return Id::kDragomirSandwich;
    case Id::kRatioKReciprocal: return Id::kRatioK;
    default: return id;
  }
}

InequalityCase generate_case(const CaseRequest& req) {
  const InequalityInfo& inf = info(req.id);
  const CaseSchema& schema = inf.schema;
  if (schema.v != req.v.has_value())
    throw ConfigError(std::string(inf.name) +
                      (schema.v ? ": v is required" : ": v is not used"));
  if (req.dim < 2) throw ConfigError("case dimension must be >= 2");

  const std::string tag =
      format_tag(to_string(generation_parent(req.id)), req.dim, req.v);
  RandomStream rs(req.seed, tag + "/param", req.index);
  const double v = req.v.value_or(0.0);

  GenSpec spec;
  spec.dim = req.dim;
  spec.seed = req.seed;
  spec.tag = tag;
  spec.index = req.index;
  spec.v = v;

  std::optional<SpdMatrix> c;
  std::optional<SpectralWindow> k_window;
  OperatorPair pair = [&] {
    if (schema.k_window) {
      spec.constraint = Constraint::kRatioK;
      spec.window = draw_ratio_window(rs, v);
      spec.perturbation = req.index % 10 == 0 ? 0.0 : rs.uniform();
      RatioKInstance r = random_ratio_k_instance(spec);
      k_window = spec.window;
      c = std::move(r.c);
      return OperatorPair(std::move(r.a), std::move(r.b));
    }
    if (uses_exp(req.id)) {
      const double cap = req.id == Id::kFourChainPos || req.id == Id::kFourChainNeg
                             ? 10.0
                             : 50.0;
      spec.constraint = Constraint::kExpDomain;
      spec.window = draw_exp_window(rs, v, cap);
    } else {
      spec.constraint = Constraint::kCertifiedWindow;
      spec.window = draw_window(rs, 250.0);
    }
    return generate_pair(spec);
  }();
  if (!schema.window && pair.window()) pair = OperatorPair(pair.a(), pair.b());

  InequalityCase out{.id = req.id, .pair = std::move(pair)};
  out.v = req.v;
  out.c = std::move(c);
  out.k_window = k_window;
  out.quad_nodes = req.quad_nodes;
  out.tol = req.tol;
  out.seed = req.seed;
  out.index = req.index;

  if (schema.s || schema.t) {
    const Vector x = relative_spectrum(out.pair.a(), out.pair.b());
    const double lo = x[0], hi = x[x.size() - 1];
    const auto draw = [&] { return hi > lo ? rs.log_uniform(lo, hi) : lo; };
    if (schema.s) out.s = draw();
    if (schema.t) out.t = draw();
  }
  if (schema.mu) {
    static constexpr std::array kMu{0.0, 0.25, 0.5, 0.75, 1.0};
    out.mu = kMu[req.index % kMu.size()];
  }
  if (schema.map) {
    static constexpr std::array kKinds{MapKind::kPinching, MapKind::kUnitaryMixture,
                                       MapKind::kCompression};
    const MapKind kind = kKinds[req.index % kKinds.size()];
    out.map = random_map(req.dim, kind, mix_key(req.seed, tag + "/map", req.index));
  }
  return out;
}

}  // namespace tsallis
