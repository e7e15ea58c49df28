#include <gtest/gtest.h>

#include "oracle.hpp"
#include "tsallis/harness.hpp"
#include "tsallis/instance_gen.hpp"

namespace tsallis {
namespace {

// Eigenvalues of A^{-1/2} B A^{-1/2} from the oracle.
oracle::LVector relative_eigs(const SpdMatrix& a, const SpdMatrix& b) {
  const oracle::LMatrix inv_half =
      oracle::apply(a.matrix(), [](long double x) { return 1 / std::sqrt(x); });
  return oracle::jacobi(oracle::LMatrix(inv_half * b.matrix().cast<long double>() * inv_half)).values;
}

TEST(RandomSpd, Examples) {
  GenSpec s{.dim = 2, .cond_max = 1.0, .seed = 1};
  const SpdMatrix a = random_spd(s);
  EXPECT_EQ(a.matrix(), a(0, 0) * Matrix::Identity(2, 2));
  s.cond_max = 1e4;
  EXPECT_EQ(random_spd(s).matrix(), random_spd(s).matrix());
  s.dim = 8;
  for (std::uint64_t i = 0; i < 20; ++i) {
    s.index = i;
    const oracle::LVector ev = oracle::jacobi(random_spd(s).matrix()).values;
    EXPECT_LE(ev[7] / ev[0], 1e4 * (1 + 1e-9));
    EXPECT_GE(ev[0], 1 - 1e-9);
  }
}

TEST(GenSpec, ValidationErrors) {
  EXPECT_THROW(validate(GenSpec{.dim = 1}), ConfigError);
  EXPECT_THROW(validate(GenSpec{.cond_max = 0.5}), ConfigError);
  EXPECT_THROW(validate(GenSpec{.constraint = Constraint::kCertifiedWindow}), ConfigError);
  EXPECT_THROW(SpectralWindow(1, 1), DomainError);
}

TEST(RandomCertifiedPair, CertificateHolds) {
  for (Index dim : {2, 3, 5, 8})
    for (std::uint64_t i = 0; i < 50; ++i) {
      const GenSpec s{.dim = dim, .window = SpectralWindow(0.4, 7.0), .seed = 3, .index = i,
                      .constraint = Constraint::kCertifiedWindow};
      const OperatorPair p = random_certified_pair(s);
      const oracle::LVector ev = relative_eigs(p.a(), p.b());
      EXPECT_GE(ev[0], 0.4 - 1e-10 * 7);
      EXPECT_LE(ev[dim - 1], 7.0 + 1e-10 * 7);
      ASSERT_TRUE(p.window().has_value());
    }
}

TEST(RandomCertifiedPair, NarrowWindowCollapses) {
  const double m = 2.0;
  const GenSpec s{.dim = 3, .window = SpectralWindow(m, m + 1e-9), .seed = 4,
                  .constraint = Constraint::kCertifiedWindow};
  const OperatorPair p = random_certified_pair(s);
  EXPECT_LT((p.b().matrix() - m * p.a().matrix()).norm(), 1e-7 * p.a().matrix().norm());
}

TEST(RandomCertifiedPair, EndpointCoverage) {
  // Over 10^4 samples lambda_min(X) and lambda_max(X) reach within 1% of the window.
  const double m = 0.5, big_m = 4.0;
  double lo = 1e300, hi = -1e300;
  int at_m = 0, at_big_m = 0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const GenSpec s{.dim = 2, .window = SpectralWindow(m, big_m), .seed = 5,
                    .index = static_cast<std::uint64_t>(i), .constraint = Constraint::kCertifiedWindow};
    const OperatorPair p = random_certified_pair(s);
    const Vector ev = relative_spectrum(p.a(), p.b());
    lo = std::min(lo, ev[0]);
    hi = std::max(hi, ev[1]);
    at_m += std::abs(ev[0] - m) < 1e-9 * big_m;
    at_big_m += std::abs(ev[1] - big_m) < 1e-9 * big_m;
  }
  EXPECT_LE(lo, m * 1.01);
  EXPECT_GE(hi, big_m * 0.99);
  EXPECT_GE(at_m, n / 2 - 300);
  EXPECT_GE(at_big_m, n / 2 - 300);
}

TEST(RandomRatioK, PositiveVInstance) {
  const GenSpec s{.dim = 4, .window = SpectralWindow(1.2, 2.0), .seed = 6,
                  .constraint = Constraint::kRatioK, .v = 0.5};
  for (std::uint64_t i = 0; i < 30; ++i) {
    GenSpec si = s;
    si.index = i;
    const RatioKInstance r = random_ratio_k_instance(si);
    const oracle::LVector ev = relative_eigs(r.a, r.b);
    EXPECT_GE(1 + 0.5 * ev[0], 1.2 - 1e-10 * 2);
    EXPECT_LE(1 + 0.5 * ev[3], 2.0 + 1e-10 * 2);
    EXPECT_GE(oracle::min_eigenvalue(r.c.matrix() - r.b.matrix()), -1e-10 * r.c.matrix().norm());
  }
}

TEST(RandomRatioK, NegativeVStaysInExpDomain) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const GenSpec s{.dim = 3, .window = SpectralWindow(0.3, 0.8), .seed = 7, .index = i,
                    .constraint = Constraint::kRatioK, .v = -0.5};
    const RatioKInstance r = random_ratio_k_instance(s);
    EXPECT_LT(relative_eigs(r.a, r.c)[2], 2.0);
    const oracle::LVector ev = relative_eigs(r.a, r.b);
    EXPECT_GE(1 - 0.5 * ev[2], 0.3 - 1e-10);
    EXPECT_LE(1 - 0.5 * ev[0], 0.8 + 1e-10);
  }
}

TEST(RandomRatioK, ZeroPerturbationGivesCEqualB) {
  const GenSpec s{.dim = 3, .window = SpectralWindow(1.2, 2.0), .seed = 8,
                  .constraint = Constraint::kRatioK, .v = 0.5, .perturbation = 0.0};
  const RatioKInstance r = random_ratio_k_instance(s);
  EXPECT_EQ(r.b.matrix(), r.c.matrix());
}

TEST(RandomRatioK, InfeasibleWindowIsPrecondition) {
  const GenSpec neg{.dim = 2, .window = SpectralWindow(0.5, 1.5), .seed = 1,
                    .constraint = Constraint::kRatioK, .v = -0.5};
  EXPECT_THROW(random_ratio_k_instance(neg), PreconditionError);
  const GenSpec pos{.dim = 2, .window = SpectralWindow(0.9, 1.5), .seed = 1,
                    .constraint = Constraint::kRatioK, .v = 0.5};
  EXPECT_THROW(random_ratio_k_instance(pos), PreconditionError);
}

TEST(GenerateCase, DeterministicAndSchemaValid) {
  for (const InequalityInfo& info : all_inequalities()) {
    const std::optional<double> v = info.schema.v ? std::optional<double>(0.5) : std::nullopt;
    const CaseRequest req{.id = info.id, .dim = 3, .v = v, .seed = 11, .index = 4};
    if (info.id == InequalityId::kFourChainNeg) continue;  // negative v only
    const InequalityCase a = generate_case(req), b = generate_case(req);
    EXPECT_NO_THROW(validate_schema(a)) << info.name;
    EXPECT_EQ(a.pair.a(), b.pair.a()) << info.name;
    EXPECT_EQ(a.pair.b(), b.pair.b()) << info.name;
    EXPECT_EQ(a.s, b.s);
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.mu, b.mu);
  }
  const CaseRequest neg{.id = InequalityId::kFourChainNeg, .dim = 3, .v = -0.7, .seed = 11};
  EXPECT_NO_THROW(check_case(generate_case(neg)));
}

TEST(GenerateCase, VariantsShareParentInstances) {
  const CaseRequest a{.id = InequalityId::kXiPsiSandwich, .dim = 3, .seed = 1, .index = 2};
  CaseRequest b = a;
  b.id = InequalityId::kXiPsiReweighted;
  EXPECT_EQ(generation_parent(b.id), a.id);
  EXPECT_EQ(generate_case(a).pair.b(), generate_case(b).pair.b());
}

TEST(GenerateCase, ExpDomainRespected) {
  for (double v : {-1.0, -0.7, -0.3})
    for (std::uint64_t i = 0; i < 40; ++i) {
      const InequalityCase c =
          generate_case(CaseRequest{.id = InequalityId::kExpvOperator, .dim = 4, .v = v, .seed = 2, .index = i});
      EXPECT_LT(relative_eigs(c.pair.a(), c.pair.b())[3], 1 / -v);
    }
}

}  // namespace
}  // namespace tsallis
