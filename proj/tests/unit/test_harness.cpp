#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "tsallis/harness.hpp"
#include "tsallis/instance_gen.hpp"

namespace tsallis {
namespace {

using Id = InequalityId;

InequalityCase make(Id id, OperatorPair pair) {
  InequalityCase c{.id = id, .pair = std::move(pair)};
  return c;
}

OperatorPair diag_pair(std::initializer_list<double> a, std::initializer_list<double> b) {
  return OperatorPair(SpdMatrix::diagonal(Vector::Map(a.begin(), static_cast<Index>(a.size()))),
                      SpdMatrix::diagonal(Vector::Map(b.begin(), static_cast<Index>(b.size()))));
}

InequalityCase generated(Id id, Index dim, std::optional<double> v, std::uint64_t index) {
  return generate_case(CaseRequest{.id = id, .dim = dim, .v = v, .seed = 42, .index = index});
}

TEST(InequalityRegistry, NamesRoundTrip) {
  for (const InequalityInfo& i : all_inequalities()) {
    EXPECT_EQ(inequality_from_string(i.name), i.id);
    EXPECT_EQ(to_string(i.id), i.name);
    EXPECT_FALSE(i.anchor.empty());
  }
  EXPECT_ANY_THROW(inequality_from_string("NOT_AN_ID"));
}

TEST(EvaluateTerms, SchemaIsEnforced) {
  InequalityCase c = make(Id::kKnownBoundsT, diag_pair({1, 1}, {2, 3}));
  EXPECT_THROW(evaluate_terms(c), PreconditionError);  // v missing
  c.v = 0.5;
  EXPECT_NO_THROW(evaluate_terms(c));
  c.s = 1.0;  // not part of the schema
  EXPECT_THROW(evaluate_terms(c), PreconditionError);
}

TEST(EvaluateTerms, TangentBoundsVanishAtIdentity) {
  InequalityCase c = make(Id::kTangentBounds, diag_pair({1, 1}, {1, 1}));
  c.v = 0.5;
  c.s = 1.0;
  c.t = 1.0;
  const auto terms = evaluate_terms(c);
  ASSERT_EQ(terms.size(), 3u);
  for (const auto& t : terms) EXPECT_LT(t.value.norm(), 1e-15) << t.label;
}

TEST(EvaluateTerms, MonoRefinedCollapsesWhenAEqualsB) {
  for (MapKind kind : {MapKind::kPinching, MapKind::kUnitaryMixture, MapKind::kCompression}) {
    const InequalityCase g = generated(Id::kMono13, 4, 0.5, 0);
    InequalityCase c = make(Id::kMonoRefined, OperatorPair(g.pair.a(), g.pair.a()));
    c.v = 0.5;
    c.map = random_map(4, kind, 9);
    const auto terms = evaluate_terms(c);
    ASSERT_EQ(terms.size(), 3u);
    for (const auto& t : terms) EXPECT_LT(t.value.norm(), 1e-10 * g.pair.a().matrix().norm()) << t.label;
  }
}

TEST(EvaluateTerms, ChordTDiagonalOracle) {
  OperatorPair p(SpdMatrix::diagonal(Vector::LinSpaced(2, 1, 2)),
                 SpdMatrix::diagonal((Vector(2) << 2, 6).finished()), SpectralWindow(2, 3));
  InequalityCase c = make(Id::kChordT, p);
  c.v = 0.5;
  const auto terms = evaluate_terms(c);
  ASSERT_EQ(terms.size(), 2u);
  const double a[] = {1, 2}, x[] = {2, 3};
  for (int i = 0; i < 2; ++i) {
    const long double chord =
        a[i] * (oracle::ln_v(2, 0.5L) * (3 - x[i]) + oracle::ln_v(3, 0.5L) * (x[i] - 2));
    EXPECT_NEAR(terms[0].value(i, i), static_cast<double>(chord), 1e-14);
    EXPECT_NEAR(terms[1].value(i, i), static_cast<double>(a[i] * oracle::ln_v(x[i], 0.5L)), 1e-14);
  }
  // X sits on the window endpoints, so the chord is exact.
  EXPECT_TRUE(check_case(c).overall_holds);
}

TEST(CheckCase, FourChainPositiveDiagonalMargins) {
  InequalityCase c = make(Id::kFourChainPos, diag_pair({1, 2}, {2, 6}));
  c.v = 0.5;
  const Verdict verdict = check_case(c);
  EXPECT_TRUE(verdict.overall_holds);
  ASSERT_EQ(verdict.links.size(), 3u);
  const double a[] = {1, 2}, x[] = {2, 3};
  const auto chain = [&](int i, int k) -> long double {
    const long double xi = x[i];
    switch (k) {
      case 0: return a[i] * std::log(xi);
      case 1: return a[i] * oracle::ln_v(xi, 0.5L);
      case 2: return a[i] * oracle::exp_v(xi, 0.5L);
      default: return a[i] * std::exp(xi);
    }
  };
  for (int k = 0; k < 3; ++k) {
    const long double worst = std::min(chain(0, k + 1) - chain(0, k), chain(1, k + 1) - chain(1, k));
    EXPECT_NEAR(verdict.links[static_cast<std::size_t>(k)].verdict.margin, static_cast<double>(worst), 1e-12);
  }
}

TEST(CheckCase, KnownBoundsOnCertifiedPairs) {
  for (Index dim : {2, 3, 4, 8})
    for (std::uint64_t i = 0; i < 25; ++i) {
      EXPECT_TRUE(check_case(generated(Id::kKnownBoundsS, dim, std::nullopt, i)).overall_holds);
      EXPECT_TRUE(check_case(generated(Id::kKnownBoundsT, dim, -0.7, i)).overall_holds);
    }
}

TEST(CheckCase, CorruptedWindowIsPreconditionNotFailure) {
  const InequalityCase g = generated(Id::kXiPsiSandwich, 3, std::nullopt, 1);
  const SpectralWindow w = *g.pair.window();
  // Shrink the window past the spectrum: B >= mA no longer certifiable.
  EXPECT_THROW(OperatorPair(g.pair.a(), g.pair.b(), SpectralWindow(w.m() * 1.5, w.big_m() * 2)),
               PreconditionError);
}

TEST(CheckCase, RatioKRejectsCBelowB) {
  InequalityCase c = generated(Id::kRatioK, 3, 0.5, 3);
  c.c = SpdMatrix(0.5 * c.pair.b().matrix());
  EXPECT_THROW(check_case(c), PreconditionError);
  InequalityCase neg = generated(Id::kRatioK, 3, -0.5, 3);
  neg.k_window = SpectralWindow(0.5, 1.5);
  EXPECT_THROW(check_case(neg), PreconditionError);
}

TEST(CheckCase, ExpDomainIsPrecondition) {
  InequalityCase c = make(Id::kExpvOperator, diag_pair({1, 1}, {1, 3}));
  c.v = -0.5;
  EXPECT_THROW(check_case(c), PreconditionError);
  c.v = -0.3;
  EXPECT_NO_THROW(check_case(c));
}

TEST(CheckCase, XiPsiMiddleTermTwoPaths) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const InequalityCase c = generated(Id::kXiPsiSandwich, 4, std::nullopt, i);
    const auto terms = evaluate_terms(c);
    ASSERT_EQ(terms.size(), 4u);
    const SpectralWindow w = *c.pair.window();
    const Matrix direct = oracle::perspective(
        c.pair.a().matrix(), c.pair.b().matrix(), [&](long double t) {
          const long double chord = (std::log(static_cast<long double>(w.m())) * (w.big_m() - t) +
                                     std::log(static_cast<long double>(w.big_m())) * (t - w.m())) /
                                    w.width();
          return std::log(t) - chord;
        });
    const double scale = std::max(1.0, spectral_norm(terms[2].value));
    EXPECT_LT(spectral_norm(terms[2].value - direct), 1e-10 * scale);
  }
}

TEST(CheckCase, CorrectedVariantsHold) {
  for (Index dim : {2, 4})
    for (std::uint64_t i = 0; i < 30; ++i) {
      EXPECT_TRUE(check_case(generated(Id::kXiPsiReweighted, dim, std::nullopt, i)).overall_holds);
      EXPECT_TRUE(check_case(generated(Id::kDragomirLogK, dim, std::nullopt, i)).overall_holds);
      EXPECT_TRUE(check_case(generated(Id::kRatioKReciprocal, dim, 0.5, i)).overall_holds);
      EXPECT_TRUE(check_case(generated(Id::kComplementaryLimit, dim, std::nullopt, i)).overall_holds);
    }
}

TEST(CheckCase, PrintedFactorsFailSomewhere) {
  // The factor placement in the printed sandwich and the ratio constant K(m,M,v) < 1
  // both produce violations on ordinary instances.
  int xi_fail = 0, ratio_fail = 0, dragomir_fail = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    xi_fail += !check_case(generated(Id::kXiPsiSandwich, 2, std::nullopt, i)).overall_holds;
    dragomir_fail += !check_case(generated(Id::kDragomirSandwich, 2, std::nullopt, i)).overall_holds;
    ratio_fail += !check_case(generated(Id::kRatioK, 2, 0.5, i)).overall_holds;
  }
  EXPECT_GT(xi_fail, 0);
  EXPECT_GT(dragomir_fail, 0);
  EXPECT_GT(ratio_fail, 0);
  // C = B (index divisible by 10): K < 1 forces a strict violation.
  EXPECT_FALSE(check_case(generated(Id::kRatioK, 2, 0.5, 10)).overall_holds);
}

TEST(IntegralMiddleTerm, IdentityMapGivesTsallis) {
  for (std::uint64_t i = 0; i < 5; ++i) {
    const InequalityCase c = generated(Id::kMonoRefined, 4, 0.7, i);
    const Matrix mid = integral_middle_term(c.pair, 0.7, PositiveMapSpec::identity(4), 32);
    const Matrix t = tsallis_entropy(c.pair, 0.7);
    EXPECT_LT(spectral_norm(mid - t), 1e-9 * std::max(1.0, spectral_norm(t)));
  }
}

TEST(IntegralMiddleTerm, NodeDoublingStable) {
  const InequalityCase c = generated(Id::kMonoRefined, 4, 0.5, 2);
  const Matrix m32 = integral_middle_term(c.pair, 0.5, *c.map, 32);
  const Matrix m64 = integral_middle_term(c.pair, 0.5, *c.map, 64);
  EXPECT_LE(spectral_norm(m64 - m32), 1e-10 * std::max(1.0, spectral_norm(m32)));
  EXPECT_THROW(integral_middle_term(c.pair, 0.0, *c.map, 32), PreconditionError);
  EXPECT_THROW(integral_middle_term(c.pair, 0.5, *c.map, 1), PreconditionError);
}

TEST(IntegralMiddleTerm, RefinementStaysInsideMono13Gap) {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const InequalityCase c = generated(Id::kMonoRefined, 3, 0.3 + 0.02 * static_cast<double>(i), i);
    const Verdict verdict = check_case(c);
    EXPECT_TRUE(verdict.overall_holds);
    EXPECT_TRUE(verdict.quadrature_stable);
    const auto terms = evaluate_terms(c);
    const double gap = oracle::min_eigenvalue(terms[2].value - terms[0].value);
    const double lower = verdict.links[0].verdict.margin, upper = verdict.links[1].verdict.margin;
    const double scale = std::max(1.0, spectral_norm(terms[2].value));
    EXPECT_LE(lower + upper, gap + 1e-9 * scale);
    EXPECT_GE(gap, -1e-9 * scale);
  }
}

TEST(SearchNonordering, FuruichiVsTangentPrintedValues) {
  const GridSpec g{.a_lo = 0.1, .a_hi = 0.1, .a_count = 1, .b_lo = 0.1, .b_hi = 1.0, .b_count = 2,
                   .v_lo = 0.5, .v_hi = 0.5, .v_count = 1};
  const NonorderingEvidence ev = search_nonordering(NonorderingKind::kFuruichiVsTangent, g);
  ASSERT_TRUE(ev.found());
  EXPECT_EQ(ev.points, 2u);
  EXPECT_NEAR(ev.positive->value, 1.01096, 1e-4);
  EXPECT_EQ(ev.positive->b, 1.0);
  EXPECT_NEAR(ev.negative->value, -0.81, 1e-2);
}

TEST(SearchNonordering, KantorovichVsYoungLowerBothSigns) {
  const GridSpec g{.a_lo = 1e-3, .a_hi = 0.999, .a_count = 1000, .v_lo = 1e-3, .v_hi = 0.999, .v_count = 1000};
  const NonorderingEvidence ev = search_nonordering(NonorderingKind::kKantorovichVsYoungLower, g);
  EXPECT_EQ(ev.points, 1000000u);
  ASSERT_TRUE(ev.found());
  // Witnesses recomputed independently.
  for (const GridPoint& p : {*ev.positive, *ev.negative}) {
    const long double r = std::min(p.v, 1 - p.v);
    const long double d = std::pow(oracle::kantorovich(p.a), r) - oracle::young_lower(p.a, p.v);
    EXPECT_NEAR(p.value, static_cast<double>(d), 1e-13);
  }
}

TEST(SearchNonordering, KantorovichVsYoungUpperNeverPositive) {
  const GridSpec g{.a_lo = 1e-3, .a_hi = 0.999, .a_count = 300, .v_lo = 1e-3, .v_hi = 0.999, .v_count = 300};
  const NonorderingEvidence ev = search_nonordering(NonorderingKind::kKantorovichVsYoungUpper, g);
  EXPECT_FALSE(ev.positive.has_value());
  EXPECT_TRUE(ev.negative.has_value());
}

TEST(SearchNonordering, DegenerateGridNotFound) {
  const GridSpec g{.a_lo = 0.5, .a_hi = 0.5, .a_count = 1, .v_lo = 0.5, .v_hi = 0.5, .v_count = 1};
  const NonorderingEvidence ev = search_nonordering(NonorderingKind::kKantorovichVsYoungLower, g);
  EXPECT_EQ(ev.points, 1u);
  EXPECT_FALSE(ev.found());
  EXPECT_EQ(to_string(ev.kind), "DRAGOMIR_VS_XI_PSI");
}

}  // namespace
}  // namespace tsallis
