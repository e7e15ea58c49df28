#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsallis/cases.hpp"

namespace tsallis {

struct LabeledTerm {
  std::string label;
  Matrix value;
};

// Each side of the inequality chain, smallest first: the chain claims
// terms[0] <= terms[1] <= ... in the Loewner order. Throws PreconditionError
// when the instance violates a hypothesis of the theorem.
std::vector<LabeledTerm> evaluate_terms(const InequalityCase& c);

struct LinkVerdict {
  std::string lower;
  std::string upper;
  LoewnerVerdict verdict;
};

struct Verdict {
  InequalityId id = InequalityId::kKnownBoundsS;
  std::vector<LinkVerdict> links;
  bool overall_holds = false;
  // Smallest margin/scale over the links.
  double min_normalized_margin = 0.0;
  // Integral-refined monotonicity only: ||mid(n) - mid(2n)||_2 and whether it
  // stayed within kQuadratureTol * scale.
  std::optional<double> quadrature_delta;
  bool quadrature_stable = true;
  // Echo of the case parameters.
  Index dim = 0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  std::optional<double> v;
};

inline constexpr double kQuadratureTol = 1e-10;

Verdict check_case(const InequalityCase& c);

// (1/v) [ integral_0^1 Phi(G #_mu A) #_v Phi(G #_mu B) dmu - Phi(A) ] with
// G = A #_v B, by Gauss-Legendre on `nodes` points. v in (0, 1].
Matrix integral_middle_term(const OperatorPair& pair, double v,
                            const PositiveMapSpec& phi, int nodes);

// Sign-change search backing the "no ordering" remarks.
enum class NonorderingKind {
  kFuruichiVsTangent,     // f_v(s, t) = g_v(s, t) - h_v(s, t)
  kKantorovichVsYoungLower,  // K(x)^r - m_v(x)
  kKantorovichVsYoungUpper,  // K(x)^r - M_v(x)
  kKantorovichMaxVsYoungUpper,  // K(x)^R - M_v(x)
};

std::string_view to_string(NonorderingKind kind);

// Uniform tensor grid. For the Kantorovich kinds axis a is x and axis b is
// ignored; for kFuruichiVsTangent axes a and b are s and t.
struct GridSpec {
  double a_lo = 0.0, a_hi = 1.0;
  int a_count = 1;
  double b_lo = 0.0, b_hi = 1.0;
  int b_count = 1;
  double v_lo = 0.0, v_hi = 1.0;
  int v_count = 1;
};

struct GridPoint {
  double a = 0.0;
  double b = 0.0;
  double v = 0.0;
  double value = 0.0;
};

struct NonorderingEvidence {
  NonorderingKind kind;
  std::size_t points = 0;
  std::optional<GridPoint> positive{};  // most positive difference found
  std::optional<GridPoint> negative{};  // most negative difference found
  bool found() const { return positive.has_value() && negative.has_value(); }
};

NonorderingEvidence search_nonordering(NonorderingKind kind,
                                       const GridSpec& grid);

}  // namespace tsallis
