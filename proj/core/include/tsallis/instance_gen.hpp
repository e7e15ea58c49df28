#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tsallis/cases.hpp"

namespace tsallis {

enum class Constraint { kNone, kCertifiedWindow, kExpDomain, kRatioK };

std::string_view to_string(Constraint c);

// Recipe for one random instance. The stream is keyed by (seed, tag, index).
//   kCertifiedWindow: window required; mA <= B <= MA.
//   kExpDomain:       window required with M < 1/|v| when v < 0.
//   kRatioK:          window is the [m, M] range of Sp(I + vX).
struct GenSpec {
  Index dim = 2;
  double cond_max = 1e4;
  std::optional<SpectralWindow> window;
  std::uint64_t seed = 0;
  std::string tag = "gen";
  std::uint64_t index = 0;
  Constraint constraint = Constraint::kNone;
  double v = 0.0;
  // kRatioK only: spectral norm scale of C - B relative to the X window.
  // 0 gives C = B exactly.
  double perturbation = 1.0;
};

// Throws ConfigError for dim < 2, cond_max < 1 or a missing window.
void validate(const GenSpec& spec);

// Q diag(lambda) Q^T, lambda log-uniform in [1, cond_max], Q Haar orthogonal.
SpdMatrix random_spd(const GenSpec& spec);

// B = A^{1/2} W A^{1/2} with Sp(W) log-uniform in [m, M]; the smallest and
// largest eigenvalues of W are pinned to m and M with probability 1/2 each.
OperatorPair random_certified_pair(const GenSpec& spec);

struct RatioKInstance {
  SpdMatrix a;
  SpdMatrix b;
  SpdMatrix c;
};

// X = A^{-1/2}BA^{-1/2} with Sp(I + vX) in [m, M] and C = B + A^{1/2}RA^{1/2},
// R positive semidefinite. Throws PreconditionError unless m > 1 (v > 0) or
// M < 1 (v < 0).
RatioKInstance random_ratio_k_instance(const GenSpec& spec);

// Pair per constraint kind; kRatioK returns (A, B).
OperatorPair generate_pair(const GenSpec& spec);

// A full hypothesis-satisfying case for one inequality id.
struct CaseRequest {
  InequalityId id = InequalityId::kKnownBoundsS;
  Index dim = 2;
  std::optional<double> v;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
  int quad_nodes = 32;
  double tol = kDefaultTol;
};

// Variants share the random instances of the theorem they sit next to.
InequalityId generation_parent(InequalityId id);

InequalityCase generate_case(const CaseRequest& req);

}  // namespace tsallis
