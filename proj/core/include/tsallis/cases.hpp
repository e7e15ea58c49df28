#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "tsallis/entropy.hpp"
#include "tsallis/positive_map.hpp"

namespace tsallis {

// One entry per inequality chain the harness can evaluate. The first block
// are the theorems as stated; the second block are variants that exist only
// to be reported next to them (re-derived or corrected forms).
enum class InequalityId {
  kKnownBoundsS,
  kKnownBoundsT,
  kChordT,
  kChordS,
  kXiPsiSandwich,
  kDragomirSandwich,
  kTangentBounds,
  kFuruichi36,
  kMono13,
  kMonoRefined,
  kAndoSandwich,
  kComplementary,
  kComplementaryLimit,
  kExpvOperator,
  kFourChainPos,
  kFourChainNeg,
  kRatioK,

  kComplementaryLimitPrinted,
  kXiPsiReweighted,
  kDragomirLogK,
  kRatioKReciprocal,
};

// Parameter schema of an id: which optional case fields must be present.
struct CaseSchema {
  bool window = false;    // certified mA <= B <= MA on the pair
  bool v = false;
  bool s = false;
  bool t = false;
  bool mu = false;
  bool map = false;
  bool c = false;         // third operator C >= B
  bool k_window = false;  // [m, M] window of Sp(I + vX)
};

struct InequalityInfo {
  InequalityId id;
  std::string_view name;
  // Short statement of the chain, printed next to every suite in reports.
  std::string_view anchor;
  CaseSchema schema;
};

std::span<const InequalityInfo> all_inequalities();
const InequalityInfo& info(InequalityId id);
std::string_view to_string(InequalityId id);
InequalityId inequality_from_string(std::string_view name);

// One theorem instance with every parameter it needs.
struct InequalityCase {
  InequalityId id = InequalityId::kKnownBoundsS;
  OperatorPair pair;
  std::optional<double> v{};
  std::optional<double> s{};
  std::optional<double> t{};
  std::optional<double> mu{};
  std::optional<PositiveMapSpec> map{};
  std::optional<SpdMatrix> c{};
  std::optional<SpectralWindow> k_window{};
  int quad_nodes = 32;
  double tol = kDefaultTol;
  // Provenance; not used by evaluation.
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

// Throws PreconditionError when a required field is missing or a field the
// schema does not use is present.
void validate_schema(const InequalityCase& c);

}  // namespace tsallis
