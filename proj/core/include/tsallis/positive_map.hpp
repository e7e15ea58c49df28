#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "tsallis/linalg.hpp"

namespace tsallis {

enum class MapKind { kIdentity, kPinching, kUnitaryMixture, kCompression };

std::string_view to_string(MapKind kind);
MapKind map_kind_from_string(std::string_view name);

// Unital positive linear map, held as data so a failing case can serialize
// the exact map it used.
//   identity:        X -> X
//   pinching:        zero every off-diagonal block
//   unitary mixture: X -> sum_i w_i U_i^T X U_i
//   compression:     X -> V^T X V for an n x k isometry V
class PositiveMapSpec {
 public:
  static PositiveMapSpec identity(Index dim);
  static PositiveMapSpec pinching(std::vector<Index> blocks);
  // Weights must be a convex combination; every U_i orthogonal.
  static PositiveMapSpec unitary_mixture(std::vector<double> weights,
                                         std::vector<Matrix> unitaries);
  // V^T V = I_k within 1e-12.
  static PositiveMapSpec compression(Matrix isometry);

  MapKind kind() const noexcept { return kind_; }
  Index input_dim() const noexcept { return input_dim_; }
  Index output_dim() const noexcept { return output_dim_; }
  const std::vector<Index>& blocks() const noexcept { return blocks_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<Matrix>& unitaries() const noexcept { return unitaries_; }
  const Matrix& isometry() const noexcept { return isometry_; }

  friend bool operator==(const PositiveMapSpec& a, const PositiveMapSpec& b);

 private:
  PositiveMapSpec() = default;

  MapKind kind_ = MapKind::kIdentity;
  Index input_dim_ = 0;
  Index output_dim_ = 0;
  std::vector<Index> blocks_;
  std::vector<double> weights_;
  std::vector<Matrix> unitaries_;
  Matrix isometry_;
};

Matrix apply_map(const PositiveMapSpec& phi, const Matrix& x);
SpdMatrix apply_map(const PositiveMapSpec& phi, const SpdMatrix& x);

// Deterministic in (dim, kind, seed). Compressions get an output dimension
// in [1, dim].
PositiveMapSpec random_map(Index dim, MapKind kind, std::uint64_t seed);

}  // namespace tsallis
