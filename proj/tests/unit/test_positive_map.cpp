#include <gtest/gtest.h>

#include <numeric>

#include "oracle.hpp"
#include "tsallis/positive_map.hpp"
#include "tsallis/random.hpp"

namespace tsallis {
namespace {

constexpr MapKind kKinds[] = {MapKind::kPinching, MapKind::kUnitaryMixture, MapKind::kCompression};

Matrix random_symmetric(RandomStream& r, Index n) {
  const Matrix g = r.gaussian(n, n);
  return symmetrize(g + g.transpose());
}

TEST(ApplyMap, Examples) {
  Matrix x(2, 2);
  x << 2, 1, 1, 3;
  EXPECT_EQ(apply_map(PositiveMapSpec::identity(2), x), x);
  EXPECT_EQ(apply_map(PositiveMapSpec::pinching({1, 1}), x), Matrix(Vector::LinSpaced(2, 2, 3).asDiagonal()));
  Matrix swap(2, 2);
  swap << 0, 1, 1, 0;
  const PositiveMapSpec mix = PositiveMapSpec::unitary_mixture({0.5, 0.5}, {Matrix::Identity(2, 2), swap});
  const Matrix y = apply_map(mix, Matrix(Vector::LinSpaced(2, 2, 4).asDiagonal()));
  EXPECT_LT((y - 3 * Matrix::Identity(2, 2)).norm(), 1e-15);
}

TEST(ApplyMap, Errors) {
  EXPECT_ANY_THROW(PositiveMapSpec::unitary_mixture({0.7, 0.7}, {Matrix::Identity(2, 2), Matrix::Identity(2, 2)}));
  EXPECT_ANY_THROW(PositiveMapSpec::unitary_mixture({1.0}, {2 * Matrix::Identity(2, 2)}));
  EXPECT_ANY_THROW(PositiveMapSpec::compression(Matrix::Constant(3, 2, 1.0)));
  EXPECT_ANY_THROW(PositiveMapSpec::pinching({}));
  EXPECT_THROW(apply_map(PositiveMapSpec::pinching({1, 2}), Matrix::Identity(2, 2)), DimensionError);
}

TEST(RandomMap, StructuralExamples) {
  const PositiveMapSpec p = random_map(4, MapKind::kPinching, 3);
  EXPECT_EQ(std::accumulate(p.blocks().begin(), p.blocks().end(), Index{0}), 4);
  const PositiveMapSpec m = random_map(4, MapKind::kUnitaryMixture, 3);
  EXPECT_NEAR(std::accumulate(m.weights().begin(), m.weights().end(), 0.0), 1.0, 1e-15);
  const PositiveMapSpec c = random_map(4, MapKind::kCompression, 3);
  const Matrix& v = c.isometry();
  EXPECT_LE((v.transpose() * v - Matrix::Identity(v.cols(), v.cols())).norm(), 1e-12);
  EXPECT_GE(c.output_dim(), 1);
  EXPECT_LE(c.output_dim(), 4);
}

TEST(RandomMap, Deterministic) {
  for (MapKind k : kKinds) {
    EXPECT_TRUE(random_map(5, k, 77) == random_map(5, k, 77));
    EXPECT_EQ(to_string(k), to_string(map_kind_from_string(to_string(k))));
  }
}

TEST(PositiveMapInvariants, UnitalLinearOrderPreserving) {
  for (MapKind kind : kKinds)
    for (std::uint64_t i = 0; i < 200; ++i) {
      RandomStream r(21, "maps", i);
      const Index n = 2 + static_cast<Index>(i % 7);
      const PositiveMapSpec phi = random_map(n, kind, i);
      const Index k = phi.output_dim();
      EXPECT_LT((apply_map(phi, Matrix::Identity(n, n)) - Matrix::Identity(k, k)).norm(), 1e-12);
      const Matrix x = random_symmetric(r, n), y0 = random_symmetric(r, n);
      EXPECT_LT((apply_map(phi, Matrix(2.5 * x + y0)) - 2.5 * apply_map(phi, x) - apply_map(phi, y0)).norm(),
                1e-12 * std::max(1.0, x.norm() + y0.norm()));
      // X <= Y built as Y = X + G G^T.
      const Matrix g = r.gaussian(n, n);
      const Matrix y = x + g * g.transpose();
      EXPECT_GE(oracle::min_eigenvalue(apply_map(phi, y) - apply_map(phi, x)),
                -1e-12 * std::max(1.0, y.norm()));
      const Matrix pd = g * g.transpose() + 0.1 * Matrix::Identity(n, n);
      EXPECT_GT(oracle::min_eigenvalue(apply_map(phi, pd)), 0.0);
    }
}

}  // namespace
}  // namespace tsallis
