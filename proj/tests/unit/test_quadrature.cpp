#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "tsallis/quadrature.hpp"

namespace tsallis {
namespace {

TEST(GaussLegendre, TwoPointRule) {
  const QuadratureRule r = gauss_legendre(2);
  ASSERT_EQ(r.nodes.size(), 2u);
  EXPECT_NEAR(r.nodes[0], -1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.nodes[1], 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(r.weights[0], 1.0, 1e-15);
}

TEST(GaussLegendre, ExactForDegreeTwoNMinusOne) {
  for (int n : {1, 3, 8, 32, 64}) {
    const QuadratureRule r = gauss_legendre(n);
    for (int deg = 0; deg <= 2 * n - 1 && deg <= 40; ++deg) {
      double sum = 0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], deg);
      const double exact = deg % 2 == 1 ? 0.0 : 2.0 / (deg + 1);
      EXPECT_NEAR(sum, exact, 1e-14) << "n=" << n << " deg=" << deg;
    }
  }
}

TEST(GaussLegendre, MappedIntervalAndOrdering) {
  const QuadratureRule r = gauss_legendre(16, 0.0, 1.0);
  EXPECT_NEAR(std::accumulate(r.weights.begin(), r.weights.end(), 0.0), 1.0, 1e-15);
  EXPECT_TRUE(std::is_sorted(r.nodes.begin(), r.nodes.end()));
  EXPECT_GT(r.nodes.front(), 0.0);
  EXPECT_LT(r.nodes.back(), 1.0);
  double sum = 0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::exp(r.nodes[i]);
  EXPECT_NEAR(sum, std::exp(1.0) - 1, 1e-15);
}

TEST(GaussLegendre, RejectsNonPositive) {
  EXPECT_ANY_THROW(gauss_legendre(0));
}

}  // namespace
}  // namespace tsallis
