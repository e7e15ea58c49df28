#pragma once

#include <vector>

namespace tsallis {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
// 2n - 1. Nodes ascending.
QuadratureRule gauss_legendre(int n);

// Same rule mapped affinely to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace tsallis
