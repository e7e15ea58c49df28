#include "tsallis/positive_map.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tsallis/random.hpp"

namespace tsallis {
namespace {

constexpr double kStructureTol = 1e-12;

void require_orthogonal(const Matrix& u) {
  if (u.rows() != u.cols())
    throw DimensionError("unitary mixture needs square U_i");
  const double err =
      (u.transpose() * u - Matrix::Identity(u.rows(), u.cols())).norm();
  if (err > kStructureTol) {
    std::ostringstream os;
    os << "unitary mixture: U_i is not orthogonal (||U^T U - I||_F = " << err
       << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

std::string_view to_string(MapKind kind) {
  switch (kind) {
    case MapKind::kIdentity: return "identity";
    case MapKind::kPinching: return "pinching";
    case MapKind::kUnitaryMixture: return "unitary_mixture";
    case MapKind::kCompression: return "compression";
  }
  return "identity";
}

MapKind map_kind_from_string(std::string_view name) {
  if (name == "identity") return MapKind::kIdentity;
  if (name == "pinching") return MapKind::kPinching;
  if (name == "unitary_mixture" || name == "mixture")
    return MapKind::kUnitaryMixture;
  if (name == "compression") return MapKind::kCompression;
  throw std::invalid_argument("unknown map kind: " + std::string(name));
}

PositiveMapSpec PositiveMapSpec::identity(Index dim) {
  if (dim < 1) throw DimensionError("identity map needs dim >= 1");
  PositiveMapSpec p;
  p.kind_ = MapKind::kIdentity;
  p.input_dim_ = p.output_dim_ = dim;
  return p;
}

PositiveMapSpec PositiveMapSpec::pinching(std::vector<Index> blocks) {
  if (blocks.empty()) throw DimensionError("pinching needs at least one block");
  for (Index b : blocks)
    if (b < 1) throw DimensionError("pinching block sizes must be >= 1");
  PositiveMapSpec p;
  p.kind_ = MapKind::kPinching;
  p.input_dim_ = p.output_dim_ =
      std::accumulate(blocks.begin(), blocks.end(), Index{0});
  p.blocks_ = std::move(blocks);
  return p;
}

PositiveMapSpec PositiveMapSpec::unitary_mixture(std::vector<double> weights,
                                                 std::vector<Matrix> unitaries) {
  if (weights.empty() || weights.size() != unitaries.size())
    throw std::invalid_argument(
        "unitary mixture needs one weight per unitary");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0))
      throw std::invalid_argument("unitary mixture weights must be >= 0");
    total += w;
  }
  if (std::abs(total - 1.0) > kStructureTol)
    throw std::invalid_argument("unitary mixture weights must sum to 1");
  const Index n = unitaries.front().rows();
  for (const Matrix& u : unitaries) {
    if (u.rows() != n) throw DimensionError("unitaries differ in dimension");
    require_orthogonal(u);
  }
  PositiveMapSpec p;
  p.kind_ = MapKind::kUnitaryMixture;
  p.input_dim_ = p.output_dim_ = n;
  p.weights_ = std::move(weights);
  p.unitaries_ = std::move(unitaries);
  return p;
}

PositiveMapSpec PositiveMapSpec::compression(Matrix isometry) {
  const Index n = isometry.rows(), k = isometry.cols();
  if (k < 1 || k > n)
    throw DimensionError("compression needs an n x k isometry with 1 <= k <= n");
  const double err =
      (isometry.transpose() * isometry - Matrix::Identity(k, k)).norm();
  if (err > kStructureTol) {
    std::ostringstream os;
    os << "compression: V is not an isometry (||V^T V - I||_F = " << err << ")";
    throw std::invalid_argument(os.str());
  }
  PositiveMapSpec p;
  p.kind_ = MapKind::kCompression;
  p.input_dim_ = n;
  p.output_dim_ = k;
  p.isometry_ = std::move(isometry);
  return p;
}

bool operator==(const PositiveMapSpec& a, const PositiveMapSpec& b) {
  if (a.kind_ != b.kind_ || a.input_dim_ != b.input_dim_ ||
      a.output_dim_ != b.output_dim_ || a.blocks_ != b.blocks_ ||
      a.weights_ != b.weights_ || a.unitaries_.size() != b.unitaries_.size())
    return false;
  for (std::size_t i = 0; i < a.unitaries_.size(); ++i)
    if (a.unitaries_[i] != b.unitaries_[i]) return false;
  if (a.isometry_.rows() != b.isometry_.rows() ||
      a.isometry_.cols() != b.isometry_.cols())
    return false;
  return a.isometry_ == b.isometry_;
}

Matrix apply_map(const PositiveMapSpec& phi, const Matrix& x) {
  if (x.rows() != phi.input_dim() || x.cols() != phi.input_dim()) {
    std::ostringstream os;
    os << "positive map expects " << phi.input_dim() << "x" << phi.input_dim()
       << " input, got " << x.rows() << "x" << x.cols();
    throw DimensionError(os.str());
  }
  switch (phi.kind()) {
    case MapKind::kIdentity:
      return x;
    case MapKind::kPinching: {
      Matrix out = Matrix::Zero(x.rows(), x.cols());
      Index start = 0;
      for (Index b : phi.blocks()) {
        out.block(start, start, b, b) = x.block(start, start, b, b);
        start += b;
      }
      return out;
    }
    case MapKind::kUnitaryMixture: {
      Matrix out = Matrix::Zero(x.rows(), x.cols());
      for (std::size_t i = 0; i < phi.weights().size(); ++i) {
        const Matrix& u = phi.unitaries()[i];
        out += phi.weights()[i] * (u.transpose() * x * u);
      }
      return symmetrize(out);
    }
    case MapKind::kCompression:
      return symmetrize(phi.isometry().transpose() * x * phi.isometry());
  }
  return x;
}

SpdMatrix apply_map(const PositiveMapSpec& phi, const SpdMatrix& x) {
  return SpdMatrix::trusted(apply_map(phi, x.matrix()));
}

PositiveMapSpec random_map(Index dim, MapKind kind, std::uint64_t seed) {
  if (dim < 2) throw DimensionError("random_map needs dim >= 2");
  RandomStream rng(seed, to_string(kind), static_cast<std::uint64_t>(dim));
  switch (kind) {
    case MapKind::kIdentity:
      return PositiveMapSpec::identity(dim);
    case MapKind::kPinching: {
      // Random composition of dim into at least two blocks.
      std::vector<Index> blocks;
      Index left = dim;
      while (left > 0) {
        const Index cap = (blocks.empty() ? left - 1 : left);
        const Index b = 1 + static_cast<Index>(rng.below(
                                static_cast<std::uint64_t>(std::max<Index>(cap, 1))));
        blocks.push_back(b);
        left -= b;
      }
      return PositiveMapSpec::pinching(std::move(blocks));
    }
    case MapKind::kUnitaryMixture: {
      const std::size_t count = 2 + rng.below(3);
      std::vector<double> weights(count);
      std::vector<Matrix> unitaries;
      double total = 0.0;
      for (double& w : weights) {
        w = -std::log(1.0 - rng.uniform());
        total += w;
      }
      for (double& w : weights) w /= total;
      for (std::size_t i = 0; i < count; ++i)
        unitaries.push_back(rng.orthogonal(dim));
      return PositiveMapSpec::unitary_mixture(std::move(weights),
                                              std::move(unitaries));
    }
    case MapKind::kCompression: {
      const Index k = 1 + static_cast<Index>(rng.below(static_cast<std::uint64_t>(dim)));
      return PositiveMapSpec::compression(rng.orthogonal(dim).leftCols(k));
    }
  }
  return PositiveMapSpec::identity(dim);
}

}  // namespace tsallis
