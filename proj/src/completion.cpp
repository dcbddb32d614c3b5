#include "shoda/completion.hpp"

#include <algorithm>
#include <cmath>

#include "shoda/random.hpp"

namespace shoda {

Vector CompletionResult::project(const BElement& x) const {
  return quotient.section.adjoint() * basis.coordinates(x);
}

Vector CompletionResult::embed(const Element& a) const { return project(BElement::embed(a)); }

Matrix CompletionResult::to_matrix(const Vector& coords) const {
  if (coords.size() != static_cast<Eigen::Index>(iso_witness.size()))
    fail(ErrorKind::ShapeMismatch, "coordinate vector has the wrong length");
  Matrix m = Matrix::Zero(N, N);
  for (Eigen::Index a = 0; a < coords.size(); ++a)
    if (coords(a) != Scalar(0.0)) m += coords(a) * iso_witness[a];
  return m;
}

Vector CompletionResult::from_matrix(const Matrix& m) const {
  if (m.rows() != N || m.cols() != N) fail(ErrorKind::ShapeMismatch, "matrix must be N x N");
  const Eigen::Index dim = static_cast<Eigen::Index>(iso_witness.size());
  Matrix stacked(static_cast<Eigen::Index>(N) * N, dim);
  for (Eigen::Index a = 0; a < dim; ++a) stacked.col(a) = iso_witness[a].reshaped();
  return stacked.colPivHouseholderQr().solve(Vector(m.reshaped()));
}

BElement CompletionResult::lift(const Vector& coords) const {
  return basis.from_coordinates(quotient.section * coords);
}

CompletionResult complete(const AlgebraSpec& spec, double tol, std::uint64_t seed) {
  BBasis basis(spec);
  StructureConstantAlgebra b = build_B(spec);
  const Matrix rad = radical(b, tol);
  Quotient q = quotient(b, rad, tol);
  std::vector<int> components = wedderburn_identify(q.algebra, tol, seed);

  const int N = spec.order();
  const int m = q.algebra.dim();
  std::vector<Matrix> witness;
  witness.reserve(m);
  for (int a = 0; a < m; ++a) {
    Matrix image = Matrix::Zero(N, N);
    for (int c = 0; c < basis.dim(); ++c) {
      const Scalar w = q.section(c, a);
      if (w == Scalar(0.0)) continue;
      const auto [row, col] = basis.global_position(c);
      image(row, col) += w;
    }
    witness.push_back(std::move(image));
  }

  const double a_part = rad.cols() == 0 ? 0.0 : rad.topRows(basis.a_dim()).cwiseAbs().maxCoeff();
  CompletionResult result{spec,  N, basis.dim(), static_cast<int>(rad.cols()), std::move(components), 0.0, a_part,
                          basis, b, std::move(q), std::move(witness)};

  const auto& as = result.quotient.algebra;
  double residual = (result.to_matrix(as.unit()) - Matrix::Identity(N, N)).cwiseAbs().maxCoeff();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const Vector prod = as.multiply(Vector::Unit(m, x), Vector::Unit(m, y));
      const Matrix lhs = result.iso_witness[x] * result.iso_witness[y];
      residual = std::max(residual, (lhs - result.to_matrix(prod)).cwiseAbs().maxCoeff());
    }
  Rng rng(seed);
  for (int s = 0; s < kIsoRandomPairs; ++s) {
    const Vector x = random_vector(m, rng);
    const Vector y = random_vector(m, rng);
    const Matrix mx = result.to_matrix(x);
    const Matrix my = result.to_matrix(y);
    const double scale = std::max(1.0, mx.norm() * my.norm());
    residual = std::max(residual, (mx * my - result.to_matrix(as.multiply(x, y))).norm() / scale);
  }
  result.iso_residual = residual;
  return result;
}

AlgebraSpec completed_structure(const CompletionResult& result) {
  std::vector<int> dims;
  for (int d : result.components) dims.push_back(static_cast<int>(std::lround(std::sqrt(static_cast<double>(d)))));
  return AlgebraSpec(std::move(dims));
}

}  // namespace shoda
