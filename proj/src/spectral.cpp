#include "shoda/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace shoda {

int SpectrumReport::total_multiplicity() const {
  int m = 0;
  for (const auto& v : eigenvalues) m += v.multiplicity;
  return m;
}

int SpectrumReport::nonzero_multiplicity() const {
  int m = 0;
  for (const auto& v : nonzero_part) m += v.multiplicity;
  return m;
}

namespace {

std::vector<Scalar> raw_eigenvalues(const Element& a) {
  std::vector<Scalar> values;
  for (const auto& m : a.blocks()) {
    Eigen::ComplexEigenSolver<Matrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) fail(ErrorKind::NumericalFailure, "eigensolver did not converge");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) values.push_back(solver.eigenvalues()(i));
  }
  return values;
}

// Single-linkage clustering: values within `threshold` of one another end up
// in the same cluster. An exact zero cluster is represented by 0.
std::vector<SpectralValue> cluster(const std::vector<Scalar>& values, double threshold) {
  const std::size_t n = values.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(values[i] - values[j]) <= threshold) parent[find(i)] = find(j);

  std::vector<std::size_t> roots;
  std::vector<SpectralValue> out;
  std::vector<bool> touches_zero;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    auto it = std::find(roots.begin(), roots.end(), r);
    std::size_t slot;
    if (it == roots.end()) {
      roots.push_back(r);
      out.push_back({Scalar(0.0), 0});
      touches_zero.push_back(false);
      slot = out.size() - 1;
    } else {
      slot = static_cast<std::size_t>(it - roots.begin());
    }
    out[slot].value += values[i];
    out[slot].multiplicity += 1;
    if (std::abs(values[i]) <= threshold) touches_zero[slot] = true;
  }
  for (std::size_t s = 0; s < out.size(); ++s) {
    out[s].value /= static_cast<double>(out[s].multiplicity);
    if (touches_zero[s]) out[s].value = 0.0;
  }
  std::sort(out.begin(), out.end(), [](const SpectralValue& x, const SpectralValue& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

}  // namespace

SpectrumReport spectrum(const Element& a, double tol) {
  if (!(tol > 0.0)) fail(ErrorKind::InvalidArgument, "tol must be positive");
  SpectrumReport report;
  report.threshold = tol * largest_singular_value(a);
  report.eigenvalues = cluster(raw_eigenvalues(a), report.threshold);
  for (const auto& v : report.eigenvalues)
    if (std::abs(v.value) > report.threshold) report.nonzero_part.push_back(v);
  return report;
}

Element riesz_projection(const Element& a, Scalar lambda, double tol) {
  const SpectrumReport spec = spectrum(a, tol);
  const double threshold = spec.threshold;

  const SpectralValue* target = nullptr;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : spec.nonzero_part) {
    const double d = std::abs(v.value - lambda);
    if (d < best) {
      best = d;
      target = &v;
    }
  }
  if (target == nullptr || best > std::max(threshold, tol * std::max(1.0, std::abs(lambda))))
    fail(ErrorKind::NoSuchSpectralValue, "lambda is not a nonzero spectral value");

  double gap = std::numeric_limits<double>::infinity();
  for (const auto& v : spec.eigenvalues)
    if (v.value != target->value) gap = std::min(gap, std::abs(v.value - target->value));
  if (gap < 4.0 * threshold) fail(ErrorKind::ContourTooTight, "neighbouring eigenvalues are too close");

  const double radius = std::isfinite(gap) ? 0.5 * gap : 0.5 * std::max(1.0, std::abs(target->value));
  const Scalar center = target->value;

  std::vector<Matrix> blocks;
  for (const auto& m : a.blocks()) {
    const Eigen::Index n = m.rows();
    Matrix acc = Matrix::Zero(n, n);
    const Matrix id = Matrix::Identity(n, n);
    for (int k = 0; k < kContourNodes; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / kContourNodes;
      const Scalar w = radius * std::polar(1.0, theta);
      // (1/2 pi i) * (z - a)^{-1} dz with dz = i w dtheta
      acc += w * Eigen::PartialPivLU<Matrix>((center + w) * id - m).solve(id);
    }
    blocks.push_back(acc / static_cast<double>(kContourNodes));
  }
  return Element(a.spec(), std::move(blocks));
}

Element separating_element(const Element& b, const std::vector<Element>& others, double tol) {
  if (rank(b, tol) != 1) fail(ErrorKind::NotRankOne, "b must have rank one");
  for (const auto& a : others) {
    require_same_spec(b.spec(), a.spec());
    if (rank(a, tol) != 1) fail(ErrorKind::NotRankOne, "every constraint element must have rank one");
  }
  const AlgebraSpec& spec = b.spec();
  const int rows = static_cast<int>(others.size()) + 1;

  // Row r holds the coefficients of y -> Tr(c_r y) on the flattened basis:
  // Tr(c y) = sum_i sum_{k,l} c_i(k,l) y_i(l,k).
  Matrix functionals = Matrix::Zero(rows, spec.dimension());
  auto fill = [&](int row, const Element& c) {
    int base = 0;
    for (int i = 0; i < spec.num_blocks(); ++i) {
      const int n = spec.block_dim(i);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) functionals(row, base + l * n + k) = c.block(i)(k, l);
      base += n * n;
    }
  };
  fill(0, b);
  for (int r = 1; r < rows; ++r) fill(r, others[r - 1]);

  Eigen::JacobiSVD<Matrix> svd(functionals, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() < rows || sv(rows - 1) <= tol * sv(0))
    fail(ErrorKind::DependentInputs, "trace functionals are linearly dependent");

  Vector rhs = Vector::Zero(rows);
  rhs(0) = 1.0;
  return unflatten(spec, svd.solve(rhs));
}

}  // namespace shoda
