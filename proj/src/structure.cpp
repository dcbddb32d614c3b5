#include "shoda/structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "shoda/random.hpp"

namespace shoda {

StructureConstantAlgebra::StructureConstantAlgebra(int dim, std::vector<Scalar> table, Vector unit)
    : dim_(dim), table_(std::move(table)), unit_(std::move(unit)) {
  if (dim_ < 1) fail(ErrorKind::InvalidArgument, "algebra dimension must be positive");
  if (table_.size() != static_cast<std::size_t>(dim_) * dim_ * dim_)
    fail(ErrorKind::ShapeMismatch, "structure-constant table must have dim^3 entries");
  if (unit_.size() != dim_) fail(ErrorKind::ShapeMismatch, "unit has the wrong number of coordinates");
}

Vector StructureConstantAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector z = Vector::Zero(dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x(a) == Scalar(0.0)) continue;
    for (int b = 0; b < dim_; ++b) {
      const Scalar w = x(a) * y(b);
      if (w == Scalar(0.0)) continue;
      const Scalar* row = &table_[(static_cast<std::size_t>(a) * dim_ + b) * dim_];
      for (int c = 0; c < dim_; ++c) z(c) += w * row[c];
    }
  }
  return z;
}

Matrix StructureConstantAlgebra::left_multiplication(const Vector& x) const {
  Matrix l = Matrix::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a) {
    if (x(a) == Scalar(0.0)) continue;
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c) l(c, b) += x(a) * constant(a, b, c);
  }
  return l;
}

Matrix StructureConstantAlgebra::right_multiplication(const Vector& x) const {
  Matrix r = Matrix::Zero(dim_, dim_);
  for (int b = 0; b < dim_; ++b) {
    if (x(b) == Scalar(0.0)) continue;
    for (int a = 0; a < dim_; ++a)
      for (int c = 0; c < dim_; ++c) r(c, a) += x(b) * constant(a, b, c);
  }
  return r;
}

double StructureConstantAlgebra::associativity_residual() const {
  // Left multiplication matrices make each triple a pair of mat-vec products.
  std::vector<Matrix> left;
  left.reserve(dim_);
  for (int a = 0; a < dim_; ++a) left.push_back(left_multiplication(Vector::Unit(dim_, a)));
  double worst = 0.0;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) {
      const Vector ab = left[a].col(b);
      const Matrix l_ab = left_multiplication(ab);
      // (e_a e_b) e_c versus e_a (e_b e_c), all c at once.
      worst = std::max(worst, (l_ab - left[a] * left[b]).cwiseAbs().maxCoeff());
    }
  return worst;
}

double StructureConstantAlgebra::unit_residual() const {
  const Matrix l = left_multiplication(unit_);
  const Matrix r = right_multiplication(unit_);
  const Matrix id = Matrix::Identity(dim_, dim_);
  return std::max((l - id).cwiseAbs().maxCoeff(), (r - id).cwiseAbs().maxCoeff());
}

// --- basis of B ----------------------------------------------------------------

BBasis::BBasis(AlgebraSpec spec) : spec_(std::move(spec)) {
  for (int i = 0; i < spec_.num_blocks(); ++i)
    for (int k = 0; k < spec_.block_dim(i); ++k)
      for (int l = 0; l < spec_.block_dim(i); ++l) entries_.push_back({i, i, k, l});
  for (int i = 0; i < spec_.num_blocks(); ++i)
    for (int j = 0; j < spec_.num_blocks(); ++j) {
      if (i == j) continue;
      for (int k = 0; k < spec_.block_dim(i); ++k)
        for (int l = 0; l < spec_.block_dim(j); ++l) entries_.push_back({i, j, k, l});
    }
}

BElement BBasis::element(int index) const {
  const Entry& e = entry(index);
  if (index < a_dim()) return BElement::embed(Element::matrix_unit(spec_, e.left_block, e.row, e.col));
  return {Element::zero(spec_), tensor_unit(spec_, e.left_block, e.right_block, e.row, e.col)};
}

Vector BBasis::coordinates(const BElement& x) const {
  require_same_spec(spec_, x.spec());
  Vector v(dim());
  v.head(a_dim()) = flatten(x.a);
  Eigen::Index idx = a_dim();
  for (int i = 0; i < spec_.num_blocks(); ++i)
    for (int j = 0; j < spec_.num_blocks(); ++j) {
      if (i == j) continue;
      const Matrix m = x.u.coordinates(i, j);
      for (Eigen::Index k = 0; k < m.rows(); ++k)
        for (Eigen::Index l = 0; l < m.cols(); ++l) v(idx++) = m(k, l);
    }
  return v;
}

BElement BBasis::from_coordinates(const Vector& coords) const {
  if (coords.size() != dim()) fail(ErrorKind::ShapeMismatch, "coordinate vector has the wrong length");
  BElement out{unflatten(spec_, coords.head(a_dim())), AJElement(spec_)};
  Eigen::Index idx = a_dim();
  for (int i = 0; i < spec_.num_blocks(); ++i)
    for (int j = 0; j < spec_.num_blocks(); ++j) {
      if (i == j) continue;
      Matrix m(spec_.block_dim(i), spec_.block_dim(j));
      for (Eigen::Index k = 0; k < m.rows(); ++k)
        for (Eigen::Index l = 0; l < m.cols(); ++l) m(k, l) = coords(idx++);
      if (!m.isZero(0.0)) out.u.accumulate(i, j, m);
    }
  return out;
}

std::pair<int, int> BBasis::global_position(int index) const {
  const Entry& e = entry(index);
  return {spec_.offset(e.left_block) + e.row, spec_.offset(e.right_block) + e.col};
}

// --- tables --------------------------------------------------------------------

StructureConstantAlgebra algebra_table(const AlgebraSpec& spec) {
  const int d = spec.dimension();
  std::vector<Element> basis;
  for (int i = 0; i < spec.num_blocks(); ++i)
    for (int k = 0; k < spec.block_dim(i); ++k)
      for (int l = 0; l < spec.block_dim(i); ++l) basis.push_back(Element::matrix_unit(spec, i, k, l));
  std::vector<Scalar> table(static_cast<std::size_t>(d) * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Vector c = flatten(basis[a] * basis[b]);
      std::copy(c.data(), c.data() + d, table.begin() + (static_cast<std::size_t>(a) * d + b) * d);
    }
  return StructureConstantAlgebra(d, std::move(table), flatten(Element::identity(spec)));
}

StructureConstantAlgebra build_B(const AlgebraSpec& spec) {
  const BBasis basis(spec);
  const int d = basis.dim();
  std::vector<BElement> elements;
  elements.reserve(d);
  for (int a = 0; a < d; ++a) elements.push_back(basis.element(a));
  std::vector<Scalar> table(static_cast<std::size_t>(d) * d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Vector c = basis.coordinates(multiply_B(elements[a], elements[b]));
      std::copy(c.data(), c.data() + d, table.begin() + (static_cast<std::size_t>(a) * d + b) * d);
    }
  return StructureConstantAlgebra(d, std::move(table), basis.coordinates(BElement::identity(spec)));
}

// --- radical, quotient, Wedderburn ----------------------------------------------

namespace {

inline constexpr double kRankGap = 1e3;
inline constexpr int kGenericRetries = 16;

// Null space of m (columns of V for singular values at or below tol * largest).
Matrix null_space(const Matrix& m, double tol, bool check_gap) {
  // BDCSVD can return NaN on these highly degenerate spectra.
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const int n = static_cast<int>(m.cols());
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  const double threshold = tol * top;
  int r = 0;
  while (r < sv.size() && sv(r) > threshold) ++r;
  if (check_gap) {
    // No singular value may sit inside the band of width kRankGap centred on
    // the threshold.
    const double half = std::sqrt(kRankGap);
    for (Eigen::Index k = 0; k < sv.size(); ++k)
      if (sv(k) > threshold / half && sv(k) < threshold * half)
        fail(ErrorKind::IllConditioned, "no clean rank gap in the trace form (singular value " +
                                            std::to_string(sv(k) / top) + " relative to the largest)");
  }
  return svd.matrixV().rightCols(n - r);
}

}  // namespace

Matrix radical(const StructureConstantAlgebra& alg, double tol) {
  const int d = alg.dim();
  // tr(L_{e_c}) for every basis element
  Vector traces = Vector::Zero(d);
  for (int c = 0; c < d; ++c)
    for (int b = 0; b < d; ++b) traces(c) += alg.constant(c, b, b);
  Matrix gram(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      Scalar s = 0.0;
      for (int c = 0; c < d; ++c) s += alg.constant(a, b, c) * traces(c);
      gram(a, b) = s;
    }
  // {x : sum_a x_a gram(a, b) = 0 for all b}
  return null_space(gram.transpose(), tol, /*check_gap=*/true);
}

Quotient quotient(const StructureConstantAlgebra& alg, const Matrix& radical_basis, double tol) {
  const int d = alg.dim();
  const int k = static_cast<int>(radical_basis.cols());
  if (radical_basis.rows() != d) fail(ErrorKind::ShapeMismatch, "radical basis has the wrong number of rows");
  if (k == 0) return {alg, Matrix::Identity(d, d)};

  Eigen::HouseholderQR<Matrix> qr(radical_basis);
  const Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix span = q.leftCols(k);
  const Matrix section = q.rightCols(d - k);
  const Matrix off_span = Matrix::Identity(d, d) - span * span.adjoint();

  double scale = 1.0;
  for (const auto& c : alg.table()) scale = std::max(scale, std::abs(c));
  for (int r = 0; r < k; ++r) {
    const Vector x = radical_basis.col(r);
    for (int a = 0; a < d; ++a) {
      const Vector e = Vector::Unit(d, a);
      const double left = (off_span * alg.multiply(e, x)).norm();
      const double right = (off_span * alg.multiply(x, e)).norm();
      if (std::max(left, right) > tol * scale * std::max(1.0, x.norm()))
        fail(ErrorKind::NotAnIdeal, "span is not closed under multiplication by the algebra");
    }
  }

  const int m = d - k;
  std::vector<Scalar> table(static_cast<std::size_t>(m) * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Vector c = section.adjoint() * alg.multiply(section.col(a), section.col(b));
      std::copy(c.data(), c.data() + m, table.begin() + (static_cast<std::size_t>(a) * m + b) * m);
    }
  return {StructureConstantAlgebra(m, std::move(table), section.adjoint() * alg.unit()), section};
}

Matrix center(const StructureConstantAlgebra& alg, double tol) {
  const int d = alg.dim();
  Matrix commutators(static_cast<Eigen::Index>(d) * d, d);
  for (int b = 0; b < d; ++b) {
    const Vector e = Vector::Unit(d, b);
    commutators.middleRows(static_cast<Eigen::Index>(b) * d, d) =
        alg.left_multiplication(e) - alg.right_multiplication(e);
  }
  return null_space(commutators, tol, /*check_gap=*/false);
}

std::vector<int> wedderburn_identify(const StructureConstantAlgebra& alg, double tol, std::uint64_t seed) {
  if (radical(alg, tol).cols() != 0) fail(ErrorKind::NotSemisimple, "algebra has a nonzero radical");
  const Matrix z = center(alg, tol);
  const int zdim = static_cast<int>(z.cols());
  Rng rng(seed);

  for (int attempt = 0; attempt < kGenericRetries; ++attempt) {
    const Vector generic = z * random_vector(zdim, rng);
    const Matrix action = z.adjoint() * alg.left_multiplication(generic) * z;
    Eigen::ComplexEigenSolver<Matrix> eig(action);
    if (eig.info() != Eigen::Success) continue;
    const Vector& mu = eig.eigenvalues();
    const double spread = mu.cwiseAbs().maxCoeff();
    bool separated = true;
    for (int i = 0; i < zdim && separated; ++i)
      for (int j = i + 1; j < zdim; ++j)
        if (std::abs(mu(i) - mu(j)) <= tol * spread) {
          separated = false;
          break;
        }
    if (!separated) continue;

    std::vector<int> components;
    int total = 0;
    for (int j = 0; j < zdim; ++j) {
      // Eigenvectors of the central action are multiples of the primitive
      // central idempotents; the rank of left multiplication by one of them
      // is the dimension of its simple component.
      const Vector idem = z * eig.eigenvectors().col(j);
      const Matrix l = alg.left_multiplication(idem);
      const auto sv = Eigen::JacobiSVD<Matrix>(l).singularValues();
      int r = 0;
      while (r < sv.size() && sv(r) > tol * sv(0)) ++r;
      const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(r))));
      if (root * root != r)
        fail(ErrorKind::NonSquareComponent, "simple component of dimension " + std::to_string(r) + " is not a square");
      components.push_back(r);
      total += r;
    }
    if (total != alg.dim())
      fail(ErrorKind::NumericalFailure, "component dimensions do not add up to the algebra dimension");
    std::sort(components.begin(), components.end());
    return components;
  }
  fail(ErrorKind::NumericalFailure, "no generic central element separated the central idempotents");
}

}  // namespace shoda
