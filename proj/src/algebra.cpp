#include "shoda/algebra.hpp"

#include <algorithm>
#include <string>

#include "shoda/random.hpp"

namespace shoda {

AlgebraSpec::AlgebraSpec(std::vector<int> block_dims) : dims_(std::move(block_dims)) {
  if (dims_.empty()) fail(ErrorKind::InvalidArgument, "algebra needs at least one block");
  offsets_.reserve(dims_.size());
  for (int n : dims_) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "block dimension must be positive, got " + std::to_string(n));
    offsets_.push_back(order_);
    order_ += n;
    dimension_ += n * n;
  }
}

void require_same_spec(const AlgebraSpec& a, const AlgebraSpec& b) {
  if (!(a == b)) fail(ErrorKind::ShapeMismatch, "operands belong to different algebras");
}

Element::Element(AlgebraSpec spec, std::vector<Matrix> blocks)
    : spec_(std::move(spec)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != spec_.num_blocks())
    fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(spec_.num_blocks()) + " blocks, got " +
                                       std::to_string(blocks_.size()));
  for (int i = 0; i < spec_.num_blocks(); ++i) {
    const int n = spec_.block_dim(i);
    if (blocks_[i].rows() != n || blocks_[i].cols() != n)
      fail(ErrorKind::ShapeMismatch, "block " + std::to_string(i + 1) + " must be " + std::to_string(n) + "x" +
                                         std::to_string(n));
  }
}

Element Element::zero(const AlgebraSpec& spec) {
  std::vector<Matrix> blocks;
  for (int n : spec.block_dims()) blocks.push_back(Matrix::Zero(n, n));
  return Element(spec, std::move(blocks));
}

Element Element::identity(const AlgebraSpec& spec) {
  std::vector<Matrix> blocks;
  for (int n : spec.block_dims()) blocks.push_back(Matrix::Identity(n, n));
  return Element(spec, std::move(blocks));
}

Element Element::matrix_unit(const AlgebraSpec& spec, int block, int row, int col) {
  Element e = zero(spec);
  if (block < 0 || block >= spec.num_blocks() || row < 0 || col < 0 || row >= spec.block_dim(block) ||
      col >= spec.block_dim(block))
    fail(ErrorKind::InvalidArgument, "matrix unit index out of range");
  e.blocks_[block](row, col) = 1.0;
  return e;
}

Element Element::canonical_projection(const AlgebraSpec& spec, int block) {
  return matrix_unit(spec, block, 0, 0);
}

Element Element::in_block(const AlgebraSpec& spec, int block, const Matrix& m) {
  Element e = zero(spec);
  if (block < 0 || block >= spec.num_blocks()) fail(ErrorKind::InvalidArgument, "block index out of range");
  if (m.rows() != spec.block_dim(block) || m.cols() != spec.block_dim(block))
    fail(ErrorKind::ShapeMismatch, "block matrix has the wrong shape");
  e.blocks_[block] = m;
  return e;
}

Element& Element::operator+=(const Element& other) {
  require_same_spec(spec_, other.spec_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += other.blocks_[i];
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_spec(spec_, other.spec_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= other.blocks_[i];
  return *this;
}

Element& Element::operator*=(Scalar s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

bool operator==(const Element& a, const Element& b) {
  if (!(a.spec_ == b.spec_)) return false;
  for (std::size_t i = 0; i < a.blocks_.size(); ++i)
    if (a.blocks_[i] != b.blocks_[i]) return false;
  return true;
}

bool Element::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const Matrix& m) { return m.isZero(0.0); });
}

double Element::max_abs() const {
  double m = 0.0;
  for (const auto& b : blocks_) m = std::max(m, b.cwiseAbs().maxCoeff());
  return m;
}

Element multiply(const Element& a, const Element& b) {
  require_same_spec(a.spec(), b.spec());
  std::vector<Matrix> blocks;
  blocks.reserve(a.blocks().size());
  for (std::size_t i = 0; i < a.blocks().size(); ++i) blocks.push_back(a.blocks()[i] * b.blocks()[i]);
  return Element(a.spec(), std::move(blocks));
}

Element inverse(const Element& a) {
  std::vector<Matrix> blocks;
  for (const auto& m : a.blocks()) {
    Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible()) fail(ErrorKind::NumericalFailure, "element is not invertible");
    blocks.push_back(lu.inverse());
  }
  return Element(a.spec(), std::move(blocks));
}

Scalar trace(const Element& a) {
  Scalar t = 0.0;
  for (const auto& m : a.blocks()) t += m.trace();
  return t;
}

std::vector<Scalar> block_traces(const Element& a) {
  std::vector<Scalar> out;
  for (const auto& m : a.blocks()) out.push_back(m.trace());
  return out;
}

namespace {

Eigen::VectorXd singular_values(const Matrix& m) {
  return Eigen::JacobiSVD<Matrix>(m).singularValues();
}

}  // namespace

double largest_singular_value(const Element& a) {
  double s = 0.0;
  for (const auto& m : a.blocks()) {
    const auto sv = singular_values(m);
    if (sv.size() > 0) s = std::max(s, sv(0));
  }
  return s;
}

std::vector<int> block_ranks(const Element& a, double tol) {
  if (!(tol > 0.0)) fail(ErrorKind::InvalidArgument, "tol must be positive");
  std::vector<Eigen::VectorXd> svs;
  double scale = 0.0;
  for (const auto& m : a.blocks()) {
    svs.push_back(singular_values(m));
    if (svs.back().size() > 0) scale = std::max(scale, svs.back()(0));
  }
  std::vector<int> ranks;
  const double threshold = tol * scale;
  for (const auto& sv : svs) {
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > threshold) ++r;
    ranks.push_back(r);
  }
  return ranks;
}

int rank(const Element& a, double tol) {
  int r = 0;
  for (int b : block_ranks(a, tol)) r += b;
  return r;
}

double norm_distance(const Element& a, const Element& b) { return largest_singular_value(a - b); }

Matrix to_block_diagonal(const Element& a) {
  const auto& spec = a.spec();
  Matrix out = Matrix::Zero(spec.order(), spec.order());
  for (int i = 0; i < spec.num_blocks(); ++i) {
    const int n = spec.block_dim(i);
    out.block(spec.offset(i), spec.offset(i), n, n) = a.block(i);
  }
  return out;
}

Vector flatten(const Element& a) {
  Vector v(a.spec().dimension());
  Eigen::Index idx = 0;
  for (const auto& m : a.blocks())
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) v(idx++) = m(r, c);
  return v;
}

Element unflatten(const AlgebraSpec& spec, const Vector& coords) {
  if (coords.size() != spec.dimension()) fail(ErrorKind::ShapeMismatch, "coordinate vector has the wrong length");
  std::vector<Matrix> blocks;
  Eigen::Index idx = 0;
  for (int n : spec.block_dims()) {
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(r, c) = coords(idx++);
    blocks.push_back(std::move(m));
  }
  return Element(spec, std::move(blocks));
}

// --- random generation -------------------------------------------------------

Matrix random_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  // Fill column-major in a fixed order so results depend only on the seed.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = Scalar(re, im);
    }
  return m;
}

Vector random_vector(int size, Rng& rng) { return random_matrix(size, 1, rng).col(0); }

Element random_element(const AlgebraSpec& spec, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int n : spec.block_dims()) blocks.push_back(random_matrix(n, n, rng));
  return Element(spec, std::move(blocks));
}

Element random_element_with_ranks(const AlgebraSpec& spec, const std::vector<int>& ranks, Rng& rng) {
  if (static_cast<int>(ranks.size()) != spec.num_blocks())
    fail(ErrorKind::InvalidArgument, "one rank per block required");
  std::vector<Matrix> blocks;
  for (int i = 0; i < spec.num_blocks(); ++i) {
    const int n = spec.block_dim(i);
    const int r = ranks[i];
    if (r < 0 || r > n) fail(ErrorKind::InvalidArgument, "block rank out of range");
    if (r == 0) {
      blocks.push_back(Matrix::Zero(n, n));
    } else {
      blocks.push_back(random_matrix(n, r, rng) * random_matrix(r, n, rng));
    }
  }
  return Element(spec, std::move(blocks));
}

Element random_traceless_element(const AlgebraSpec& spec, Rng& rng) {
  Element t = random_element(spec, rng);
  const Scalar shift = trace(t) / static_cast<double>(spec.order());
  return t - shift * Element::identity(spec);
}

}  // namespace shoda
