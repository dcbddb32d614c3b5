#pragma once

// Block-diagonal semisimple algebras  M_{n_1}(C) + ... + M_{n_k}(C)  and their
// elements. Every element is stored as one dense complex matrix per block.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "shoda/error.hpp"

namespace shoda {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default zero threshold, relative to the largest singular value of the
/// quantity being tested.
inline constexpr double kDefaultTol = 1e-9;

class AlgebraSpec {
 public:
  /// Throws InvalidArgument unless there is at least one block and every
  /// block dimension is positive.
  explicit AlgebraSpec(std::vector<int> block_dims);

  const std::vector<int>& block_dims() const noexcept { return dims_; }
  int num_blocks() const noexcept { return static_cast<int>(dims_.size()); }
  int block_dim(int block) const { return dims_.at(block); }

  /// N = sum of block dimensions; the size of the full matrix algebra that
  /// the completion is isomorphic to.
  int order() const noexcept { return order_; }
  /// dim(A) = sum of n_i^2.
  int dimension() const noexcept { return dimension_; }
  /// Row/column offset of block i inside an N x N matrix.
  int offset(int block) const { return offsets_.at(block); }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;

 private:
  std::vector<int> dims_;
  std::vector<int> offsets_;
  int order_ = 0;
  int dimension_ = 0;
};

class Element {
 public:
  /// Throws ShapeMismatch if the block shapes disagree with `spec`.
  Element(AlgebraSpec spec, std::vector<Matrix> blocks);

  static Element zero(const AlgebraSpec& spec);
  static Element identity(const AlgebraSpec& spec);
  /// E^{(block)}_{row,col}, indices 0-based.
  static Element matrix_unit(const AlgebraSpec& spec, int block, int row, int col);
  /// Canonical rank-one projection p_i = E^{(i)}_{11}.
  static Element canonical_projection(const AlgebraSpec& spec, int block);
  /// Element that is `m` in block `block` and zero elsewhere.
  static Element in_block(const AlgebraSpec& spec, int block, const Matrix& m);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const std::vector<Matrix>& blocks() const noexcept { return blocks_; }
  const Matrix& block(int i) const { return blocks_.at(i); }

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Scalar s);

  friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
  friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
  friend Element operator*(Scalar s, Element e) { return e *= s; }
  friend Element operator*(Element e, Scalar s) { return e *= s; }
  friend Element operator-(Element e) { return e *= Scalar(-1.0); }

  /// Exact equality of every entry; use norm_distance for tolerances.
  friend bool operator==(const Element& a, const Element& b);

  bool is_zero() const;
  /// Largest absolute entry.
  double max_abs() const;

 private:
  AlgebraSpec spec_;
  std::vector<Matrix> blocks_;
};

void require_same_spec(const AlgebraSpec& a, const AlgebraSpec& b);

/// Blockwise product. Throws ShapeMismatch if the specs differ.
Element multiply(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return multiply(a, b); }

/// Inverse, blockwise. Throws NumericalFailure if some block is singular.
Element inverse(const Element& a);

/// Sum of the block matrix traces.
Scalar trace(const Element& a);
std::vector<Scalar> block_traces(const Element& a);

/// max over blocks of the largest singular value.
double largest_singular_value(const Element& a);

/// Sum over blocks of the numerical matrix rank, counting singular values
/// above tol * largest_singular_value(a).
int rank(const Element& a, double tol = kDefaultTol);
std::vector<int> block_ranks(const Element& a, double tol = kDefaultTol);

/// Largest singular value of a - b.
double norm_distance(const Element& a, const Element& b);

/// Embeds the element as a block-diagonal N x N matrix.
Matrix to_block_diagonal(const Element& a);

/// Coordinates with respect to the matrix-unit basis, block by block,
/// row-major within each block.
Vector flatten(const Element& a);
Element unflatten(const AlgebraSpec& spec, const Vector& coords);

}  // namespace shoda
