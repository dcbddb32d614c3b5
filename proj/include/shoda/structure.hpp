#pragma once

// Generic finite-dimensional associative algebras given by structure
// constants, and the semisimplification machinery run on them.

#include <cstdint>
#include <vector>

#include "shoda/algebra.hpp"
#include "shoda/tensor.hpp"

namespace shoda {

/// basis_a * basis_b = sum_c constant(a, b, c) * basis_c.
class StructureConstantAlgebra {
 public:
  /// `table` has dim^3 entries indexed [(a * dim + b) * dim + c].
  StructureConstantAlgebra(int dim, std::vector<Scalar> table, Vector unit);

  int dim() const noexcept { return dim_; }
  const Vector& unit() const noexcept { return unit_; }
  const std::vector<Scalar>& table() const noexcept { return table_; }

  Scalar constant(int a, int b, int c) const { return table_[(static_cast<std::size_t>(a) * dim_ + b) * dim_ + c]; }

  Vector multiply(const Vector& x, const Vector& y) const;
  /// Matrix of y -> x y.
  Matrix left_multiplication(const Vector& x) const;
  /// Matrix of y -> y x.
  Matrix right_multiplication(const Vector& x) const;

  /// max |(e_a e_b) e_c - e_a (e_b e_c)| over all basis triples.
  double associativity_residual() const;
  /// max |1 e_a - e_a| and |e_a 1 - e_a| over the basis.
  double unit_residual() const;

 private:
  int dim_;
  std::vector<Scalar> table_;
  Vector unit_;
};

/// Basis of B = A + A_J: first the matrix units of each block (row-major),
/// then for every ordered pair i != j (lexicographic) the tensor units
/// E^{(i)}_{k1} (x) E^{(j)}_{1l} (row-major in (k, l)). dim = N^2.
class BBasis {
 public:
  explicit BBasis(AlgebraSpec spec);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  int dim() const noexcept { return static_cast<int>(entries_.size()); }
  /// Number of leading coordinates that belong to A.
  int a_dim() const noexcept { return spec_.dimension(); }

  struct Entry {
    int left_block;   // i
    int right_block;  // j (== i for matrix units of A)
    int row;          // k
    int col;          // l
  };
  const Entry& entry(int index) const { return entries_.at(index); }

  BElement element(int index) const;
  Vector coordinates(const BElement& x) const;
  BElement from_coordinates(const Vector& coords) const;

  /// Position of basis element `index` as a matrix unit of M_N.
  std::pair<int, int> global_position(int index) const;

 private:
  AlgebraSpec spec_;
  std::vector<Entry> entries_;
};

/// Structure constants of A itself on its matrix-unit basis.
StructureConstantAlgebra algebra_table(const AlgebraSpec& spec);

/// Structure constants of B, computed by multiply_B on every pair of basis
/// elements of BBasis.
StructureConstantAlgebra build_B(const AlgebraSpec& spec);

/// Orthonormal basis (columns) of the radical, found as the null space of
/// the trace form (x, y) -> tr(L_{xy}).
///
/// Throws IllConditioned if a singular value of the trace form falls inside
/// the band [t / sqrt(10^3), t * sqrt(10^3)] around t = tol * largest, so
/// that the rank has no clean gap of 10^3.
Matrix radical(const StructureConstantAlgebra& alg, double tol = kDefaultTol);

struct Quotient {
  StructureConstantAlgebra algebra;
  /// Columns: lifts of the quotient basis, orthonormal and orthogonal to the
  /// radical.
  Matrix section;
};

/// Structure constants of alg / span(radical_basis) on the orthogonal
/// complement. Throws NotAnIdeal if the span is not a two-sided ideal.
Quotient quotient(const StructureConstantAlgebra& alg, const Matrix& radical_basis, double tol = kDefaultTol);

/// Dimensions of the simple components (ascending), found from the primitive
/// central idempotents. Throws NotSemisimple or NonSquareComponent.
std::vector<int> wedderburn_identify(const StructureConstantAlgebra& alg, double tol = kDefaultTol,
                                     std::uint64_t seed = 42);

/// Orthonormal basis (columns) of the center.
Matrix center(const StructureConstantAlgebra& alg, double tol = kDefaultTol);

}  // namespace shoda
