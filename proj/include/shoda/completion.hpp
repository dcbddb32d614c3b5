#pragma once

// The Shoda-completion A_S = B / Rad(B) of a block algebra A, together with an
// explicit isomorphism onto M_N (N = sum of block dimensions).
//
// In finite dimension the normed completion of B is B itself, so A_S is the
// algebraic quotient.

#include <cstdint>
#include <vector>

#include "shoda/structure.hpp"

namespace shoda {

struct CompletionResult {
  AlgebraSpec spec;
  int N = 0;
  int total_dim = 0;    // dim B
  int radical_dim = 0;  // dim Rad(B)
  std::vector<int> components;
  /// Worst deviation of the isomorphism witness from multiplicativity, over
  /// every basis product and the random product samples.
  double iso_residual = 0.0;
  /// Largest |A-coordinate| of any radical basis vector (zero when the
  /// radical lies inside A_J, as it must).
  double radical_a_part = 0.0;

  BBasis basis;
  StructureConstantAlgebra B;
  /// A_S and the lift of its basis into B coordinates.
  Quotient quotient;
  /// Image in M_N of every A_S basis element.
  std::vector<Matrix> iso_witness;

  /// T(a) = (a, 0) + Rad(B) in A_S coordinates.
  Vector embed(const Element& a) const;
  /// Image of A_S coordinates in M_N.
  Matrix to_matrix(const Vector& coords) const;
  /// Inverse of to_matrix (least squares against the witness).
  Vector from_matrix(const Matrix& m) const;
  /// Representative in B of A_S coordinates.
  BElement lift(const Vector& coords) const;
  /// A_S coordinates of (a, u) + Rad(B).
  Vector project(const BElement& x) const;
};

/// Number of random product pairs used to audit the isomorphism witness.
inline constexpr int kIsoRandomPairs = 100;

/// build_B -> radical -> quotient -> wedderburn_identify, then builds and
/// audits the isomorphism A_S -> M_N: block i of A goes to diagonal block i,
/// tensor coordinates M(i,j) go to off-diagonal block (i, j).
CompletionResult complete(const AlgebraSpec& spec, double tol = kDefaultTol, std::uint64_t seed = 42);

/// Block algebra with one block of size sqrt(d) per simple component d.
AlgebraSpec completed_structure(const CompletionResult& result);

}  // namespace shoda
