#pragma once

// The extension norm ||(x, u)|| = ||x||_A + ||u||_1 on B = A + A_J.
//
// ||.||_A is the max-over-blocks operator norm (the C*-direct-sum norm). Under
// it Ap_i is isometric to Euclidean C^{n_i}, so the projective tensor norm on
// Ap_i (x) p_jA is the nuclear norm of the coordinate matrix.

#include <cstdint>
#include <map>

#include "shoda/tensor.hpp"

namespace shoda {

double a_norm(const Element& x);

/// Sum of singular values.
double pair_nuclear_norm(const Matrix& m);

/// ||u||_1: sum of the pair nuclear norms of an A_J element.
double aj_norm(const AJElement& u);

struct NormReport {
  double a_norm = 0.0;
  double u_l1 = 0.0;
  double total = 0.0;
  std::map<BlockPair, double> per_pair;
};

NormReport b_norm(const BElement& x);

/// Worst ratios ||xy|| / (||x|| ||y||) for each of the product families that
/// submultiplicativity reduces to. A pair with a zero factor has ratio 0.
struct SubmultiplicativityReport {
  double right_action = 0.0;  // ||ub||_1 / (||u||_1 ||b||_A)
  double left_action = 0.0;   // ||av||_1 / (||a||_A ||v||_1)
  double tensor_product = 0.0;  // (||Omega(uv)||_A + ||Gamma(uv)||_1) / (||u||_1 ||v||_1)
  double full = 0.0;          // general pairs of B
  double worst() const;
};

inline constexpr double kSubmultiplicativeSlack = 1e-9;

SubmultiplicativityReport submultiplicativity_audit(const AlgebraSpec& spec, int samples, std::uint64_t seed);

/// Max relative deviation | ||T a|| - ||a||_A | / ||a||_A over sampled a, where
/// ||T a|| is the extension norm of the representative of T a in B. With
/// Rad(B) = 0 the quotient norm is exactly that norm; a nonzero radical
/// raises InternalError.
double isometry_check(const AlgebraSpec& spec, int samples, std::uint64_t seed, double tol = kDefaultTol);

}  // namespace shoda
