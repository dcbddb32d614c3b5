#pragma once

// Rank-one projections, the minimal ideals J_p they generate, similarity
// orbits, and paths of constant rank.

#include <cstdint>
#include <vector>

#include "shoda/algebra.hpp"

namespace shoda {

/// ||p^2 - p|| <= tol * max(1, ||p||).
bool is_projection(const Element& p, double tol = kDefaultTol);

/// The unique block i such that the rank-one element q lies in J_{p_i}.
/// 0-based. Throws ZeroElement or NotRankOne.
int jp_index(const Element& q, double tol = kDefaultTol);

/// Invertible u with u p u^{-1} = q, for rank-one projections in the same
/// minimal ideal. The invertible group of a block algebra is connected, so u
/// also lies in the principal component.
///
/// Throws NotAProjection, or DifferentMinimalIdeal if p and q live in
/// different blocks (their similarity orbits are disjoint).
Element conjugate_projections(const Element& p, const Element& q, double tol = kDefaultTol);

/// Perturbation attempts made by the path constructions before giving up.
inline constexpr int kPathRetries = 16;

/// Sampled arc of rank-one idempotents from p to q. The first and last
/// samples are exactly p and q. Every leg is g(l) = f(l) / Tr f(l) for an
/// affine rank-one family f; the parameter runs on a seeded complex bow off
/// the real segment so the zero set of Tr f is avoided.
///
/// Throws DifferentMinimalIdeal, NotAProjection, InvalidArgument when
/// samples < 2, or PathDegenerate if every perturbation fails.
std::vector<Element> projection_path(const Element& p, const Element& q, int samples,
                                     double tol = kDefaultTol, std::uint64_t seed = 42);

/// T_q(xp) = v xp v^{-1}: the isomorphism of minimal left ideals Ap -> Aq.
class LeftIdealMap {
 public:
  LeftIdealMap(Element conjugator, Element conjugator_inverse)
      : v_(std::move(conjugator)), v_inv_(std::move(conjugator_inverse)) {}

  const Element& conjugator() const noexcept { return v_; }
  const Element& conjugator_inverse() const noexcept { return v_inv_; }

  Element operator()(const Element& xp) const { return v_ * xp * v_inv_; }

 private:
  Element v_;
  Element v_inv_;
};

LeftIdealMap left_ideal_isomorphism(const Element& p, const Element& q, double tol = kDefaultTol);

/// Sampled arc of rank-n elements from a to b (endpoints exact). Built
/// blockwise from interpolated rank factorisations, which keeps every sample
/// at rank <= n; samples are bowed into the complex parameter plane to avoid
/// the discrete set where the rank drops.
///
/// Throws RankMismatch if rank(a) or rank(b) differs from n, and
/// NotShodaComplete if the per-block ranks of a and b differ: rank-n elements
/// of a multi-block algebra split into several components.
std::vector<Element> rank_preserving_path(const Element& a, const Element& b, int n, int samples,
                                          double tol = kDefaultTol, std::uint64_t seed = 42);

}  // namespace shoda
