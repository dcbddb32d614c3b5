#pragma once

// Spectral theory of block algebra elements: spectrum with multiplicities,
// Riesz projections by contour quadrature, and separating elements.

#include <vector>

#include "shoda/algebra.hpp"

namespace shoda {

struct SpectralValue {
  Scalar value;
  int multiplicity = 0;
};

struct SpectrumReport {
  /// Distinct eigenvalues over all blocks, sorted by (real, imag).
  std::vector<SpectralValue> eigenvalues;
  /// Subset with |value| above the zero threshold.
  std::vector<SpectralValue> nonzero_part;
  /// Absolute threshold that was used (tol times the largest singular value).
  double threshold = 0.0;

  int total_multiplicity() const;
  int nonzero_multiplicity() const;
};

/// Eigenvalues closer than tol * largest_singular_value(a) are merged into a
/// single spectral value. Throws NumericalFailure if the eigensolver fails.
SpectrumReport spectrum(const Element& a, double tol = kDefaultTol);

/// Number of quadrature nodes on the resolvent contour.
inline constexpr int kContourNodes = 256;

/// Spectral idempotent of the isolated nonzero eigenvalue nearest `lambda`,
/// computed by trapezoid quadrature of the resolvent on a circle of radius
/// half the distance to the nearest other eigenvalue.
///
/// Throws NoSuchSpectralValue if `lambda` is not a nonzero eigenvalue within
/// the threshold, and ContourTooTight if another eigenvalue lies within four
/// thresholds.
Element riesz_projection(const Element& a, Scalar lambda, double tol = kDefaultTol);

/// Returns y with Tr(b y) = 1 and Tr(a_i y) = 0 for every a_i; the minimum
/// norm solution of the trace-functional system.
///
/// Throws NotRankOne if any input does not have rank one, and DependentInputs
/// if the trace functionals are linearly dependent.
Element separating_element(const Element& b, const std::vector<Element>& others,
                           double tol = kDefaultTol);

}  // namespace shoda
