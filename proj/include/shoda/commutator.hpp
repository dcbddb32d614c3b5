#pragma once
// Shoda-completeness of block algebras: the equivalent criteria, explicit
// commutator decompositions of traceless elements, and per-block trace
// certificates for elements that cannot be commutators.

#include <cstdint>
#include <optional>
#include <vector>

#include "shoda/completion.hpp"
#include "shoda/tensor.hpp"

namespace shoda {

struct CornerCheck {
  int rank = 0;       // rank n of the sampled projection p
  int dimension = 0;  // dim pAp
  int expected = 0;   // n^2
};

struct ShodaReport {
  bool verdict = false;
  /// Every ideal generated by a nonzero element is all of A.
  bool criterion_minimal_ideal = false;
  /// Soc(A) = J_p for a sampled rank-one projection p.
  bool criterion_single_Jp = false;
  /// dim pAp = rank(p)^2 for every sampled projection p.
  std::vector<CornerCheck> criterion_corner;
  /// Sampled rank-one idempotents fall into a single J_p class.
  bool criterion_connectivity = false;
  /// Traceless per-block-scalar element that is not a commutator (k >= 2).
  std::optional<Element> witness;

  bool corner_passes() const;
};

/// Evaluates each criterion independently. Throws InternalError if they
/// disagree.
ShodaReport is_shoda_complete(const AlgebraSpec& spec, double tol = kDefaultTol, std::uint64_t seed = 42);

template <class T>
struct CommutatorWitness {
  T a;
  T b;
  double residual = 0.0;  // ||t - (ab - ba)||
};

/// Largest admissible condition number of the zero-diagonal similarity.
inline constexpr double kMaxConditioning = 1e8;
inline constexpr int kPivotRetries = 16;

/// t = ab - ba. Blocks are handled independently, so a multi-block t is
/// accepted when every block trace vanishes.
///
/// Throws NotTraceless, NotShodaComplete when the total trace vanishes but a
/// block trace does not, or NumericalFailure when every pivot choice gives an
/// ill-conditioned similarity.
CommutatorWitness<Element> commutator_decompose(const Element& t, double tol = kDefaultTol,
                                                std::uint64_t seed = 42);

struct TraceCertificate {
  std::vector<Scalar> block_traces;
  /// Total trace zero but some block trace nonzero: t is not a commutator.
  bool certified = false;
};

TraceCertificate infeasibility_certificate(const Element& t, double tol = kDefaultTol);

/// Decomposes (t, 0) + Rad(B) in A_S through the isomorphism with M_N and
/// pulls the factors back to B. The residual is the extension norm of
/// (t, 0) - (ab - ba). Throws NotTraceless.
CommutatorWitness<BElement> decompose_in_completion(const Element& t, double tol = kDefaultTol,
                                                    std::uint64_t seed = 42);
CommutatorWitness<BElement> decompose_in_completion(const CompletionResult& completion, const Element& t,
                                                    double tol = kDefaultTol, std::uint64_t seed = 42);

}  // namespace shoda
