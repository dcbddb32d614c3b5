#pragma once

// The trace-pairing tensor extension of a block algebra A.
//
// Ap_i carries the basis E^{(i)}_{k1} and p_jA carries E^{(j)}_{1l}, so an
// element of Ap_i (x) p_jA is an n_i x n_j coordinate matrix M whose entry
// M(k,l) is the coefficient of E^{(i)}_{k1} (x) E^{(j)}_{1l}. In these
// coordinates the product (a (x) b)(c (x) d) = Tr(bc) a (x) d becomes block
// matrix multiplication, and phi(xp (x) py) = xpy is the identity on the
// diagonal coordinate blocks.

#include <map>
#include <utility>

#include "shoda/algebra.hpp"

namespace shoda {

/// Ordered pair of 0-based block indices (i, j).
using BlockPair = std::pair<int, int>;

/// Finite sums over ordered block pairs of coordinate matrices. Absent keys
/// are zero. `Diagonal` selects whether pairs (i, i) may be stored.
template <bool Diagonal>
class PairSum {
 public:
  explicit PairSum(AlgebraSpec spec) : spec_(std::move(spec)) {}
  /// Throws InvalidArgument on a forbidden diagonal key or out-of-range
  /// index, ShapeMismatch on a wrongly sized matrix.
  PairSum(AlgebraSpec spec, std::map<BlockPair, Matrix> terms);

  const AlgebraSpec& spec() const noexcept { return spec_; }
  const std::map<BlockPair, Matrix>& terms() const noexcept { return terms_; }

  /// Coordinate matrix of pair (i, j); zeros when absent.
  Matrix coordinates(int i, int j) const;
  /// Adds m to the (i, j) coordinates.
  void accumulate(int i, int j, const Matrix& m);

  /// Drops keys whose coordinate matrix is exactly zero.
  void prune();
  bool is_zero() const;

  PairSum& operator+=(const PairSum& other);
  PairSum& operator-=(const PairSum& other);
  PairSum& operator*=(Scalar s);
  friend PairSum operator+(PairSum lhs, const PairSum& rhs) { return lhs += rhs; }
  friend PairSum operator-(PairSum lhs, const PairSum& rhs) { return lhs -= rhs; }
  friend PairSum operator*(Scalar s, PairSum u) { return u *= s; }

  /// Equal as tensors (absent keys compare equal to explicit zeros).
  friend bool operator==(const PairSum& a, const PairSum& b) {
    if (!(a.spec_ == b.spec_)) return false;
    PairSum d = a;
    d -= b;
    return d.is_zero();
  }

 private:
  void check_key(int i, int j) const;

  AlgebraSpec spec_;
  std::map<BlockPair, Matrix> terms_;
};

/// A_J: sums over off-diagonal pairs only.
using AJElement = PairSum<false>;
/// A_J': sums over all pairs, diagonal included.
using AJPrimeElement = PairSum<true>;

extern template class PairSum<false>;
extern template class PairSum<true>;

/// Elementary tensor E^{(i)}_{k1} (x) E^{(j)}_{1l} of A_J (requires i != j).
AJElement tensor_unit(const AlgebraSpec& spec, int i, int j, int k, int l);
/// Elementary tensor of A_J' (i == j allowed).
AJPrimeElement prime_tensor_unit(const AlgebraSpec& spec, int i, int j, int k, int l);

/// Unique decomposition u = u_S + u_j with u_S in A_J'' (diagonal pairs) and
/// u_j in A_J; the diagonal part is returned through phi as an element of A.
struct Split {
  Element soc_part;
  AJElement off_part;
};
Split split(const AJPrimeElement& u);

/// phi^{-1}(soc) + off.
AJPrimeElement assemble(const Element& soc, const AJElement& off);

/// Trace-pairing product on A_J'. Output pair (i, j) is sum_m L(i,m) R(m,j).
AJPrimeElement tensor_multiply(const AJPrimeElement& s, const AJPrimeElement& t);

/// a (xp (x) qy) = axp (x) qy, i.e. M(i,j) -> a_i M(i,j).
AJElement left_act(const Element& a, const AJElement& u);
/// (xp (x) qy) a = xp (x) qya, i.e. M(i,j) -> M(i,j) a_j.
AJElement right_act(const AJElement& u, const Element& a);

/// Product of two A_J elements, which lands in A_J'.
AJPrimeElement product(const AJElement& u, const AJElement& v);

/// Element (a, u) of B = A + A_J.
struct BElement {
  Element a;
  AJElement u;

  static BElement zero(const AlgebraSpec& spec);
  static BElement identity(const AlgebraSpec& spec);
  /// (a, 0)
  static BElement embed(const Element& a);

  const AlgebraSpec& spec() const noexcept { return a.spec(); }

  BElement& operator+=(const BElement& o);
  BElement& operator-=(const BElement& o);
  BElement& operator*=(Scalar s);
  friend BElement operator+(BElement l, const BElement& r) { return l += r; }
  friend BElement operator-(BElement l, const BElement& r) { return l -= r; }
  friend BElement operator*(Scalar s, BElement x) { return x *= s; }
  friend bool operator==(const BElement& x, const BElement& y) { return x.a == y.a && x.u == y.u; }
};

/// (x, u)(y, v) = (xy + phi([uv]_S), uy + xv + [uv]_j).
BElement multiply_B(const BElement& x, const BElement& y);

/// psi(u) = (phi(u_S), u_j): the isomorphism A_J' -> Soc(A) + A_J inside B.
BElement psi(const AJPrimeElement& u);
/// Inverse of psi.
AJPrimeElement psi_inverse(const BElement& x);

}  // namespace shoda
