#include "shoda/tensor.hpp"

#include <string>

namespace shoda {

template <bool Diagonal>
PairSum<Diagonal>::PairSum(AlgebraSpec spec, std::map<BlockPair, Matrix> terms)
    : spec_(std::move(spec)), terms_(std::move(terms)) {
  for (const auto& [key, m] : terms_) {
    check_key(key.first, key.second);
    if (m.rows() != spec_.block_dim(key.first) || m.cols() != spec_.block_dim(key.second))
      fail(ErrorKind::ShapeMismatch, "coordinate matrix for pair (" + std::to_string(key.first + 1) + "," +
                                         std::to_string(key.second + 1) + ") has the wrong shape");
  }
}

template <bool Diagonal>
void PairSum<Diagonal>::check_key(int i, int j) const {
  if (i < 0 || j < 0 || i >= spec_.num_blocks() || j >= spec_.num_blocks())
    fail(ErrorKind::InvalidArgument, "block pair index out of range");
  if (!Diagonal && i == j)
    fail(ErrorKind::InvalidArgument, "A_J holds off-diagonal pairs only; diagonal terms belong to A");
}

template <bool Diagonal>
Matrix PairSum<Diagonal>::coordinates(int i, int j) const {
  check_key(i, j);
  auto it = terms_.find({i, j});
  if (it == terms_.end()) return Matrix::Zero(spec_.block_dim(i), spec_.block_dim(j));
  return it->second;
}

template <bool Diagonal>
void PairSum<Diagonal>::accumulate(int i, int j, const Matrix& m) {
  check_key(i, j);
  if (m.rows() != spec_.block_dim(i) || m.cols() != spec_.block_dim(j))
    fail(ErrorKind::ShapeMismatch, "coordinate matrix has the wrong shape");
  auto [it, inserted] = terms_.try_emplace({i, j}, m);
  if (!inserted) it->second += m;
}

template <bool Diagonal>
void PairSum<Diagonal>::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.isZero(0.0); });
}

template <bool Diagonal>
bool PairSum<Diagonal>::is_zero() const {
  for (const auto& [key, m] : terms_)
    if (!m.isZero(0.0)) return false;
  return true;
}

template <bool Diagonal>
PairSum<Diagonal>& PairSum<Diagonal>::operator+=(const PairSum& other) {
  require_same_spec(spec_, other.spec_);
  for (const auto& [key, m] : other.terms_) accumulate(key.first, key.second, m);
  return *this;
}

template <bool Diagonal>
PairSum<Diagonal>& PairSum<Diagonal>::operator-=(const PairSum& other) {
  require_same_spec(spec_, other.spec_);
  for (const auto& [key, m] : other.terms_) accumulate(key.first, key.second, -m);
  return *this;
}

template <bool Diagonal>
PairSum<Diagonal>& PairSum<Diagonal>::operator*=(Scalar s) {
  for (auto& [key, m] : terms_) m *= s;
  return *this;
}

template class PairSum<false>;
template class PairSum<true>;

AJElement tensor_unit(const AlgebraSpec& spec, int i, int j, int k, int l) {
  AJElement u(spec);
  Matrix m = Matrix::Zero(spec.block_dim(i), spec.block_dim(j));
  m(k, l) = 1.0;
  u.accumulate(i, j, m);
  return u;
}

AJPrimeElement prime_tensor_unit(const AlgebraSpec& spec, int i, int j, int k, int l) {
  AJPrimeElement u(spec);
  Matrix m = Matrix::Zero(spec.block_dim(i), spec.block_dim(j));
  m(k, l) = 1.0;
  u.accumulate(i, j, m);
  return u;
}

Split split(const AJPrimeElement& u) {
  const AlgebraSpec& spec = u.spec();
  Element soc = Element::zero(spec);
  AJElement off(spec);
  std::vector<Matrix> diag = soc.blocks();
  for (const auto& [key, m] : u.terms()) {
    if (key.first == key.second) {
      diag[key.first] += m;
    } else {
      off.accumulate(key.first, key.second, m);
    }
  }
  return {Element(spec, std::move(diag)), std::move(off)};
}

AJPrimeElement assemble(const Element& soc, const AJElement& off) {
  require_same_spec(soc.spec(), off.spec());
  AJPrimeElement u(soc.spec());
  for (int i = 0; i < soc.spec().num_blocks(); ++i)
    if (!soc.block(i).isZero(0.0)) u.accumulate(i, i, soc.block(i));
  for (const auto& [key, m] : off.terms()) u.accumulate(key.first, key.second, m);
  return u;
}

AJPrimeElement tensor_multiply(const AJPrimeElement& s, const AJPrimeElement& t) {
  require_same_spec(s.spec(), t.spec());
  AJPrimeElement out(s.spec());
  // (E_{k1}^{(i)} (x) E_{1l}^{(m)})(E_{k'1}^{(m')} (x) E_{1l'}^{(j)}) carries the
  // factor Tr(E_{1l} E_{k'1}) = delta_{m m'} delta_{l k'}.
  for (const auto& [left_key, left] : s.terms())
    for (const auto& [right_key, right] : t.terms())
      if (left_key.second == right_key.first) out.accumulate(left_key.first, right_key.second, left * right);
  return out;
}

AJElement left_act(const Element& a, const AJElement& u) {
  require_same_spec(a.spec(), u.spec());
  AJElement out(u.spec());
  for (const auto& [key, m] : u.terms()) out.accumulate(key.first, key.second, a.block(key.first) * m);
  return out;
}

AJElement right_act(const AJElement& u, const Element& a) {
  require_same_spec(a.spec(), u.spec());
  AJElement out(u.spec());
  for (const auto& [key, m] : u.terms()) out.accumulate(key.first, key.second, m * a.block(key.second));
  return out;
}

AJPrimeElement product(const AJElement& u, const AJElement& v) {
  require_same_spec(u.spec(), v.spec());
  AJPrimeElement out(u.spec());
  for (const auto& [left_key, left] : u.terms())
    for (const auto& [right_key, right] : v.terms())
      if (left_key.second == right_key.first) out.accumulate(left_key.first, right_key.second, left * right);
  return out;
}

BElement BElement::zero(const AlgebraSpec& spec) { return {Element::zero(spec), AJElement(spec)}; }

BElement BElement::identity(const AlgebraSpec& spec) { return {Element::identity(spec), AJElement(spec)}; }

BElement BElement::embed(const Element& a) { return {a, AJElement(a.spec())}; }

BElement& BElement::operator+=(const BElement& o) {
  a += o.a;
  u += o.u;
  return *this;
}

BElement& BElement::operator-=(const BElement& o) {
  a -= o.a;
  u -= o.u;
  return *this;
}

BElement& BElement::operator*=(Scalar s) {
  a *= s;
  u *= s;
  return *this;
}

BElement multiply_B(const BElement& x, const BElement& y) {
  require_same_spec(x.spec(), y.spec());
  const Split uv = split(product(x.u, y.u));
  BElement out{x.a * y.a + uv.soc_part, right_act(x.u, y.a)};
  out.u += left_act(x.a, y.u);
  out.u += uv.off_part;
  return out;
}

BElement psi(const AJPrimeElement& u) {
  Split parts = split(u);
  return {std::move(parts.soc_part), std::move(parts.off_part)};
}

AJPrimeElement psi_inverse(const BElement& x) { return assemble(x.a, x.u); }

}  // namespace shoda
