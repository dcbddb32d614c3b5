#include "shoda/norms.hpp"

#include <algorithm>
#include <cmath>

#include "shoda/completion.hpp"
#include "shoda/random.hpp"

namespace shoda {

double a_norm(const Element& x) { return largest_singular_value(x); }

double pair_nuclear_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues().sum();
}

double aj_norm(const AJElement& u) {
  double s = 0.0;
  for (const auto& [key, m] : u.terms()) s += pair_nuclear_norm(m);
  return s;
}

NormReport b_norm(const BElement& x) {
  NormReport r;
  r.a_norm = a_norm(x.a);
  for (const auto& [key, m] : x.u.terms()) {
    const double n = pair_nuclear_norm(m);
    r.per_pair[key] += n;
    r.u_l1 += n;
  }
  r.total = r.a_norm + r.u_l1;
  return r;
}

double SubmultiplicativityReport::worst() const {
  return std::max({right_action, left_action, tensor_product, full});
}

namespace {

double ratio(double product_norm, double left, double right) {
  if (left == 0.0 || right == 0.0) return 0.0;
  return product_norm / (left * right);
}

// Random A_J element: each off-diagonal pair present with probability 1/2,
// with a random rank so that rank-one (equality) cases are exercised.
AJElement random_aj(const AlgebraSpec& spec, Rng& rng) {
  AJElement u(spec);
  std::bernoulli_distribution present(0.5);
  for (int i = 0; i < spec.num_blocks(); ++i)
    for (int j = 0; j < spec.num_blocks(); ++j) {
      if (i == j || !present(rng)) continue;
      const int ni = spec.block_dim(i);
      const int nj = spec.block_dim(j);
      std::uniform_int_distribution<int> rank_dist(1, std::min(ni, nj));
      const int r = rank_dist(rng);
      u.accumulate(i, j, random_matrix(ni, r, rng) * random_matrix(r, nj, rng));
    }
  return u;
}

Element random_a(const AlgebraSpec& spec, Rng& rng) {
  std::vector<int> ranks;
  for (int n : spec.block_dims()) {
    std::uniform_int_distribution<int> rank_dist(0, n);
    ranks.push_back(rank_dist(rng));
  }
  return random_element_with_ranks(spec, ranks, rng);
}

}  // namespace

SubmultiplicativityReport submultiplicativity_audit(const AlgebraSpec& spec, int samples, std::uint64_t seed) {
  if (samples < 1) fail(ErrorKind::InvalidArgument, "samples must be positive");
  Rng rng(seed);
  SubmultiplicativityReport rep;
  for (int s = 0; s < samples; ++s) {
    const AJElement u = random_aj(spec, rng);
    const AJElement v = random_aj(spec, rng);
    const Element a = random_a(spec, rng);
    const Element b = random_a(spec, rng);

    rep.right_action = std::max(rep.right_action, ratio(aj_norm(right_act(u, b)), aj_norm(u), a_norm(b)));
    rep.left_action = std::max(rep.left_action, ratio(aj_norm(left_act(a, v)), a_norm(a), aj_norm(v)));

    const Split uv = split(product(u, v));
    rep.tensor_product =
        std::max(rep.tensor_product, ratio(a_norm(uv.soc_part) + aj_norm(uv.off_part), aj_norm(u), aj_norm(v)));

    const BElement x{a, u};
    const BElement y{b, v};
    rep.full = std::max(rep.full, ratio(b_norm(multiply_B(x, y)).total, b_norm(x).total, b_norm(y).total));
  }
  return rep;
}

double isometry_check(const AlgebraSpec& spec, int samples, std::uint64_t seed, double tol) {
  if (samples < 1) fail(ErrorKind::InvalidArgument, "samples must be positive");
  const CompletionResult completion = complete(spec, tol, seed);
  if (completion.radical_dim != 0)
    fail(ErrorKind::InternalError, "nonzero radical: the quotient norm needs an infimum over cosets");

  Rng rng(seed);
  std::vector<Element> probes{Element::identity(spec), Element::zero(spec)};
  for (int s = 0; s < samples; ++s) probes.push_back(random_a(spec, rng));

  double worst = 0.0;
  for (const auto& a : probes) {
    const double lhs = b_norm(completion.lift(completion.embed(a))).total;
    const double rhs = a_norm(a);
    const double dev = rhs == 0.0 ? lhs : std::abs(lhs - rhs) / rhs;
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace shoda
