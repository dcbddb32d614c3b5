#include "shoda/projections.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "shoda/random.hpp"

namespace shoda {

namespace {

using RowVector = Eigen::RowVectorXcd;

struct RankOneFactors {
  Vector column;
  RowVector row;  // normalised so that row * column = 1 for projections
};

RankOneFactors factor_rank_one(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RankOneFactors f;
  f.column = svd.matrixU().col(0) * svd.singularValues()(0);
  f.row = svd.matrixV().col(0).adjoint();
  return f;
}

// S = [x, K] where the columns of K span ker(f). With f x = 1 this gives
// S e_1 = x and e_1^T S^{-1} = f, i.e. x f = S E_11 S^{-1}.
Matrix similarity_for(const Vector& x, const RowVector& f) {
  const Eigen::Index n = x.size();
  Matrix s(n, n);
  s.col(0) = x;
  if (n > 1) {
    Eigen::HouseholderQR<Matrix> qr(f.adjoint());
    const Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    s.rightCols(n - 1) = q.rightCols(n - 1);
  }
  return s;
}

void require_rank_one_projection(const Element& p, double tol) {
  if (!is_projection(p, tol) || rank(p, tol) != 1)
    fail(ErrorKind::NotAProjection, "expected a rank-one projection");
}

// Parameter on leg-local time tau in [0,1]: the real segment bowed into the
// upper or lower half plane. Real only at the endpoints.
Scalar bowed(double tau, double bow) { return Scalar(tau, bow * std::sin(std::numbers::pi * tau)); }

double draw_bow(Rng& rng) {
  std::uniform_real_distribution<double> mag(0.2, 0.6);
  std::bernoulli_distribution sign(0.5);
  const double b = mag(rng);
  return sign(rng) ? b : -b;
}

// Maps global sample index to (leg, local time).
std::pair<int, double> locate(int s, int samples, int legs) {
  const double t = static_cast<double>(s) / (samples - 1) * legs;
  int leg = static_cast<int>(std::floor(t));
  if (leg >= legs) leg = legs - 1;
  return {leg, t - leg};
}

}  // namespace

bool is_projection(const Element& p, double tol) {
  const double scale = std::max(1.0, largest_singular_value(p));
  return largest_singular_value(p * p - p) <= tol * scale;
}

int jp_index(const Element& q, double tol) {
  if (q.is_zero()) fail(ErrorKind::ZeroElement, "zero element lies in every ideal");
  const auto ranks = block_ranks(q, tol);
  int total = 0;
  int index = -1;
  for (int i = 0; i < static_cast<int>(ranks.size()); ++i) {
    total += ranks[i];
    if (ranks[i] > 0) index = i;
  }
  if (total != 1) fail(ErrorKind::NotRankOne, "element has rank " + std::to_string(total));
  return index;
}

Element conjugate_projections(const Element& p, const Element& q, double tol) {
  require_same_spec(p.spec(), q.spec());
  require_rank_one_projection(p, tol);
  require_rank_one_projection(q, tol);
  const int i = jp_index(p, tol);
  if (jp_index(q, tol) != i)
    fail(ErrorKind::DifferentMinimalIdeal, "projections generate different minimal ideals");

  Element u = Element::identity(p.spec());
  if (p == q) return u;

  auto fp = factor_rank_one(p.block(i));
  auto fq = factor_rank_one(q.block(i));
  fp.row /= (fp.row * fp.column)(0);
  fq.row /= (fq.row * fq.column)(0);
  const Matrix s = similarity_for(fp.column, fp.row);
  const Matrix t = similarity_for(fq.column, fq.row);
  const Matrix block = t * s.partialPivLu().inverse();

  std::vector<Matrix> blocks = u.blocks();
  blocks[i] = block;
  return Element(p.spec(), std::move(blocks));
}

std::vector<Element> projection_path(const Element& p, const Element& q, int samples, double tol,
                                     std::uint64_t seed) {
  require_same_spec(p.spec(), q.spec());
  if (samples < 2) fail(ErrorKind::InvalidArgument, "a path needs at least two samples");
  require_rank_one_projection(p, tol);
  require_rank_one_projection(q, tol);
  const int block = jp_index(p, tol);
  if (jp_index(q, tol) != block)
    fail(ErrorKind::DifferentMinimalIdeal, "no path of rank-one projections joins different minimal ideals");

  if (p == q) return std::vector<Element>(samples, p);

  const AlgebraSpec& spec = p.spec();
  const int n = spec.block_dim(block);
  Rng rng(seed);

  auto fp = factor_rank_one(p.block(block));
  auto fq = factor_rank_one(q.block(block));
  fp.row /= (fp.row * fp.column)(0);
  fq.row /= (fq.row * fq.column)(0);
  const Vector& x = fp.column;
  const RowVector& f = fp.row;
  const Vector& y = fq.column;
  const RowVector& g = fq.row;

  // Pivot column z with f z != 0 and g z != 0; y itself works unless f y = 0.
  auto usable = [&](const Vector& z) {
    return std::abs((f * z)(0)) > tol * f.norm() * z.norm() && std::abs((g * z)(0)) > tol * g.norm() * z.norm();
  };
  Vector z = y;
  bool pivot_is_y = usable(y);
  for (int attempt = 0; !pivot_is_y && attempt < kPathRetries && !usable(z); ++attempt) z = random_vector(n, rng);
  if (!usable(z)) fail(ErrorKind::PathDegenerate, "could not find a pivot vector");
  const Scalar fz = (f * z)(0);
  const Scalar gz = (g * z)(0);

  // Each leg is col(l) * row(l) with both factors affine in l.
  struct Leg {
    Vector col0, col1;
    RowVector row0, row1;
  };
  std::vector<Leg> legs;
  legs.push_back({x, z, f, f});
  legs.push_back({z, z, f / fz, g / gz});
  if (!pivot_is_y) legs.push_back({z / gz, y, g, g});
  const int num_legs = static_cast<int>(legs.size());

  for (int attempt = 0; attempt < kPathRetries; ++attempt) {
    std::vector<double> bows;
    for (int k = 0; k < num_legs; ++k) bows.push_back(draw_bow(rng));

    std::vector<Element> path;
    path.reserve(samples);
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
      if (s == 0) {
        path.push_back(p);
        continue;
      }
      if (s == samples - 1) {
        path.push_back(q);
        continue;
      }
      const auto [k, tau] = locate(s, samples, num_legs);
      const Scalar lambda = bowed(tau, bows[k]);
      const Leg& leg = legs[k];
      const Vector col = leg.col0 + lambda * (leg.col1 - leg.col0);
      const RowVector row = leg.row0 + lambda * (leg.row1 - leg.row0);
      const Scalar tr = (row * col)(0);
      if (std::abs(tr) <= tol * row.norm() * col.norm()) {
        ok = false;
        break;
      }
      Element e = Element::in_block(spec, block, (col * row) / tr);
      if (!is_projection(e, tol) || rank(e, tol) != 1) {
        ok = false;
        break;
      }
      path.push_back(std::move(e));
    }
    if (ok) return path;
  }
  fail(ErrorKind::PathDegenerate, "every perturbed route met the exceptional set");
}

LeftIdealMap left_ideal_isomorphism(const Element& p, const Element& q, double tol) {
  Element v = conjugate_projections(p, q, tol);
  Element v_inv = inverse(v);
  return LeftIdealMap(std::move(v), std::move(v_inv));
}

std::vector<Element> rank_preserving_path(const Element& a, const Element& b, int n, int samples, double tol,
                                          std::uint64_t seed) {
  require_same_spec(a.spec(), b.spec());
  if (samples < 2) fail(ErrorKind::InvalidArgument, "a path needs at least two samples");
  if (rank(a, tol) != n || rank(b, tol) != n) fail(ErrorKind::RankMismatch, "endpoints must both have rank n");
  const auto ranks = block_ranks(a, tol);
  if (ranks != block_ranks(b, tol))
    fail(ErrorKind::NotShodaComplete,
         "endpoints distribute their rank differently over the blocks; the rank-n elements are disconnected");

  if (a == b) return std::vector<Element>(samples, a);

  const AlgebraSpec& spec = a.spec();
  struct Factors {
    Matrix left, right;
  };
  auto factor = [](const Matrix& m, int r) {
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Factors f;
    f.left = svd.matrixU().leftCols(r) * svd.singularValues().head(r).asDiagonal();
    f.right = svd.matrixV().leftCols(r).adjoint();
    return f;
  };
  std::vector<Factors> fa, fb;
  for (int i = 0; i < spec.num_blocks(); ++i) {
    fa.push_back(factor(a.block(i), ranks[i]));
    fb.push_back(factor(b.block(i), ranks[i]));
  }

  Rng rng(seed);
  for (int attempt = 0; attempt < kPathRetries; ++attempt) {
    const double bow = draw_bow(rng);
    std::vector<Element> path;
    path.reserve(samples);
    bool ok = true;
    for (int s = 0; s < samples && ok; ++s) {
      if (s == 0) {
        path.push_back(a);
        continue;
      }
      if (s == samples - 1) {
        path.push_back(b);
        continue;
      }
      const Scalar lambda = bowed(static_cast<double>(s) / (samples - 1), bow);
      std::vector<Matrix> blocks;
      for (int i = 0; i < spec.num_blocks(); ++i) {
        const Matrix left = fa[i].left + lambda * (fb[i].left - fa[i].left);
        const Matrix right = fa[i].right + lambda * (fb[i].right - fa[i].right);
        blocks.push_back(left * right);
      }
      Element e(spec, std::move(blocks));
      if (block_ranks(e, tol) != ranks) ok = false;
      path.push_back(std::move(e));
    }
    if (ok) return path;
  }
  fail(ErrorKind::PathDegenerate, "every perturbed route met the rank-drop set");
}

}  // namespace shoda
