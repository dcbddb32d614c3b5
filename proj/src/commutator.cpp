#include "shoda/commutator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "shoda/norms.hpp"
#include "shoda/projections.hpp"
#include "shoda/random.hpp"

namespace shoda {

bool ShodaReport::corner_passes() const {
  return std::all_of(criterion_corner.begin(), criterion_corner.end(),
                     [](const CornerCheck& c) { return c.dimension == c.expected; });
}

namespace {

int span_dimension(const std::vector<Vector>& vectors, double tol) {
  if (vectors.empty()) return 0;
  Matrix m(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = vectors[c];
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return static_cast<int>((sv.array() > tol * sv(0)).count());
}

std::vector<Element> matrix_units(const AlgebraSpec& spec) {
  std::vector<Element> units;
  for (int i = 0; i < spec.num_blocks(); ++i)
    for (int r = 0; r < spec.block_dim(i); ++r)
      for (int c = 0; c < spec.block_dim(i); ++c) units.push_back(Element::matrix_unit(spec, i, r, c));
  return units;
}

// dim of span{ x g y : x, y matrix units }.
int generated_ideal_dimension(const Element& g, const std::vector<Element>& units, double tol) {
  std::vector<Vector> products;
  for (const auto& x : units) {
    const Element xg = x * g;
    if (xg.is_zero()) continue;
    for (const auto& y : units) {
      Element p = xg * y;
      if (!p.is_zero()) products.push_back(flatten(p));
    }
  }
  return span_dimension(products, tol);
}

// dim of span{ p x p : x matrix unit }.
int corner_dimension(const Element& p, const std::vector<Element>& units, double tol) {
  std::vector<Vector> products;
  for (const auto& x : units) products.push_back(flatten(p * x * p));
  return span_dimension(products, tol);
}

// X (YX)^{-1} Y for random X (n x r), Y (r x n).
Matrix random_idempotent_block(int n, int r, Rng& rng) {
  if (r == 0) return Matrix::Zero(n, n);
  const Matrix x = random_matrix(n, r, rng);
  const Matrix y = random_matrix(r, n, rng);
  return x * (y * x).inverse() * y;
}

Element random_idempotent(const AlgebraSpec& spec, const std::vector<int>& ranks, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int i = 0; i < spec.num_blocks(); ++i) blocks.push_back(random_idempotent_block(spec.block_dim(i), ranks[i], rng));
  return Element(spec, std::move(blocks));
}

// Block ranks summing to n, handed out one at a time across the blocks.
std::vector<int> spread_ranks(const AlgebraSpec& spec, int n) {
  std::vector<int> ranks(spec.num_blocks(), 0);
  int block = 0;
  while (n > 0) {
    if (ranks[block] < spec.block_dim(block)) {
      ++ranks[block];
      --n;
    }
    block = (block + 1) % spec.num_blocks();
  }
  return ranks;
}

std::vector<int> single_block_rank(const AlgebraSpec& spec, int block) {
  std::vector<int> ranks(spec.num_blocks(), 0);
  ranks[block] = 1;
  return ranks;
}

Element per_block_scalar_witness(const AlgebraSpec& spec) {
  std::vector<Matrix> blocks;
  for (int i = 0; i < spec.num_blocks(); ++i) {
    const int n = spec.block_dim(i);
    double c = 0.0;
    if (i == 0) c = spec.block_dim(1);
    if (i == 1) c = -spec.block_dim(0);
    Matrix b = Matrix::Zero(n, n);
    b.diagonal().setConstant(Scalar(c));
    blocks.push_back(std::move(b));
  }
  return Element(spec, std::move(blocks));
}

double matrix_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(m).singularValues()(0);
}

double condition_number(const Matrix& m) {
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  const double smallest = sv(sv.size() - 1);
  return smallest == 0.0 ? std::numeric_limits<double>::infinity() : sv(0) / smallest;
}

// Minimum ||Tv - (v* T v) v|| / ||T|| for a pivot to count as independent.
constexpr double kIndependence = 1e-3;

bool independent(const Matrix& t, const Vector& v, double t_norm) {
  const Vector tv = t * v;
  const Vector residual = tv - v.dot(tv) * v;
  return residual.norm() > kIndependence * t_norm;
}

// W with W t W^{-1} zero on the diagonal, for t of (numerically) zero trace.
Matrix zero_diagonal_similarity(const Matrix& t, double tol_abs, bool random_pivots, Rng& rng) {
  const Eigen::Index m = t.rows();
  if (m == 1) return Matrix::Identity(1, 1);
  const Scalar mean = t.trace() / static_cast<double>(m);
  const double t_norm = t.norm();
  if ((t - mean * Matrix::Identity(m, m)).norm() <= tol_abs) return Matrix::Identity(m, m);

  Vector v;
  bool found = false;
  if (!random_pivots) {
    for (Eigen::Index k = 0; k < m && !found; ++k) {
      v = Vector::Unit(m, k);
      found = independent(t, v, t_norm);
    }
  }
  for (int attempt = 0; attempt < kPivotRetries && !found; ++attempt) {
    v = random_vector(static_cast<int>(m), rng).normalized();
    found = independent(t, v, t_norm);
  }
  if (!found) fail(ErrorKind::NumericalFailure, "no pivot vector v with {v, tv} independent");

  const Vector tv = t * v;
  Matrix pair(m, 2);
  pair.col(0) = v;
  pair.col(1) = tv / tv.norm();
  const Matrix q = Eigen::HouseholderQR<Matrix>(pair).householderQ();
  Matrix s(m, m);
  s.leftCols(2) = pair;
  s.rightCols(m - 2) = q.rightCols(m - 2);

  const Eigen::PartialPivLU<Matrix> lu(s);
  const Matrix reduced = lu.solve(t * s);
  const Matrix inner = zero_diagonal_similarity(reduced.bottomRightCorner(m - 1, m - 1), tol_abs, random_pivots, rng);
  Matrix lift = Matrix::Identity(m, m);
  lift.bottomRightCorner(m - 1, m - 1) = inner;
  return lift * lu.inverse();
}

struct BlockWitness {
  Matrix a;
  Matrix b;
};

BlockWitness decompose_block(const Matrix& t, double tol, Rng& rng) {
  const Eigen::Index n = t.rows();
  const double t_norm = matrix_norm(t);
  if (t_norm == 0.0) return {Matrix::Zero(n, n), Matrix::Zero(n, n)};
  const double bound = tol * std::max(1.0, t_norm);

  for (int attempt = 0; attempt < kPivotRetries; ++attempt) {
    Matrix w;
    try {
      w = zero_diagonal_similarity(t, bound, attempt > 0, rng);
    } catch (const Error&) {
      continue;
    }
    if (condition_number(w) > kMaxConditioning) continue;
    const Matrix w_inv = w.inverse();
    const Matrix reduced = w * t * w_inv;
    Matrix a0 = Matrix::Zero(n, n);
    Matrix b0 = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      a0(i, i) = static_cast<double>(i);
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) b0(i, j) = reduced(i, j) / static_cast<double>(i - j);
    }
    BlockWitness out{w_inv * a0 * w, w_inv * b0 * w};
    const double residual = matrix_norm(t - (out.a * out.b - out.b * out.a));
    if (residual <= bound) return out;
  }
  fail(ErrorKind::NumericalFailure, "zero-diagonal similarity stayed ill-conditioned after every pivot retry");
}

void require_traceless(const Element& t, double tol) {
  const double scale = std::max(1.0, largest_singular_value(t));
  if (std::abs(trace(t)) > tol * scale) fail(ErrorKind::NotTraceless, "element has nonzero trace");
}

}  // namespace

ShodaReport is_shoda_complete(const AlgebraSpec& spec, double tol, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Element> units = matrix_units(spec);
  const int dim = spec.dimension();
  const int k = spec.num_blocks();
  ShodaReport report;

  report.criterion_minimal_ideal = true;
  for (int i = 0; i < k; ++i) {
    const Element g = Element::in_block(spec, i, random_matrix(spec.block_dim(i), spec.block_dim(i), rng));
    if (generated_ideal_dimension(g, units, tol) != dim) report.criterion_minimal_ideal = false;
  }

  std::uniform_int_distribution<int> block_dist(0, k - 1);
  const Element p = random_idempotent(spec, single_block_rank(spec, block_dist(rng)), rng);
  report.criterion_single_Jp = generated_ideal_dimension(p, units, tol) == dim;

  for (int n = 1; n <= spec.order(); ++n) {
    const Element q = random_idempotent(spec, spread_ranks(spec, n), rng);
    const int r = rank(q, tol);
    report.criterion_corner.push_back({r, corner_dimension(q, units, tol), r * r});
  }

  std::set<int> classes;
  const int samples = std::max(4, 2 * k);
  for (int s = 0; s < samples; ++s)
    classes.insert(jp_index(random_idempotent(spec, single_block_rank(spec, s % k), rng), tol));
  report.criterion_connectivity = classes.size() == 1;

  const bool corner = report.corner_passes();
  if (report.criterion_minimal_ideal != report.criterion_single_Jp || report.criterion_minimal_ideal != corner ||
      report.criterion_minimal_ideal != report.criterion_connectivity)
    fail(ErrorKind::InternalError, "Shoda-completeness criteria disagree");
  report.verdict = report.criterion_minimal_ideal;
  if (k >= 2) report.witness = per_block_scalar_witness(spec);
  return report;
}

TraceCertificate infeasibility_certificate(const Element& t, double tol) {
  TraceCertificate cert;
  cert.block_traces = block_traces(t);
  const double scale = tol * std::max(1.0, largest_singular_value(t));
  const bool any_block =
      std::any_of(cert.block_traces.begin(), cert.block_traces.end(), [&](Scalar s) { return std::abs(s) > scale; });
  cert.certified = std::abs(trace(t)) <= scale && any_block;
  return cert;
}

CommutatorWitness<Element> commutator_decompose(const Element& t, double tol, std::uint64_t seed) {
  require_traceless(t, tol);
  if (infeasibility_certificate(t, tol).certified)
    fail(ErrorKind::NotShodaComplete, "some block trace is nonzero; t is not a commutator in A");

  const AlgebraSpec& spec = t.spec();
  Rng rng(seed);
  std::vector<Matrix> a_blocks;
  std::vector<Matrix> b_blocks;
  for (int i = 0; i < spec.num_blocks(); ++i) {
    BlockWitness w = decompose_block(t.block(i), tol, rng);
    a_blocks.push_back(std::move(w.a));
    b_blocks.push_back(std::move(w.b));
  }
  CommutatorWitness<Element> out{Element(spec, std::move(a_blocks)), Element(spec, std::move(b_blocks)), 0.0};
  out.residual = largest_singular_value(t - (out.a * out.b - out.b * out.a));
  return out;
}

CommutatorWitness<BElement> decompose_in_completion(const CompletionResult& completion, const Element& t,
                                                    double tol, std::uint64_t seed) {
  require_same_spec(completion.spec, t.spec());
  require_traceless(t, tol);
  const AlgebraSpec full({completion.N});
  const Element image(full, {completion.to_matrix(completion.embed(t))});
  const CommutatorWitness<Element> w = commutator_decompose(image, tol, seed);

  CommutatorWitness<BElement> out{completion.lift(completion.from_matrix(w.a.block(0))),
                                  completion.lift(completion.from_matrix(w.b.block(0))), 0.0};
  if (w.a.is_zero()) out.a = BElement::zero(t.spec());
  if (w.b.is_zero()) out.b = BElement::zero(t.spec());
  const BElement commutator = multiply_B(out.a, out.b) - multiply_B(out.b, out.a);
  out.residual = b_norm(BElement::embed(t) - commutator).total;
  return out;
}

CommutatorWitness<BElement> decompose_in_completion(const Element& t, double tol, std::uint64_t seed) {
  require_traceless(t, tol);
  return decompose_in_completion(complete(t.spec(), tol, seed), t, tol, seed);
}

}  // namespace shoda
