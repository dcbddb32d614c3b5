#include <gtest/gtest.h>

#include <algorithm>

#include "oracles/oracles.hpp"
#include "shoda/random.hpp"
#include "shoda/spectral.hpp"
#include "support.hpp"

using namespace shoda;
using testing_support::max_abs_diff;

namespace {

const AlgebraSpec kSpec23({2, 3});

Element diag_2_0() {
  Matrix b1 = Matrix::Zero(2, 2);
  b1(0, 0) = 2.0;
  return Element(kSpec23, {b1, Matrix::Zero(3, 3)});
}

Element strictly_upper(const AlgebraSpec& spec, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int n : spec.block_dims()) {
    Matrix m = random_matrix(n, n, rng);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c <= r; ++c) m(r, c) = 0.0;
    blocks.push_back(m);
  }
  return Element(spec, std::move(blocks));
}

// Random element with prescribed distinct eigenvalues, conjugated by a
// well-conditioned random similarity.
Element diagonalizable(const AlgebraSpec& spec, const std::vector<std::vector<Scalar>>& eig, Rng& rng) {
  std::vector<Matrix> blocks;
  for (int i = 0; i < spec.num_blocks(); ++i) {
    const int n = spec.block_dim(i);
    Matrix d = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) d(k, k) = eig[i][k];
    const Matrix s = Matrix::Identity(n, n) + 0.3 * random_matrix(n, n, rng);
    blocks.push_back(s * d * s.inverse());
  }
  return Element(spec, std::move(blocks));
}

}  // namespace

TEST(Spectrum, IdentityHasOneValue) {
  const SpectrumReport s = spectrum(Element::identity(kSpec23));
  ASSERT_EQ(s.eigenvalues.size(), 1u);
  EXPECT_LT(std::abs(s.eigenvalues[0].value - Scalar(1.0)), 1e-12);
  EXPECT_EQ(s.eigenvalues[0].multiplicity, 5);
}

TEST(Spectrum, DiagonalInput) {
  const SpectrumReport s = spectrum(diag_2_0());
  ASSERT_EQ(s.eigenvalues.size(), 2u);
  EXPECT_EQ(s.eigenvalues[0].value, Scalar(0.0));
  EXPECT_EQ(s.eigenvalues[0].multiplicity, 4);
  EXPECT_LT(std::abs(s.eigenvalues[1].value - Scalar(2.0)), 1e-12);
  EXPECT_EQ(s.eigenvalues[1].multiplicity, 1);
  EXPECT_EQ(s.nonzero_multiplicity(), 1);
}

TEST(Spectrum, NilpotentHasEmptyNonzeroPart) {
  Rng rng(10);
  const Element a = strictly_upper(kSpec23, rng);
  Element power = a;
  for (int k = 1; k < 3; ++k) power = power * a;
  EXPECT_LT(power.max_abs(), 1e-12);
  EXPECT_TRUE(spectrum(a).nonzero_part.empty());
}

TEST(Spectrum, MultiplicitiesSumToOrder) {
  Rng rng(11);
  for (int s = 0; s < 50; ++s) EXPECT_EQ(spectrum(random_element(kSpec23, rng)).total_multiplicity(), 5);
}

TEST(Spectrum, TraceConsistency) {
  Rng rng(12);
  for (int s = 0; s < 100; ++s) {
    const Element a = random_element(kSpec23, rng);
    Scalar sum = 0.0;
    for (const auto& v : spectrum(a).nonzero_part) sum += v.value * static_cast<double>(v.multiplicity);
    EXPECT_LT(std::abs(sum - trace(a)), 1e-9 * (1.0 + largest_singular_value(a)));
  }
}

TEST(Spectrum, ZeroIsInSpectrumIffSomeBlockSingular) {
  Rng rng(13);
  const Element invertible = random_element(kSpec23, rng);
  const auto s1 = spectrum(invertible);
  EXPECT_EQ(s1.nonzero_multiplicity(), 5);
  const Element singular = random_element_with_ranks(kSpec23, {2, 2}, rng);
  EXPECT_EQ(spectrum(singular).nonzero_multiplicity(), 4);
}

TEST(Spectrum, JacobsonLemma) {
  Rng rng(14);
  auto sorted_values = [](const SpectrumReport& s) {
    std::vector<std::pair<Scalar, int>> v;
    for (const auto& e : s.nonzero_part) v.emplace_back(e.value, e.multiplicity);
    return v;
  };
  for (int s = 0; s < 100; ++s) {
    const Element x = random_element_with_ranks(kSpec23, {1, 2}, rng);
    const Element y = random_element(kSpec23, rng);
    const auto a = sorted_values(spectrum(x * y, 1e-8));
    const auto b = sorted_values(spectrum(y * x, 1e-8));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].second, b[k].second);
      EXPECT_LT(std::abs(a[k].first - b[k].first), 1e-7 * (1.0 + std::abs(a[k].first)));
    }
  }
}

TEST(Riesz, DiagonalExample) {
  const Element p = riesz_projection(diag_2_0(), 2.0);
  EXPECT_LT(max_abs_diff(p, Element::canonical_projection(kSpec23, 0)), 1e-12);
  EXPECT_EQ(rank(p), 1);
}

TEST(Riesz, IdentityGivesIdentity) {
  const Element p = riesz_projection(Element::identity(kSpec23), 1.0);
  EXPECT_LT(max_abs_diff(p, Element::identity(kSpec23)), 1e-12);
}

TEST(Riesz, NilpotentHasNoSpectralValue) {
  Rng rng(15);
  try {
    riesz_projection(strictly_upper(kSpec23, rng), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoSuchSpectralValue);
  }
}

TEST(Riesz, ContourTooTight) {
  Matrix b = Matrix::Zero(2, 2);
  b(0, 0) = 1.0;
  b(1, 1) = 1.0 + 3e-9;
  const AlgebraSpec spec({2});
  try {
    riesz_projection(Element(spec, {b}), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ContourTooTight);
  }
}

TEST(Riesz, ProjectionsAreOrthogonalCommutingIdempotents) {
  Rng rng(16);
  const std::vector<std::vector<Scalar>> eig{{1.0, Scalar(0.0, 2.0)}, {1.0, -1.5, 0.0}};
  for (int s = 0; s < 20; ++s) {
    const Element a = diagonalizable(kSpec23, eig, rng);
    const Element p1 = riesz_projection(a, 1.0);
    const Element p2 = riesz_projection(a, Scalar(0.0, 2.0));
    const Element p3 = riesz_projection(a, -1.5);
    for (const Element* p : {&p1, &p2, &p3}) {
      EXPECT_LT(max_abs_diff(*p * *p, *p), 1e-9);
      EXPECT_LT(max_abs_diff(*p * a, a * *p), 1e-9);
    }
    EXPECT_LT((p1 * p2).max_abs(), 1e-9);
    EXPECT_LT((p2 * p3).max_abs(), 1e-9);
    EXPECT_EQ(rank(p1), 2);
    EXPECT_EQ(rank(p1) + rank(p2) + rank(p3), spectrum(a).nonzero_multiplicity());
    EXPECT_LT(max_abs_diff(p1, oracle::eigenprojection(a, 1.0, 1e-6)), 1e-8);
  }
}

TEST(SeparatingElement, MatrixUnitExample) {
  const AlgebraSpec spec({2});
  const Element b = Element::matrix_unit(spec, 0, 0, 0);
  const Element a1 = Element::matrix_unit(spec, 0, 0, 1);
  const Element y = separating_element(b, {a1});
  EXPECT_LT(std::abs(trace(b * y) - Scalar(1.0)), 1e-12);
  EXPECT_LT(std::abs(trace(a1 * y)), 1e-12);
  EXPECT_LT(max_abs_diff(y, b), 1e-12);
}

TEST(SeparatingElement, NoConstraints) {
  const Element p1 = Element::canonical_projection(kSpec23, 0);
  EXPECT_LT(max_abs_diff(separating_element(p1, {}), p1), 1e-12);
}

TEST(SeparatingElement, Degenerate) {
  const Element p1 = Element::canonical_projection(kSpec23, 0);
  try {
    separating_element(p1, {p1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DependentInputs);
  }
  try {
    separating_element(Element::identity(kSpec23), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRankOne);
  }
}

TEST(SeparatingElement, RandomRankOneFamilies) {
  Rng rng(17);
  for (int s = 0; s < 30; ++s) {
    std::vector<Element> others;
    for (int k = 0; k < 3; ++k) others.push_back(random_element_with_ranks(kSpec23, {k == 0 ? 1 : 0, k == 0 ? 0 : 1}, rng));
    const Element b = random_element_with_ranks(kSpec23, {0, 1}, rng);
    const Element y = separating_element(b, others);
    EXPECT_GT(std::abs(trace(b * y)), 0.5);
    for (const auto& a : others) {
      EXPECT_LT(std::abs(trace(a * y)), 1e-9);
      // a y is a rank-one nilpotent (or numerically zero), so its computed
      // eigenvalues are only zero to about sqrt(eps) of ||a|| ||y||.
      const double scale = largest_singular_value(a) * largest_singular_value(y);
      for (const auto& v : spectrum(a * y).eigenvalues) EXPECT_LT(std::abs(v.value), 1e-6 * scale);
    }
    EXPECT_FALSE(spectrum(b * y).nonzero_part.empty());
  }
}
