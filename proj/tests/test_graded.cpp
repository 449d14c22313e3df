#include <gtest/gtest.h>

#include <random>

#include "ctoric/corpus.hpp"
#include "ctoric/graded.hpp"
#include "ctoric/slice.hpp"
#include "oracles.hpp"

using namespace ctoric;

namespace {

IntVector iv(std::initializer_list<long long> xs) { return to_int_vector(xs); }

Monomial mono(std::initializer_list<unsigned> e) { return {std::vector<unsigned>(e)}; }

Polynomial poly(std::initializer_list<std::pair<Monomial, long long>> terms) {
  Polynomial p;
  for (const auto& [m, c] : terms) add_term(p, m, c);
  return p;
}

struct Built {
  ConeSpec normalized;
  FaceComplex nerve;
};

Built build(const ConeSpec& c) {
  NormalizationResult n = normalize(c);
  return {n.cone, nerve(slice(n.cone))};
}

ConeSpec corpus_cone(const std::string& name) {
  for (const auto& c : base_corpus())
    if (c.file == name) return c.cone;
  throw std::runtime_error("no corpus cone " + name);
}

std::vector<oracle::Exponents> exponents_of(const std::vector<Monomial>& gens) {
  std::vector<oracle::Exponents> out;
  for (const auto& g : gens) out.push_back(g.exponents);
  return out;
}

RingPresentation with_forms(const Built& b, std::size_t count) {
  RingPresentation p{b.nerve.facet_count, stanley_reisner(b.nerve), {}};
  auto forms = linear_forms(b.normalized.normals, b.normalized.dim);
  p.linear_generators.assign(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(count));
  return p;
}

}  // namespace

TEST(Polynomial, Rendering) {
  EXPECT_EQ(to_string(poly({{mono({0, 0, 1, 0}), 1}, {mono({0, 0, 0, 1}), -1}})), "x3 - x4");
  EXPECT_EQ(to_string(poly({{mono({0, 0, 1, 1}), 1}})), "x3*x4");
  EXPECT_EQ(to_string(poly({{mono({2, 0}), 2}, {mono({1, 1}), -3}})), "2*x1^2 - 3*x1*x2");
  EXPECT_EQ(to_string(Polynomial{}), "0");
  EXPECT_EQ(to_string(poly({{mono({0, 0}), -5}})), "-5");
}

TEST(Polynomial, GrlexOrder) {
  EXPECT_TRUE(grlex_greater(mono({1, 0, 0}), mono({0, 1, 0})));
  EXPECT_TRUE(grlex_greater(mono({0, 0, 2}), mono({1, 0, 0})));
  EXPECT_TRUE(grlex_greater(mono({1, 0, 1}), mono({0, 2, 0})));
  EXPECT_FALSE(grlex_greater(mono({1, 1}), mono({1, 1})));
}

TEST(StanleyReisner, Examples) {
  auto sq = stanley_reisner(build(corpus_cone("square")).nerve);
  EXPECT_EQ(sq, (std::vector<Monomial>{mono({1, 0, 1, 0}), mono({0, 1, 0, 1})}));
  EXPECT_EQ(stanley_reisner(build(corpus_cone("orthant")).nerve), std::vector<Monomial>{mono({1, 1, 1})});
  EXPECT_EQ(stanley_reisner(build(corpus_cone("cube")).nerve),
            (std::vector<Monomial>{mono({1, 0, 0, 1, 0, 0}), mono({0, 1, 0, 0, 1, 0}), mono({0, 0, 1, 0, 0, 1})}));
}

TEST(StanleyReisner, GeneratorsArePairwiseNonDividing) {
  for (const auto& c : base_corpus()) {
    auto gens = stanley_reisner(build(c.cone).nerve);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (unsigned e : gens[i].exponents) EXPECT_LE(e, 1u);
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (i != j) {
          EXPECT_FALSE(gens[i].divides(gens[j])) << c.file;
        }
      }
    }
  }
}

TEST(LinearForms, Examples) {
  auto sq = linear_forms(corpus_cone("square").normals, 3);
  EXPECT_EQ(to_string(linear_polynomial(sq[0])), "x1 - x3");
  EXPECT_EQ(to_string(linear_polynomial(sq[1])), "x2 - x4");
  EXPECT_EQ(to_string(linear_polynomial(sq[2])), "x3 + x4");
  auto orth = linear_forms(build(corpus_cone("orthant")).normalized.normals, 3);
  EXPECT_EQ(to_string(linear_polynomial(orth[0])), "x1 - x2");
  EXPECT_EQ(to_string(linear_polynomial(orth[1])), "x2 - x3");
  EXPECT_EQ(to_string(linear_polynomial(orth[2])), "x3");
  auto cube = linear_forms(corpus_cone("cube").normals, 4);
  EXPECT_EQ(cube[3], iv({0, 0, 0, 1, 1, 1}));
}

TEST(QuotientBasis, OrthantIsTruncatedPolynomialRing) {
  RingPresentation p{3, {mono({1, 1, 1})}, {iv({1, -1, 0}), iv({0, 1, -1})}};
  GradedQuotient q = graded_quotient(p, 3);
  EXPECT_EQ(q.ranks(), (std::vector<std::size_t>{1, 1, 1, 0}));
  EXPECT_TRUE(q.torsion_free());
}

TEST(QuotientBasis, SquareIsProductOfSpheres) {
  RingPresentation p{4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})}, {iv({1, 0, -1, 0}), iv({0, 1, 0, -1})}};
  GradedQuotient q = graded_quotient(p, 3);
  EXPECT_EQ(q.ranks(), (std::vector<std::size_t>{1, 2, 1, 0}));
  EXPECT_TRUE(q.torsion_free());
  EXPECT_TRUE(q.at(1).monomial_basis);
  // a^2 = 0 with a = x3: x3^2 ~ x1*x3 = 0.
  EXPECT_TRUE(q.at(2).reduce(poly({{mono({0, 0, 2, 0}), 1}})).is_zero());
}

TEST(QuotientBasis, FreePolynomialRing) {
  RingPresentation p{2, {}, {}};
  EXPECT_EQ(quotient_basis(p, 2).rank(), 3u);
  EXPECT_EQ(quotient_basis(p, 0).rank(), 1u);
}

TEST(QuotientBasis, DetectsTorsion) {
  // Z[x1,x2]/<2 x1>: degree 1 is Z + Z/2.
  RingPresentation p{2, {}, {iv({2, 0})}};
  QuotientDegree q = quotient_basis(p, 1);
  EXPECT_EQ(q.rank(), 1u);
  EXPECT_EQ(q.divisors, iv({2}));
  ASSERT_EQ(q.torsion_generators.size(), 1u);
  EXPECT_EQ(to_string(q.torsion_generators[0]), "x1");
  QuotientElement e = q.reduce(poly({{mono({1, 0}), 3}, {mono({0, 1}), 5}}));
  EXPECT_EQ(e.torsion, iv({1}));
  EXPECT_EQ(e.free, iv({5}));
}

TEST(QuotientBasis, RejectsInhomogeneousInput) {
  QuotientDegree q = quotient_basis(RingPresentation{2, {}, {}}, 1);
  EXPECT_THROW(q.reduce(poly({{mono({2, 0}), 1}})), AlgebraError);
}

TEST(QuotientBasis, RanksMatchBruteForceOverRandomPresentations) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 3 + trial % 3;
    RingPresentation p{m, {}, {}};
    if (trial % 2) p.monomial_generators.push_back(Monomial::squarefree(m, {0, 1}));
    for (std::size_t f = 0; f < 1 + static_cast<std::size_t>(trial % 2); ++f) {
      IntVector form(m);
      for (auto& x : form) x = coef(rng);
      p.linear_generators.push_back(form);
    }
    for (unsigned d = 0; d <= 3; ++d)
      EXPECT_EQ(quotient_basis(p, d).rank(),
                oracle::quotient_rank(m, exponents_of(p.monomial_generators), p.linear_generators, d))
          << "trial " << trial << " degree " << d;
  }
}

TEST(QuotientBasis, ReductionIsLinearAndIdempotent) {
  Built b = build(corpus_cone("cube"));
  GradedQuotient q = graded_quotient(with_forms(b, 4), 3);
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (unsigned d = 1; d <= 3; ++d) {
    const auto& qd = q.at(d);
    for (int t = 0; t < 20; ++t) {
      Polynomial p1, p2;
      for (const auto& m : oracle::monomials(6, d)) {
        add_term(p1, Monomial{m}, coef(rng));
        add_term(p2, Monomial{m}, coef(rng));
      }
      QuotientElement r1 = qd.reduce(p1);
      EXPECT_EQ(qd.reduce(qd.lift(r1)), r1);
      QuotientElement sum = qd.reduce(p1 + p2), r2 = qd.reduce(p2);
      for (std::size_t i = 0; i < sum.free.size(); ++i) EXPECT_EQ(sum.free[i], r1.free[i] + r2.free[i]);
      for (std::size_t i = 0; i < sum.torsion.size(); ++i)
        EXPECT_EQ(sum.torsion[i], (r1.torsion[i] + r2.torsion[i]) % qd.divisors[i]);
    }
  }
}

TEST(QuotientBasis, BasisElementsReduceToUnitVectors) {
  for (const auto& c : base_corpus()) {
    if (c.negative) continue;
    Built b = build(c.cone);
    GradedQuotient q = graded_quotient(with_forms(b, b.normalized.dim), b.normalized.dim);
    for (unsigned d = 0; d <= q.max_degree(); ++d) {
      const auto& qd = q.at(d);
      EXPECT_TRUE(qd.monomial_basis) << c.file << " degree " << d;
      for (std::size_t j = 0; j < qd.rank(); ++j) {
        QuotientElement e = qd.reduce(qd.basis[j]);
        QuotientElement want = qd.zero();
        want.free[j] = 1;
        EXPECT_EQ(e, want) << c.file << " degree " << d;
      }
      for (std::size_t t = 0; t < qd.torsion_generators.size(); ++t) {
        QuotientElement e = qd.reduce(qd.torsion_generators[t]);
        QuotientElement want = qd.zero();
        want.torsion[t] = 1;
        EXPECT_EQ(e, want) << c.file << " degree " << d;
      }
    }
  }
}

TEST(FaceRingHilbert, Examples) {
  FaceComplex sq = build(corpus_cone("square")).nerve;
  EXPECT_EQ(face_ring_hilbert(sq, 2), 8);
  EXPECT_EQ(face_ring_hilbert(sq, 3), 12);
  EXPECT_EQ(face_ring_hilbert(sq, 0), 1);
  // 10 degree-2 monomials in 4 variables, minus x1x3 and x2x4.
  EXPECT_EQ(oracle::quotient_rank(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}, {}, 2), 8u);
}

TEST(FaceRingHilbert, MatchesQuotientRanksUpToTwiceTheDimension) {
  for (const auto& c : base_corpus()) {
    Built b = build(c.cone);
    RingPresentation p{b.nerve.facet_count, stanley_reisner(b.nerve), {}};
    const auto bound = static_cast<unsigned>(2 * c.cone.dim);
    for (unsigned d = 0; d <= bound; ++d) {
      const std::size_t brute = oracle::quotient_rank(p.variables, exponents_of(p.monomial_generators), {}, d);
      EXPECT_EQ(standard_monomials(p, d).size(), brute) << c.file << " degree " << d;
      EXPECT_EQ(face_ring_hilbert(b.nerve, d), BigInt(brute)) << c.file << " degree " << d;
    }
  }
}

TEST(HVector, Examples) {
  EXPECT_EQ(h_vector(build(corpus_cone("orthant")).nerve, 2), (std::vector<BigInt>{1, 1, 1}));
  EXPECT_EQ(h_vector(build(corpus_cone("square")).nerve, 2), (std::vector<BigInt>{1, 2, 1}));
  FaceComplex cube = build(corpus_cone("cube")).nerve;
  EXPECT_EQ(cube.f_vector, (std::vector<std::size_t>{1, 6, 12, 8}));
  EXPECT_EQ(h_vector(cube, 3), (std::vector<BigInt>{1, 3, 3, 1}));
  EXPECT_EQ(h_vector(build(corpus_cone("hexagon")).nerve, 2), (std::vector<BigInt>{1, 4, 1}));
}

TEST(HVector, ToricRanksEqualHVectorForDelzantSlices) {
  for (const auto& c : twisted_corpus(kCorpusSeed, 2)) {
    if (c.negative) continue;
    Built b = build(c.cone);
    const std::size_t n = c.cone.dim;
    GradedQuotient q = graded_quotient(with_forms(b, n - 1), static_cast<unsigned>(n));
    auto h = h_vector(b.nerve, n - 1);
    for (std::size_t d = 0; d < n; ++d) EXPECT_EQ(BigInt(q.at(static_cast<unsigned>(d)).rank()), h[d]) << c.file;
    EXPECT_EQ(q.at(static_cast<unsigned>(n)).rank(), 0u) << c.file;
    EXPECT_TRUE(q.torsion_free()) << c.file;
  }
}

TEST(MultiplicationMap, OrthantKernelsAndCokernels) {
  RingPresentation p{3, {mono({1, 1, 1})}, {iv({1, -1, 0}), iv({0, 1, -1})}};
  GradedQuotient q = graded_quotient(p, 3);
  MultiplicationMap mm = multiplication_map(q, iv({0, 0, 1}));
  std::vector<std::size_t> kernel_ranks;
  for (const auto& k : mm.kernels) kernel_ranks.push_back(k.size());
  EXPECT_EQ(kernel_ranks, (std::vector<std::size_t>{0, 0, 1}));
  // Nothing maps into degree 0, so its cokernel is all of Z; t hits t and t^2.
  EXPECT_EQ(q.at(0).rank(), 1u);
  EXPECT_EQ(mm.cokernel_ranks[0], 0u);
  EXPECT_EQ(mm.cokernel_ranks[1], 0u);
}

TEST(MultiplicationMap, SquareKernelIsADifference) {
  RingPresentation p{4, {mono({1, 0, 1, 0}), mono({0, 1, 0, 1})}, {iv({1, 0, -1, 0}), iv({0, 1, 0, -1})}};
  GradedQuotient q = graded_quotient(p, 3);
  MultiplicationMap mm = multiplication_map(q, iv({0, 0, 1, 1}));
  ASSERT_EQ(mm.kernels[1].size(), 1u);
  Polynomial rep;
  for (std::size_t j = 0; j < q.at(1).rank(); ++j) rep = rep + scaled(q.at(1).basis[j], mm.kernels[1][0][j]);
  // Up to sign the kernel is a - b with a = x3, b = x4.
  Polynomial want = poly({{mono({0, 0, 1, 0}), 1}, {mono({0, 0, 0, 1}), -1}});
  EXPECT_TRUE(q.at(1).reduce(rep) == q.at(1).reduce(want) || q.at(1).reduce(rep) == q.at(1).reduce(scaled(want, -1)));
  EXPECT_EQ(mm.kernels[2].size(), q.at(2).rank());
}

TEST(MultiplicationMap, CubeDegreeOneMatrixHasDivisorTwo) {
  Built b = build(corpus_cone("cube"));
  GradedQuotient q = graded_quotient(with_forms(b, 3), 4);
  MultiplicationMap mm = multiplication_map(q, linear_forms(b.normalized.normals, 4)[3]);
  EXPECT_EQ(elementary_divisors(mm.matrices[1]), iv({1, 1, 2}));
  EXPECT_EQ(abs_value(determinant(mm.matrices[1])), 2);
  // Hand computation: columns (1,1,0),(1,0,1),(0,1,1) in the basis (ab, ac, bc).
  EXPECT_EQ(oracle::elementary_divisors(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}), iv({1, 1, 2}));
  EXPECT_EQ(mm.cokernel_divisors[1], iv({2}));
}

TEST(MultiplicationMap, MatrixEntriesReproduceReduction) {
  for (const auto& c : base_corpus()) {
    if (c.negative) continue;
    Built b = build(c.cone);
    const std::size_t n = c.cone.dim;
    GradedQuotient q = graded_quotient(with_forms(b, n - 1), static_cast<unsigned>(n));
    IntVector e = linear_forms(b.normalized.normals, n)[n - 1];
    MultiplicationMap mm = multiplication_map(q, e);
    for (unsigned d = 0; d < n; ++d) {
      for (std::size_t j = 0; j < q.at(d).rank(); ++j)
        EXPECT_EQ(mm.matrices[d].col(j), q.at(d + 1).reduce(linear_polynomial(e) * q.at(d).basis[j]).free) << c.file;
      for (const auto& k : mm.kernels[d]) {
        IntVector img = mm.matrices[d] * k;
        EXPECT_TRUE(std::all_of(img.begin(), img.end(), [](const BigInt& x) { return x == 0; })) << c.file;
      }
    }
  }
}
