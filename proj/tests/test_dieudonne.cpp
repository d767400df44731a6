#include <gtest/gtest.h>

#include <random>

#include "udm/strata.hpp"

using namespace udm;
using namespace udm::detail;

namespace {

FVector unit(std::size_t i, std::size_t n = 6) {
  FVector v(n, 0);
  v[i] = 1;
  return v;
}

Subspace span_of(const FieldPtr& k, std::initializer_list<std::size_t> idx) {
  std::vector<FVector> vs;
  for (auto i : idx) vs.push_back(unit(i));
  return Subspace::span(k, 6, vs);
}

Subspace random_subspace(const FieldPtr& k, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<FieldElem> pick(0, k->order() - 1);
  std::vector<FVector> vs;
  for (std::size_t i = 0; i < dim; ++i) {
    FVector v(6);
    for (auto& x : v) x = pick(rng);
    vs.push_back(v);
  }
  return Subspace::span(k, 6, vs);
}

std::vector<DieudonneSpace> shipped(const FieldPtr& k) {
  return {make_mu_ordinary(k), make_gss_braid(k), make_ssp(k)};
}

}  // namespace

TEST(Kernel, BraidModuleLieAlgebra) {
  auto k = Field::make(3, 2);
  const DieudonneSpace m = make_gss_braid(k);
  EXPECT_EQ(m.kernel_V(), span_of(k, {e1, e2, f3}));
  EXPECT_EQ(m.apply_V(unit(e3)), unit(f1));
  EXPECT_EQ(m.apply_V(unit(f1)), unit(e2));
  EXPECT_EQ(m.apply_V(unit(f2)), unit(e3));
  for (auto i : {e1, e2, f3}) EXPECT_EQ(m.apply_V(unit(i)), FVector(6, 0));
}

TEST(Kernel, SuperspecialKernels) {
  for (int deg : {2, 4}) {
    auto k = Field::make(3, deg);
    const DieudonneSpace m = make_ssp(k);
    EXPECT_EQ(m.kernel_V(), span_of(k, {e1, e2, f3}));
    EXPECT_EQ(m.kernel_F(), m.kernel_V());
    EXPECT_EQ(m.kernel_F().intersect(m.kernel_V()).dim(), 3u);
  }
}

TEST(Kernel, ZeroMapHasFullKernel) {
  auto k = Field::make(5, 2);
  const DieudonneSpace z(k, standard_grading(), FMatrix(6, 6, 0), FMatrix(6, 6, 0));
  EXPECT_EQ(z.kernel_F(), z.whole());
  EXPECT_EQ(z.kernel_V(), z.whole());
}

TEST(Kernel, RankNullity) {
  for (int p : {3, 5})
    for (int deg : {2, 4}) {
      auto k = Field::make(p, deg);
      for (const auto& m : shipped(k))
        for (Op op : {Op::F, Op::V}) EXPECT_EQ(m.kernel(op).dim() + m.image(op, m.whole()).dim(), 6u);
    }
}

TEST(Kernel, SemilinearKernelIsAnnihilatedByTheMap) {
  auto k = Field::make(3, 4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<FieldElem> pick(0, k->order() - 1);
  FMatrix a(6, 6, 0);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = pick(rng);
  const DieudonneSpace m(k, standard_grading(), a, a);
  for (Op op : {Op::F, Op::V}) {
    const Subspace ker = m.kernel(op);
    EXPECT_EQ(ker.dim(), 3u);
    for (const auto& v : ker.vectors()) EXPECT_EQ(m.apply(op, v), FVector(6, 0));
  }
}

TEST(Twist, IdentityCases) {
  auto k = Field::make(3, 4);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Subspace s = random_subspace(k, 1 + t % 5, rng);
    EXPECT_EQ(s.twist(0), s);
    EXPECT_EQ(s.twist(4), s);
    EXPECT_EQ(s.twist(3).twist(-3), s);
    // sigma^2 is the entrywise p^2 power.
    std::vector<FVector> powered;
    for (const auto& v : s.vectors()) {
      FVector w = v;
      for (auto& x : w) x = k->pow(x, 9);
      powered.push_back(w);
    }
    EXPECT_EQ(s.twist(2), Subspace::span(k, 6, powered));
  }
}

TEST(Twist, OddTwistFlipsTheGrading) {
  auto k = Field::make(3, 2);
  const DieudonneSpace m = make_gss_braid(k);
  EXPECT_EQ(m.twist(1).grading(), flip(m.grading()));
  EXPECT_EQ(m.twist(2).grading(), m.grading());
  EXPECT_TRUE(m.twist(1).check_axioms().ok());
}

TEST(Annihilator, DimensionsAndDoubleAnnihilator) {
  for (int deg : {2, 4}) {
    auto k = Field::make(3, deg);
    std::mt19937_64 rng(17);
    for (const auto& m : shipped(k)) {
      EXPECT_EQ(m.annihilator(m.zero()), m.whole());
      for (int t = 0; t < 10; ++t) {
        const Subspace s = random_subspace(k, 1 + t % 5, rng);
        EXPECT_EQ(m.annihilator(s).dim(), 6 - s.dim());
        EXPECT_EQ(m.annihilator(m.annihilator(s)), s);
        EXPECT_EQ(m.annihilator(m.annihilator(s, 1), 1), s.twist(2));
      }
    }
  }
}

TEST(Annihilator, LieAlgebraIsIsotropic) {
  auto k = Field::make(3, 2);
  const DieudonneSpace m = make_ssp(k);
  const Subspace h = span_of(k, {e2, f3});
  EXPECT_TRUE(m.annihilator(h).contains(h));
  for (const auto& x : h.vectors())
    for (const auto& y : h.vectors()) EXPECT_EQ(m.pair(x, y), 0u);
  for (const auto& n : shipped(k)) EXPECT_TRUE(n.is_isotropic(n.kernel_V()));
}

TEST(Subspace, SumIntersectDimensionFormula) {
  auto k = Field::make(5, 2);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const Subspace a = random_subspace(k, 1 + t % 4, rng), b = random_subspace(k, 1 + (t / 4) % 4, rng);
    EXPECT_EQ(a.sum(b).dim() + a.intersect(b).dim(), a.dim() + b.dim());
    EXPECT_EQ(a.sum(Subspace(k, 6)), a);
    EXPECT_TRUE(a.sum(b).contains(a));
    EXPECT_TRUE(b.contains(a.intersect(b)));
  }
}

TEST(Subspace, EchelonFormIsCanonical) {
  auto k = Field::make(3, 4);
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<FieldElem> pick(1, k->order() - 1);
  for (int t = 0; t < 20; ++t) {
    const Subspace s = random_subspace(k, 3, rng);
    std::vector<FVector> other;
    const auto vs = s.vectors();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      FVector w(6, 0);
      for (std::size_t j = 0; j < vs.size(); ++j) {
        const FieldElem c = (i == j) ? pick(rng) : (j < i ? pick(rng) : 0);
        for (std::size_t l = 0; l < 6; ++l) w[l] = k->add(w[l], k->mul(c, vs[j][l]));
      }
      other.push_back(w);
    }
    EXPECT_EQ(Subspace::span(k, 6, other).basis(), s.basis());
  }
}

TEST(Subspace, AlphaPPartOfBraidModule) {
  auto k = Field::make(3, 2);
  const DieudonneSpace m = make_gss_braid(k);
  EXPECT_EQ(m.kernel_F().intersect(m.kernel_V()), span_of(k, {e2}));
}

TEST(Axioms, ShippedModulesPass) {
  for (int p : {3, 5})
    for (int deg : {2, 4}) {
      auto R = GaloisRing::make(Field::make(p, deg), 2);
      for (const auto& L : {make_mu_ordinary_lattice(R), make_gss_braid_lattice(R), make_ssp_lattice(R)}) {
        EXPECT_TRUE(L.check_axioms().ok());
        EXPECT_TRUE(L.reduce().check_axioms().ok());
      }
    }
}

TEST(Axioms, AdjunctionOnBasisPairs) {
  auto k = Field::make(5, 4);
  for (const auto& m : shipped(k))
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        EXPECT_EQ(m.pair(m.apply_F(unit(i)), unit(j)), k->frob(m.pair(unit(i), m.apply_V(unit(j)))));
}

TEST(Axioms, SuperspecialLatticeHasFVEqualP) {
  auto R = GaloisRing::make(Field::make(3, 2), 2);
  const DieudonneLattice L = make_ssp_lattice(R);
  const GRElem p = R->from_int(3);
  for (std::size_t i = 0; i < 6; ++i) {
    GRVector x(6, R->zero());
    x[i] = R->one();
    GRVector px(6, R->zero());
    px[i] = p;
    EXPECT_EQ(L.apply_F(L.apply_V(x)), px);
    EXPECT_EQ(L.apply_V(L.apply_F(x)), px);
  }
  // F e1 = -p f1 on the superspecial lattice.
  GRVector x(6, R->zero());
  x[e1] = R->one();
  GRVector want(6, R->zero());
  want[f1] = R->neg(p);
  EXPECT_EQ(L.apply_F(x), want);
}

TEST(Axioms, GradingPreservingFIsRejected) {
  auto k = Field::make(3, 2);
  const DieudonneSpace m = make_gss_braid(k);
  FMatrix f(6, 6, 0);
  f(e1, e2) = 1;
  const DieudonneSpace bad(k, m.grading(), f, FMatrix(6, 6, 0));
  const auto rep = bad.check_axioms();
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.mentions("grading"));
}

TEST(Axioms, BrokenAdjunctionIsReported) {
  auto k = Field::make(3, 2);
  const DieudonneSpace m = make_gss_braid(k);
  FMatrix g = m.pairing();
  g(e1, f1) = k->mul(g(e1, f1), 2);
  g(f1, e1) = k->neg(g(e1, f1));
  EXPECT_TRUE(m.with_pairing(g).check_axioms().mentions("adjunction"));
}

TEST(ChangeOfBasis, KernelsTransportCorrectly) {
  auto R = GaloisRing::make(Field::make(3, 4), 2);
  const Field& k = R->residue_field();
  std::mt19937_64 rng(31);
  const DieudonneLattice L = make_gss_braid_lattice(R);
  for (int t = 0; t < 10; ++t) {
    std::uniform_int_distribution<FieldElem> pick(0, k.order() - 1);
    FMatrix g(6, 6, 0);
    do {
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
          if (L.grading()[i] == L.grading()[j]) g(i, j) = pick(rng);
    } while (!inverse(k, g));
    const DieudonneSpace m = L.reduce(), m2 = m.change_basis(g);
    EXPECT_TRUE(m2.check_axioms().ok());
    EXPECT_EQ(m2.kernel_V().image(g), m.kernel_V());
    EXPECT_EQ(m2.kernel_F().image(g), m.kernel_F());
  }
}

TEST(Lattice, ReductionMatchesSpace) {
  auto R = GaloisRing::make(Field::make(5, 2), 2);
  const DieudonneLattice L = make_mu_ordinary_lattice(R);
  const DieudonneSpace m = L.reduce();
  for (std::size_t i = 0; i < 6; ++i) {
    GRVector x(6, R->zero());
    x[i] = R->one();
    EXPECT_EQ(reduce_vec(*R, L.apply_F(x)), m.apply_F(unit(i)));
    EXPECT_EQ(reduce_vec(*R, L.apply_V(x)), m.apply_V(unit(i)));
  }
}
