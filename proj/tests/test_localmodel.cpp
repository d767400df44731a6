#include <gtest/gtest.h>

#include <random>

#include "udm/localmodel.hpp"

using namespace udm;

namespace {

LocalModelData model(int p) { return reduce(standard_model(GaloisRing::make(Field::make(p, 2), 2))); }

// Span of standard basis vectors, 1-indexed.
Subspace coord(const LocalModelData& lm, std::initializer_list<int> idx) {
  std::vector<FVector> vs;
  for (int i : idx) {
    FVector v(6, 0);
    v[i - 1] = 1;
    vs.push_back(v);
  }
  return Subspace::span(lm.k, 6, vs);
}

FMatrix random_graded(const Field& k, const Grading& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<FieldElem> pick(0, k.order() - 1);
  while (true) {
    FMatrix m(6, 6, 0);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (g[i] == g[j]) m(i, j) = pick(rng);
    if (inverse(k, m)) return m;
  }
}

}  // namespace

TEST(StandardModel, IdentityHolds) {
  for (int p : {3, 5, 7})
    for (int deg : {2, 4}) EXPECT_TRUE(standard_identity_holds(standard_model(GaloisRing::make(Field::make(p, deg), 2))));
}

TEST(StandardModel, ReducedDataHasRankDrops) {
  const LocalModelData lm = model(3);
  EXPECT_EQ(rank(*lm.k, lm.B), 6u);
  EXPECT_EQ(rank(*lm.k, lm.Bp), 4u);
  EXPECT_EQ(rank(*lm.k, lm.D), 4u);
}

TEST(Invariants, WorkedExamples) {
  for (int p : {3, 5}) {
    const LocalModelData lm = model(p);
    const HodgePair a{coord(lm, {1, 3, 5}), coord(lm, {2, 3, 5})};
    const HodgePair b{coord(lm, {1, 3, 5}), coord(lm, {2, 3, 4})};
    EXPECT_TRUE(check_hodge_pair(lm, a).ok());
    EXPECT_TRUE(check_hodge_pair(lm, b).ok());
    EXPECT_EQ(invariants_from_hodge(lm, a), (InvariantTriple{1, 2, 2}));
    EXPECT_EQ(invariants_from_hodge(lm, b), (InvariantTriple{2, 2, 2}));
    for (const auto& hp : {a, b}) {
      EXPECT_EQ(tangent_dim(lm, hp, DeformationTarget::Y), 3);
      EXPECT_EQ(tangent_dim(lm, hp, DeformationTarget::X), 2);
      EXPECT_EQ(tangent_dim(lm, hp, DeformationTarget::XTilde), 3);
    }
  }
}

TEST(Invariants, AlphaZeroWhenDIsInjectiveOnOmegaPrime) {
  const LocalModelData lm = model(3);
  // D kills the 2nd and 4th basis vectors only.
  const HodgePair hp{coord(lm, {1, 3, 5}), coord(lm, {1, 3, 5})};
  ASSERT_TRUE(check_hodge_pair(lm, hp).ok());
  EXPECT_EQ(invariants_from_hodge(lm, hp), (InvariantTriple{0, 2, 1}));
}

TEST(Invariants, RejectsBadPairs) {
  const LocalModelData lm = model(3);
  EXPECT_FALSE(check_hodge_pair(lm, {coord(lm, {1, 2, 3}), coord(lm, {1, 3, 6})}).ok());
  EXPECT_FALSE(check_hodge_pair(lm, {coord(lm, {1, 4, 6}), coord(lm, {1, 3, 6})}).ok());
  EXPECT_THROW(invariants_from_hodge(lm, {coord(lm, {1, 2, 3}), coord(lm, {1, 3, 6})}), std::invalid_argument);
}

TEST(LocalRings, EightRows) {
  const auto rows = local_ring_rows();
  ASSERT_EQ(rows.size(), 8u);
  for (int p : {3, 5}) {
    const LocalModelData lm = model(p);
    for (const auto& row : rows) {
      const auto hp = canonical_hodge_pair(lm, row.invariants);
      ASSERT_TRUE(hp.has_value()) << row.name;
      EXPECT_EQ(invariants_from_hodge(lm, *hp), row.invariants) << row.name;
      EXPECT_EQ(tangent_dim(lm, *hp, DeformationTarget::Y), row.tangent_y) << row.name;
      EXPECT_EQ(tangent_dim(lm, *hp, DeformationTarget::XTilde), row.tangent_xtilde) << row.name;
      EXPECT_EQ(tangent_dim(lm, *hp, DeformationTarget::X), 2) << row.name;
    }
  }
}

TEST(Transport, InvariantsAndTangentsDoNotDependOnBases) {
  const LocalModelData lm = model(3);
  std::mt19937_64 rng(37);
  for (const auto& row : local_ring_rows()) {
    const HodgePair hp = *canonical_hodge_pair(lm, row.invariants);
    for (int t = 0; t < 3; ++t) {
      const FMatrix g1 = random_graded(*lm.k, lm.grading1, rng), g2 = random_graded(*lm.k, lm.grading2, rng);
      const auto [lm2, hp2] = transport(lm, hp, g1, g2);
      ASSERT_TRUE(check_hodge_pair(lm2, hp2).ok());
      EXPECT_EQ(invariants_from_hodge(lm2, hp2), row.invariants);
      for (auto target : {DeformationTarget::X, DeformationTarget::XTilde, DeformationTarget::Y})
        EXPECT_EQ(tangent_dim(lm2, hp2, target), tangent_dim(lm, hp, target)) << target_name(target);
    }
  }
}

TEST(Transport, TorusFixesTheModel) {
  const LocalModelData lm = model(5);
  const Field& k = *lm.k;
  const FMatrix g = standard_torus_element(k, 2, 3, k.primitive());
  const HodgePair hp{coord(lm, {1, 3, 5}), coord(lm, {2, 3, 5})};
  const auto [lm2, hp2] = transport(lm, hp, g, g);
  EXPECT_EQ(lm2.B, lm.B);
  EXPECT_EQ(lm2.Bp, lm.Bp);
  EXPECT_EQ(lm2.D, lm.D);
  EXPECT_EQ(hp2.omega0, hp.omega0);
}

TEST(Points, HodgeFiltrationsGiveTheCovariantInvariants) {
  for (int deg : {2, 4}) {
    auto R = GaloisRing::make(Field::make(3, deg), 2);
    for (const auto& L : {make_mu_ordinary_lattice(R), make_gss_braid_lattice(R), make_ssp_lattice(R)}) {
      for (const auto& r : enumerate_H(L.reduce())) {
        const PointHodgeData pd = hodge_from_point(L, r);
        ASSERT_TRUE(check_hodge_pair(pd.model, pd.hodge).ok());
        InvariantTriple want = invariants_of(r.type);
        want.gamma = r.gamma;
        EXPECT_EQ(invariants_from_hodge(pd.model, pd.hodge), want) << label_name(r.type);
      }
    }
  }
}

TEST(Points, TangentDimensionsMatchTheTable) {
  auto R = GaloisRing::make(Field::make(3, 2), 2);
  const auto rows = local_ring_rows();
  for (const auto& L : {make_mu_ordinary_lattice(R), make_gss_braid_lattice(R), make_ssp_lattice(R)}) {
    const Stratum st = classify_stratum(L.reduce());
    for (const auto& r : enumerate_H(L.reduce())) {
      const PointHodgeData pd = hodge_from_point(L, r);
      const InvariantTriple inv = invariants_from_hodge(pd.model, pd.hodge);
      for (const auto& row : rows) {
        if (row.stratum != st || !(row.invariants == inv)) continue;
        EXPECT_EQ(tangent_dim(pd.model, pd.hodge, DeformationTarget::Y), row.tangent_y) << row.name;
        EXPECT_EQ(tangent_dim(pd.model, pd.hodge, DeformationTarget::XTilde), row.tangent_xtilde) << row.name;
      }
    }
  }
}

TEST(Points, KernelVRuleSwapsTheEtaleAndMultiplicativeRows) {
  auto R = GaloisRing::make(Field::make(3, 2), 2);
  const DieudonneLattice L = make_mu_ordinary_lattice(R);
  for (const auto& r : enumerate_H(L.reduce())) {
    const PointHodgeData pd = hodge_from_point(L, r, HodgeRule::AnnKernelV);
    const InvariantTriple got = invariants_from_hodge(pd.model, pd.hodge);
    const InvariantTriple cov = invariants_of(r.type);
    EXPECT_EQ(got.alpha, cov.beta);
    EXPECT_EQ(got.beta, cov.alpha);
  }
}
