#include <gtest/gtest.h>

#include <random>

#include "udm/quotient.hpp"
#include "udm/strata.hpp"

using namespace udm;

namespace {

RingPtr ring(int p, int deg) { return GaloisRing::make(Field::make(p, deg), 2); }

}  // namespace

TEST(Strata, CanonicalModulesLandInTheirStrata) {
  for (int p : {3, 5, 7})
    for (int deg : {2, 4}) {
      if (p == 7 && deg == 4) continue;
      auto R = ring(p, deg);
      EXPECT_EQ(classify_stratum(make_mu_ordinary_lattice(R).reduce()), Stratum::MuOrdinary);
      EXPECT_EQ(classify_stratum(make_gss_braid_lattice(R).reduce()), Stratum::Gss);
      EXPECT_EQ(classify_stratum(make_ssp_lattice(R).reduce()), Stratum::Ssp);
    }
}

TEST(Strata, ANumberTypes) {
  auto k = Field::make(3, 2);
  EXPECT_EQ(a_number_type(make_mu_ordinary(k)), (SignatureType{1, 0}));
  EXPECT_EQ(a_number_type(make_gss_braid(k)), (SignatureType{1, 0}));
  EXPECT_EQ(a_number_type(make_ssp(k)), (SignatureType{2, 1}));
  for (auto& m : {make_mu_ordinary(k), make_gss_braid(k), make_ssp(k)}) EXPECT_EQ(m.lie_type(), (SignatureType{2, 1}));
}

TEST(Strata, HasseNonvanishingOnlyOnMuOrdinary) {
  auto k = Field::make(5, 2);
  EXPECT_TRUE(hasse_nonzero(make_mu_ordinary(k)));
  EXPECT_FALSE(hasse_nonzero(make_gss_braid(k)));
  EXPECT_FALSE(hasse_nonzero(make_ssp(k)));
}

TEST(Strata, StrataAreInvariantUnderGradedBasisChange) {
  std::mt19937_64 rng(13);
  for (int deg : {2, 4}) {
    auto R = ring(3, deg);
    for (const auto& L : {make_mu_ordinary_lattice(R), make_gss_braid_lattice(R), make_ssp_lattice(R)}) {
      const Stratum want = classify_stratum(L.reduce());
      const SignatureType a = a_number_type(L.reduce());
      for (int t = 0; t < 8; ++t) {
        const DieudonneLattice L2 = L.change_basis(random_graded_basis_change(*R, L.grading(), rng));
        ASSERT_TRUE(L2.check_axioms().ok());
        EXPECT_EQ(classify_stratum(L2.reduce()), want);
        EXPECT_EQ(a_number_type(L2.reduce()), a);
      }
    }
  }
}

TEST(Strata, EvenTwistsPreserveTheStratum) {
  auto k = Field::make(3, 4);
  for (const auto& m : {make_mu_ordinary(k), make_gss_braid(k), make_ssp(k)})
    for (int r : {2, 4}) EXPECT_EQ(classify_stratum(m.twist(r)), classify_stratum(m));
}

TEST(Strata, RejectsWrongSignature) {
  auto k = Field::make(3, 2);
  EXPECT_THROW(classify_stratum(make_gss_braid(k).twist(1)), std::invalid_argument);
  EXPECT_THROW(hasse_nonzero(make_gss_braid(k).twist(1)), std::invalid_argument);
}

TEST(Strata, RescaledPairingKeepsAxioms) {
  auto R = ring(5, 2);
  for (const auto& L : {make_mu_ordinary_lattice(R), make_gss_braid_lattice(R), make_ssp_lattice(R)}) {
    const GRElem c = R->from_int(2);
    const DieudonneLattice L2 = rescale_pairing(L, c);
    EXPECT_TRUE(L2.check_axioms().ok());
    EXPECT_EQ(classify_stratum(L2.reduce()), classify_stratum(L.reduce()));
  }
}

TEST(Strata, ShippedLatticesHaveFVEqualP) {
  auto R = ring(3, 2);
  const GRElem p = R->from_int(3);
  for (const auto& L : {make_mu_ordinary_lattice(R), make_gss_braid_lattice(R), make_ssp_lattice(R)})
    for (std::size_t i = 0; i < 6; ++i) {
      GRVector x(6, R->zero()), px(6, R->zero());
      x[i] = R->one();
      px[i] = p;
      EXPECT_EQ(L.apply_F(L.apply_V(x)), px);
    }
}
