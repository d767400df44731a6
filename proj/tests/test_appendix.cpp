#include <gtest/gtest.h>

#include <map>

#include "udm/appendix.hpp"

using namespace udm;

namespace {

RingPtr ring(int m) { return GaloisRing::make(Field::make(3, 2 * m), 2); }

// The first `limit` curve points outside kappa^2.
std::vector<GssFamilyPoint> outside_points(const RingPtr& R, std::size_t limit) {
  const auto roots = kappa_roots(R->residue_field());
  std::vector<GssFamilyPoint> out;
  for (auto [a, b] : curve_points(R->residue_field())) {
    if (out.size() >= limit) break;
    auto pt = gss_family(R, roots.front(), a, b);
    if (!pt.over_kappa) out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace

TEST(Hermitian, PointCounts) {
  EXPECT_EQ(hermitian_count(3), 28u);
  EXPECT_EQ(hermitian_count(5), 126u);
  // Affine model a^p + a = b^(p+1) plus the single point at infinity.
  for (int p : {3, 5, 7}) {
    const Field k(p, 2);
    EXPECT_EQ(curve_points(k).size() + 1, hermitian_count(p));
  }
}

TEST(Curve, PointsSatisfyTheEquation) {
  const Field k(3, 4);
  const auto pts = curve_points(k);
  for (auto [a, b] : pts) EXPECT_TRUE(on_curve(k, a, b));
  std::size_t n = 0;
  for (FieldElem a = 0; a < k.order(); ++a)
    for (FieldElem b = 0; b < k.order(); ++b) n += k.add(k.pow(a, 3), a) == k.pow(b, 4);
  EXPECT_EQ(pts.size(), n);
}

TEST(Curve, EveryF81PointLiesOverKappa) {
  auto R = ring(2);
  const Field& k = R->residue_field();
  const auto pts = curve_points(k);
  EXPECT_EQ(pts.size(), 27u);
  for (auto [a, b] : pts) EXPECT_TRUE(k.in_kappa(a) && k.in_kappa(b));
}

TEST(Family, SuperspecialExactlyOverKappa) {
  for (int m : {2, 3}) {
    auto R = ring(m);
    const auto roots = kappa_roots(R->residue_field());
    ASSERT_EQ(roots.size(), 4u);
    for (auto [a, b] : curve_points(R->residue_field())) {
      const auto pt = gss_family(R, roots.front(), a, b);
      ASSERT_TRUE(pt.lattice.check_axioms().ok());
      EXPECT_EQ(classify_stratum(pt.lattice.reduce()), pt.over_kappa ? Stratum::Ssp : Stratum::Gss);
    }
  }
}

TEST(Family, GammaIsIntegral) {
  auto R = ring(3);
  const Field& k = R->residue_field();
  for (auto [a, b] : curve_points(k)) {
    const GRElem g = appendix_gamma(R, a, b);
    // p * gamma = -([a^p] + [a] - [b^(p+1)]) modulo p^2.
    const GRElem s = R->sub(R->add(R->teichmuller(k.frob(a)), R->teichmuller(a)), R->teichmuller(k.pow(b, 4)));
    EXPECT_EQ(R->mul_p(g), R->neg(s));
  }
  EXPECT_THROW(appendix_gamma(R, 1, 0), std::invalid_argument);
}

TEST(Family, UVSubgroupsExhaustTheFiber) {
  auto R = ring(3);
  for (const auto& pt : outside_points(R, 3)) {
    std::map<Subspace, RaynaudLabel> a, b;
    for (const auto& r : enumerate_H(pt.lattice.reduce())) a.emplace(r.h, r.type);
    for (const auto& r : enumerate_H_uv(pt)) b.emplace(r.record.h, r.record.type);
    EXPECT_EQ(a, b);
    EXPECT_EQ(b.size(), R->residue_field().order() + 1);
  }
}

TEST(Family, ExplicitQuotientMatricesMatchTheGenericConstruction) {
  auto R = ring(3);
  const Field& k = R->residue_field();
  for (const auto& pt : outside_points(R, 2))
    for (const auto& uv : all_uv(k)) {
      if (k.add(uv.u, uv.v) == 0) continue;
      const QuotientModule q = appendix_quotient(pt, uv);
      const auto [f, v] = appendix_quotient_matrices(pt, uv);
      ASSERT_EQ(q.mprime.F_matrix(), f);
      ASSERT_EQ(q.mprime.V_matrix(), v);
    }
}

TEST(Family, GenericATypeAndCongruences) {
  auto R = ring(3);
  const Field& k = R->residue_field();
  for (const auto& pt : outside_points(R, 2))
    for (const auto& uv : all_uv(k)) {
      if (uv.u == 0 || uv.v == 0 || k.add(uv.u, uv.v) == 0) continue;
      const QuotientModule q = appendix_quotient(pt, uv);
      EXPECT_EQ(a_number_type(q.mprime), (SignatureType{1, 1}));
      EXPECT_EQ(congruence_solution_dim(pt, uv), 1);
    }
}

TEST(Family, RejectsBadInput) {
  auto R = ring(2);
  const auto roots = kappa_roots(R->residue_field());
  EXPECT_THROW(gss_family(R, 0, 0, 0), std::invalid_argument);
  EXPECT_THROW(gss_family(R, roots.front(), 1, 0), std::invalid_argument);
  const auto pt = gss_family(R, roots.front(), 0, 0);
  EXPECT_THROW(enumerate_H_uv(pt), std::invalid_argument);
}
