#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "udm/dieudonne.hpp"
#include "udm/fibers.hpp"
#include "udm/quotient.hpp"
#include "udm/strata.hpp"

namespace udm {

// Affine points of a^p + a = b^{p+1} over k.
inline std::vector<std::pair<FieldElem, FieldElem>> curve_points(const Field& k) {
  const int p = k.p();
  std::map<FieldElem, std::vector<FieldElem>> by_value;
  for (FieldElem a = 0; a < k.order(); ++a) by_value[k.add(k.frob(a), a)].push_back(a);
  std::vector<std::pair<FieldElem, FieldElem>> out;
  for (FieldElem b = 0; b < k.order(); ++b) {
    auto it = by_value.find(k.pow(b, p + 1));
    if (it == by_value.end()) continue;
    for (FieldElem a : it->second) out.emplace_back(a, b);
  }
  return out;
}

inline bool on_curve(const Field& k, FieldElem a, FieldElem b) {
  return k.add(k.frob(a), a) == k.pow(b, k.p() + 1);
}

// Projective F_{p^2}-points of x^p z + x z^p - y^{p+1} = 0, by brute force over normalized triples.
inline unsigned long long hermitian_count(int p) {
  const Field k(p, 2);
  const auto q = k.order();
  auto on = [&](FieldElem x, FieldElem y, FieldElem z) {
    const FieldElem lhs = k.add(k.mul(k.frob(x), z), k.mul(x, k.frob(z)));
    return lhs == k.pow(y, p + 1);
  };
  unsigned long long n = 0;
  for (FieldElem x = 0; x < q; ++x)
    for (FieldElem y = 0; y < q; ++y) n += on(x, y, 1);
  for (FieldElem x = 0; x < q; ++x) n += on(x, 1, 0);
  n += on(1, 0, 0);
  return n;
}

// Roots of zeta^{p+1} = -1 in kappa.
inline std::vector<FieldElem> kappa_roots(const Field& k) {
  std::vector<FieldElem> out;
  for (FieldElem z = 1; z < k.order(); ++z)
    if (k.in_kappa(z) && k.pow(z, k.p() + 1) == k.neg(k.one())) out.push_back(z);
  return out;
}

struct GssFamilyPoint {
  FieldElem zeta = 0;
  FieldElem a = 0;
  FieldElem b = 0;
  DieudonneLattice lattice;
  GRElem gamma_witt;
  bool over_kappa = false;  // (a, b) in kappa^2
};

// -p^{-1}([a^p] + [a] - [b^{p+1}]), computed in W_3 and returned modulo p^2.
inline GRElem appendix_gamma(const RingPtr& R, FieldElem a, FieldElem b) {
  const Field& k = R->residue_field();
  const GaloisRing R3(R->residue_field_ptr(), 3);
  const GRElem s = R3.sub(R3.add(R3.teichmuller(k.frob(a)), R3.teichmuller(a)), R3.teichmuller(k.pow(b, k.p() + 1)));
  if (!R3.divisible_by_p(s)) throw std::invalid_argument("(a, b) is not on the curve");
  return R->from_coeffs(R3.coeffs(R3.neg(R3.div_p(s))));
}

// M_{a,b} in the basis (eps1, eps2, eps3, phi1, phi2, phi3); columns are images.
inline GssFamilyPoint gss_family(const RingPtr& R, FieldElem zeta, FieldElem a, FieldElem b) {
  const GaloisRing& W = *R;
  const Field& k = W.residue_field();
  const int p = k.p();
  if (!k.in_kappa(zeta) || k.pow(zeta, p + 1) != k.neg(k.one())) throw std::invalid_argument("zeta is not a root of zeta^{p+1} = -1");
  if (!on_curve(k, a, b)) throw std::invalid_argument("(a, b) is not on the curve");
  GssFamilyPoint pt;
  pt.zeta = zeta;
  pt.a = a;
  pt.b = b;
  pt.over_kappa = k.in_kappa(a) && k.in_kappa(b);
  pt.gamma_witt = appendix_gamma(R, a, b);

  auto T = [&](FieldElem x) { return W.teichmuller(x); };
  const GRElem P = W.from_int(p), O = W.one(), Z = W.zero();
  const GRElem tb = T(b);
  auto build = [&](int dir) {
    const GRElem bs = T(k.frob(b, dir));
    const GRElem as = W.add(T(k.frob(a, dir)), T(a));
    const GRElem g = W.frob(pt.gamma_witt, dir > 0 ? 0 : -1);
    return GRMatrix::from_rows({{Z, Z, Z, O, Z, Z},
                                {Z, Z, Z, W.neg(bs), P, Z},
                                {Z, Z, Z, g, W.neg(tb), O},
                                {P, Z, Z, Z, Z, Z},
                                {tb, O, Z, Z, Z, Z},
                                {as, bs, P, Z, Z, Z}},
                               6);
  };
  const SpecialUnit d = find_special_unit(W);
  GRMatrix G(6, 6, Z);
  for (int i = 0; i < 3; ++i) {
    G(i, 5 - i) = d.delta;
    G(5 - i, i) = W.neg(d.delta);
  }
  pt.lattice = DieudonneLattice(R, standard_grading(), build(1), build(-1), G);
  return pt;
}

// (u : v), normalized to (u : 1) or (1 : 0).
struct UV {
  FieldElem u = 0;
  FieldElem v = 1;
  bool operator<(const UV& o) const { return std::pair(v, u) < std::pair(o.v, o.u); }
  bool operator==(const UV& o) const { return u == o.u && v == o.v; }
};

inline std::vector<UV> all_uv(const Field& k) {
  std::vector<UV> out;
  for (FieldElem u = 0; u < k.order(); ++u) out.push_back({u, 1});
  out.push_back({1, 0});
  return out;
}

// eta = u (phi2 + [b^p] phi3) + v (phi2 + [b^{1/p}] phi3) reduced mod p.
inline FVector eta_bar(const Field& k, FieldElem b, const UV& uv) {
  FVector y(6, 0);
  y[4] = k.add(uv.u, uv.v);
  y[5] = k.add(k.mul(uv.u, k.frob(b)), k.mul(uv.v, k.frob(b, -1)));
  return y;
}

inline GRVector eta_lift(const GaloisRing& W, FieldElem b, const UV& uv) {
  const Field& k = W.residue_field();
  GRVector y(6, W.zero());
  const GRElem tu = W.teichmuller(uv.u), tv = W.teichmuller(uv.v);
  y[4] = W.add(tu, tv);
  y[5] = W.add(W.mul(tu, W.teichmuller(k.frob(b))), W.mul(tv, W.teichmuller(k.frob(b, -1))));
  return y;
}

inline FVector eps3_bar() {
  FVector x(6, 0);
  x[2] = 1;
  return x;
}

struct UVRecord {
  UV uv;
  SubgroupRecord record;
};

inline std::vector<UVRecord> enumerate_H_uv(const GssFamilyPoint& pt) {
  if (pt.over_kappa) throw std::invalid_argument("(a, b) lies in kappa^2");
  const DieudonneSpace m = pt.lattice.reduce();
  const Field& k = m.field();
  std::vector<UVRecord> out;
  for (const UV& uv : all_uv(k)) {
    const FVector x = eps3_bar(), y = eta_bar(k, pt.b, uv);
    if (!is_admissible_pair(m, x, y)) throw std::logic_error("appendix subgroup is not admissible");
    out.push_back({uv, make_record(m, x, y)});
  }
  return out;
}

// M'/pM' from the displayed formulas in the basis (eps1, eps2, p^{-1} eps3, phi1, p^{-1} eta, phi3),
// valid when u + v != 0.
inline std::pair<FMatrix, FMatrix> appendix_quotient_matrices(const GssFamilyPoint& pt, const UV& uv) {
  const Field& k = pt.lattice.ring().residue_field();
  const FieldElem u = uv.u, v = uv.v, a = pt.a, b = pt.b;
  const FieldElem s = k.add(u, v);
  if (s == 0) throw std::invalid_argument("u + v = 0 needs the alternate basis");
  const FieldElem w = k.div(k.add(k.mul(u, k.frob(b)), k.mul(v, k.frob(b, -1))), s);
  FMatrix F(6, 6, 0), V(6, 6, 0);
  F(5, 0) = k.sub(k.add(k.frob(a), a), k.mul(b, w));
  F(5, 1) = k.sub(k.frob(b), w);
  F(5, 2) = 1;
  F(0, 3) = 1;
  F(1, 3) = k.neg(k.frob(b));
  F(1, 4) = k.add(k.frob(u), k.frob(v));
  F(2, 4) = k.mul(k.frob(u), k.sub(k.frob(b, 2), b));
  V(5, 0) = k.sub(k.add(k.frob(a, -1), a), k.mul(b, w));
  V(5, 1) = k.sub(k.frob(b, -1), w);
  V(5, 2) = 1;
  V(0, 3) = 1;
  V(1, 3) = k.neg(k.frob(b, -1));
  V(1, 4) = k.add(k.frob(u, -1), k.frob(v, -1));
  V(2, 4) = k.mul(k.frob(v, -1), k.sub(k.frob(b, -2), b));
  return {F, V};
}

// Generic quotient with the appendix lifts; for u + v != 0 the result is permuted into the
// order of appendix_quotient_matrices.
inline QuotientModule appendix_quotient(const GssFamilyPoint& pt, const UV& uv) {
  const GaloisRing& W = pt.lattice.ring();
  const Field& k = W.residue_field();
  const bool alt = k.add(uv.u, uv.v) == 0;
  QuotientBasisChoice choice;
  choice.lifts = std::array<GRVector, 2>{teichmuller_vec(W, eps3_bar()), eta_lift(W, pt.b, uv)};
  choice.complement = alt ? std::vector<std::size_t>{0, 1, 3, 4} : std::vector<std::size_t>{0, 1, 3, 5};
  QuotientModule q = quotient_module(pt.lattice, eps3_bar(), eta_bar(k, pt.b, uv), choice);
  if (alt) return q;
  // P-basis (eps3, eta, p eps1, p eps2, p phi1, p phi3) -> (p eps1, p eps2, eps3, p phi1, eta, p phi3).
  const std::array<std::size_t, 6> from = {2, 3, 0, 4, 1, 5};
  FMatrix g(6, 6, 0);
  for (std::size_t i = 0; i < 6; ++i) g(from[i], i) = 1;
  q.mprime = q.mprime.change_basis(g);
  return q;
}

// 3 - rank of the coefficient rows of the two congruences cutting out the a-type.
inline int congruence_solution_dim(const GssFamilyPoint& pt, const UV& uv) {
  const Field& k = pt.lattice.ring().residue_field();
  const FieldElem b = pt.b, s = k.add(uv.u, uv.v);
  if (s == 0) throw std::invalid_argument("u + v = 0");
  const FieldElem w = k.div(k.add(k.mul(uv.u, k.frob(b)), k.mul(uv.v, k.frob(b, -1))), s);
  const FieldElem wm = k.frob(w, -1), wp = k.frob(w, 1);
  FMatrix rows(2, 3);
  rows(0, 0) = k.sub(k.mul(b, k.frob(b, -1)), k.mul(k.frob(b, -1), wm));
  rows(0, 1) = k.sub(b, wm);
  rows(0, 2) = 1;
  rows(1, 0) = k.sub(k.pow(b, k.p() + 1), k.mul(k.frob(b), wp));
  rows(1, 1) = k.sub(b, wp);
  rows(1, 2) = 1;
  return 3 - static_cast<int>(rank(k, rows));
}

}  // namespace udm
