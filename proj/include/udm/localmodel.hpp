#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "udm/dieudonne.hpp"
#include "udm/fibers.hpp"
#include "udm/quotient.hpp"
#include "udm/raynaud.hpp"

namespace udm {

// (M1, M2, B, B', D(h)) over W_2(k); columns are images, M_i(Sigma) spanned by the first three vectors.
struct StandardModel {
  RingPtr ring;
  Grading grading;
  GRMatrix B;
  GRMatrix Bp;
  GRMatrix Dh;
};

inline StandardModel standard_model(const RingPtr& R) {
  const GaloisRing& W = *R;
  const GRElem p = W.from_int(W.p());
  StandardModel sm{R, standard_grading(), GRMatrix(6, 6, W.zero()), GRMatrix(6, 6, W.zero()), GRMatrix(6, 6, W.zero())};
  for (int i = 0; i < 3; ++i) {
    sm.B(i, 5 - i) = W.one();
    sm.B(5 - i, i) = W.neg(W.one());
    sm.Bp(i, 5 - i) = i == 0 ? p : W.one();
    sm.Bp(5 - i, i) = W.neg(i == 0 ? p : W.one());
  }
  const int diag[6] = {1, 0, 1, 0, 1, 1};
  for (int i = 0; i < 6; ++i) sm.Dh(i, i) = diag[i] ? W.one() : p;
  return sm;
}

// D(h) B' D(h)^* = p B.
inline bool standard_identity_holds(const StandardModel& sm) {
  const GaloisRing& W = *sm.ring;
  const GRMatrix lhs = mat_mul(W, sm.Dh, mat_mul(W, sm.Bp, transpose(sm.Dh)));
  return lhs == mat_scale(W, sm.B, W.from_int(W.p()));
}

// Special fibre of the linear-algebra data: B : M1^* -> M1, B' : M2^* -> M2, D : M2 -> M1.
struct LocalModelData {
  FieldPtr k;
  Grading grading1;
  Grading grading2;
  FMatrix B;
  FMatrix Bp;
  FMatrix D;
};

inline LocalModelData reduce(const StandardModel& sm) {
  const GaloisRing& W = *sm.ring;
  return {W.residue_field_ptr(), sm.grading, sm.grading, reduce_matrix(W, sm.B), reduce_matrix(W, sm.Bp),
          reduce_matrix(W, sm.Dh)};
}

struct HodgePair {
  Subspace omega0;
  Subspace omega0p;
};

namespace detail {

inline SignatureType graded_type(const Subspace& s, const Grading& g) {
  const FieldPtr& k = s.field_ptr();
  const auto sig = s.intersect(Subspace::coordinate(k, g.size(), indices_of(g, Grade::Sigma))).dim();
  const auto bar = s.intersect(Subspace::coordinate(k, g.size(), indices_of(g, Grade::SigmaBar))).dim();
  if (sig + bar != s.dim()) throw std::invalid_argument("subspace is not graded");
  return {static_cast<int>(sig), static_cast<int>(bar)};
}

// Functionals (coefficient vectors on the dual basis) vanishing on s.
inline Subspace perp(const Subspace& s) {
  if (s.dim() == 0) return Subspace::whole(s.field_ptr(), s.ambient_dim());
  return Subspace::span(s.field_ptr(), s.ambient_dim(), kernel(s.field(), s.basis()));
}

}  // namespace detail

inline AxiomReport check_hodge_pair(const LocalModelData& lm, const HodgePair& hp) {
  AxiomReport r;
  if (hp.omega0.dim() != 3 || detail::graded_type(hp.omega0, lm.grading1) != SignatureType{2, 1})
    r.add("omega0 is not of type (2,1)");
  if (hp.omega0p.dim() != 3 || detail::graded_type(hp.omega0p, lm.grading2) != SignatureType{2, 1})
    r.add("omega0' is not of type (2,1)");
  if (detail::perp(hp.omega0).image(lm.B) != hp.omega0) r.add("B(omega0^perp) != omega0");
  if (!hp.omega0p.contains(detail::perp(hp.omega0p).image(lm.Bp))) r.add("B'(omega0'^perp) not inside omega0'");
  if (!hp.omega0.contains(hp.omega0p.image(lm.D))) r.add("D(h)(omega0') not inside omega0");
  return r;
}

inline InvariantTriple invariants_from_hodge(const LocalModelData& lm, const HodgePair& hp) {
  if (auto rep = check_hodge_pair(lm, hp); !rep.ok()) throw std::invalid_argument(rep.violations.front());
  const int alpha = static_cast<int>(hp.omega0.dim() - hp.omega0p.image(lm.D).dim());
  const Subspace whole2 = Subspace::whole(lm.k, lm.grading2.size());
  const int beta = static_cast<int>(lm.grading1.size() - hp.omega0.sum(whole2.image(lm.D)).dim());
  const int gamma = static_cast<int>(hp.omega0p.dim() - detail::perp(hp.omega0p).image(lm.Bp).dim());
  return {alpha, beta, gamma};
}

// Rewrite the data in new bases x = g1 x' of M1 and x = g2 x' of M2.
inline std::pair<LocalModelData, HodgePair> transport(const LocalModelData& lm, const HodgePair& hp, const FMatrix& g1,
                                                      const FMatrix& g2) {
  const Field& k = *lm.k;
  const auto i1 = inverse(k, g1), i2 = inverse(k, g2);
  if (!i1 || !i2) throw std::invalid_argument("basis change is not invertible");
  LocalModelData out = lm;
  out.B = mat_mul(k, *i1, mat_mul(k, lm.B, transpose(*i1)));
  out.Bp = mat_mul(k, *i2, mat_mul(k, lm.Bp, transpose(*i2)));
  out.D = mat_mul(k, *i1, mat_mul(k, lm.D, g2));
  return {out, {hp.omega0.image(*i1), hp.omega0p.image(*i2)}};
}

// diag(t1, t2, t3, 1/t3, 1/t2, 1/t1) on both M1 and M2 fixes B, B' and D(h) modulo p.
inline FMatrix standard_torus_element(const Field& k, FieldElem t1, FieldElem t2, FieldElem t3) {
  FMatrix g(6, 6, 0);
  const FieldElem t[3] = {t1, t2, t3};
  for (int i = 0; i < 3; ++i) {
    g(i, i) = t[i];
    g(5 - i, 5 - i) = k.inv(t[i]);
  }
  return g;
}

enum class DeformationTarget { X, XTilde, Y };

inline const char* target_name(DeformationTarget t) {
  switch (t) {
    case DeformationTarget::X: return "x";
    case DeformationTarget::XTilde: return "x~";
    case DeformationTarget::Y: return "y";
  }
  return "?";
}

namespace detail {

// First-order deformations of a graded subspace w0: w_i + eps * sum_j t_ij c_j with c_j running
// over standard basis vectors of the same grade outside the pivots of w0.
struct GrassmannChart {
  Subspace w0;
  std::vector<FVector> rows;
  struct Param {
    std::size_t row;
    std::size_t target;
  };
  std::vector<Param> params;

  GrassmannChart(const Subspace& s, const Grading& g) : w0(s) {
    const FieldPtr& k = s.field_ptr();
    for (Grade gr : {Grade::Sigma, Grade::SigmaBar}) {
      const auto idx = indices_of(g, gr);
      const Subspace part = s.intersect(Subspace::coordinate(k, g.size(), idx));
      std::vector<std::size_t> comp;
      FMatrix acc = part.basis();
      for (auto i : idx) {
        FVector e(g.size(), 0);
        e[i] = 1;
        FMatrix t = acc;
        t.append_row(e);
        if (rank(*k, t) == t.rows()) {
          acc = t;
          comp.push_back(i);
        }
      }
      for (std::size_t r = 0; r < part.dim(); ++r) {
        rows.push_back(part.vector(r));
        for (auto c : comp) params.push_back({rows.size() - 1, c});
      }
    }
  }

  // Matrix whose rows are the eps-parts of the deformed basis for parameter vector t.
  FMatrix eps_part(const Field& k, const FVector& t) const {
    FMatrix w1(rows.size(), w0.ambient_dim(), 0);
    for (std::size_t u = 0; u < params.size(); ++u) w1(params[u].row, params[u].target) = k.add(w1(params[u].row, params[u].target), t[u]);
    return w1;
  }
  FMatrix base() const { return FMatrix::from_rows(rows, w0.ambient_dim()); }
};

// Residual of "B(w^perp) inside w" at first order, as a vector of coordinates modulo w0.
inline FVector perp_condition(const Field& k, const GrassmannChart& ch, const FMatrix& b, const FMatrix& w1) {
  const FMatrix w0 = ch.base();
  const Subspace xi0s = perp(ch.w0);
  FVector out;
  for (const auto& xi0 : xi0s.vectors()) {
    // xi1 with W0 xi1 = -W1 xi0.
    FVector rhs = mat_vec(k, w1, xi0);
    for (auto& x : rhs) x = k.neg(x);
    const auto xi1 = solve(k, w0, rhs);
    if (!xi1) throw std::logic_error("deformed annihilator does not lift");
    // B xi0 = W0^T c.
    const auto c = solve(k, transpose(w0), mat_vec(k, b, xi0));
    if (!c) throw std::logic_error("B does not map the annihilator into omega0");
    FVector res = mat_vec(k, b, *xi1);
    const FVector corr = mat_vec(k, transpose(w1), *c);
    for (std::size_t i = 0; i < res.size(); ++i) res[i] = k.sub(res[i], corr[i]);
    const FVector red = ch.w0.reduce(res);
    out.insert(out.end(), red.begin(), red.end());
  }
  return out;
}

// Residual of "D(w') inside w" at first order.
inline FVector map_condition(const Field& k, const GrassmannChart& src, const GrassmannChart& dst, const FMatrix& d,
                             const FMatrix& w1_src, const FMatrix& w1_dst) {
  const FMatrix w0 = dst.base();
  FVector out;
  const FMatrix s0 = src.base();
  for (std::size_t i = 0; i < s0.rows(); ++i) {
    const auto c = solve(k, transpose(w0), mat_vec(k, d, s0.row(i)));
    if (!c) throw std::logic_error("D does not map omega0' into omega0");
    FVector res = mat_vec(k, d, w1_src.row(i));
    const FVector corr = mat_vec(k, transpose(w1_dst), *c);
    for (std::size_t j = 0; j < res.size(); ++j) res[j] = k.sub(res[j], corr[j]);
    const FVector red = dst.w0.reduce(res);
    out.insert(out.end(), red.begin(), red.end());
  }
  return out;
}

}  // namespace detail

// Dimension of the tangent space of the deformation problem over k[eps] (p = 0).
inline int tangent_dim(const LocalModelData& lm, const HodgePair& hp, DeformationTarget which) {
  const Field& k = *lm.k;
  const detail::GrassmannChart c1(hp.omega0, lm.grading1), c2(hp.omega0p, lm.grading2);
  const bool use1 = which != DeformationTarget::XTilde, use2 = which != DeformationTarget::X;
  const std::size_t n1 = use1 ? c1.params.size() : 0, n2 = use2 ? c2.params.size() : 0;
  const std::size_t n = n1 + n2;
  auto residual = [&](const FVector& t) {
    const FVector t1(t.begin(), t.begin() + n1), t2(t.begin() + n1, t.end());
    const FMatrix w1 = use1 ? c1.eps_part(k, t1) : FMatrix(c1.rows.size(), lm.grading1.size(), 0);
    const FMatrix w2 = use2 ? c2.eps_part(k, t2) : FMatrix(c2.rows.size(), lm.grading2.size(), 0);
    FVector r;
    if (use1) {
      auto a = detail::perp_condition(k, c1, lm.B, w1);
      r.insert(r.end(), a.begin(), a.end());
    }
    if (use2) {
      auto a = detail::perp_condition(k, c2, lm.Bp, w2);
      r.insert(r.end(), a.begin(), a.end());
    }
    if (use1 && use2) {
      auto a = detail::map_condition(k, c2, c1, lm.D, w2, w1);
      r.insert(r.end(), a.begin(), a.end());
    }
    return r;
  };
  FMatrix jac(0, n);
  std::vector<FVector> cols;
  for (std::size_t u = 0; u < n; ++u) {
    FVector t(n, 0);
    t[u] = 1;
    cols.push_back(residual(t));
  }
  if (n == 0) return 0;
  FMatrix J(cols[0].size(), n, 0);
  for (std::size_t u = 0; u < n; ++u) J.set_col(u, cols[u]);
  return static_cast<int>(n - rank(k, J));
}

// Graded type (2,1) subspaces of k^6 spanned by F_p-rational vectors, in a fixed order.
inline std::vector<Subspace> rational_21_subspaces(const FieldPtr& k, const Grading& g) {
  const auto sig = indices_of(g, Grade::Sigma), bar = indices_of(g, Grade::SigmaBar);
  const int p = k->p();
  const std::size_t n = g.size();
  auto vecs = [&](const std::vector<std::size_t>& idx) {
    std::vector<FVector> out;
    // F_p-rational lines of the piece: normalized coefficient vectors with entries in F_p.
    const std::size_t d = idx.size();
    for (std::size_t lead = 0; lead < d; ++lead) {
      std::vector<int> c(d - 1 - lead, 0);
      while (true) {
        FVector v(n, 0);
        v[idx[lead]] = 1;
        for (std::size_t t = 0; t < c.size(); ++t) v[idx[lead + 1 + t]] = k->from_int(c[t]);
        out.push_back(v);
        std::size_t t = 0;
        while (t < c.size() && ++c[t] == p) c[t++] = 0;
        if (t == c.size()) break;
      }
    }
    return out;
  };
  const auto sl = vecs(sig), bl = vecs(bar);
  std::vector<Subspace> planes;
  for (std::size_t i = 0; i < sl.size(); ++i)
    for (std::size_t j = i + 1; j < sl.size(); ++j) {
      auto s = Subspace::span(k, n, std::vector<FVector>{sl[i], sl[j]});
      if (s.dim() == 2 && std::find(planes.begin(), planes.end(), s) == planes.end()) planes.push_back(s);
    }
  std::vector<Subspace> out;
  for (const auto& pl : planes)
    for (const auto& l : bl) out.push_back(pl.sum(Subspace::span(k, n, std::vector<FVector>{l})));
  std::sort(out.begin(), out.end());
  return out;
}

// First F_p-rational Hodge pair with the given invariants.
inline std::optional<HodgePair> canonical_hodge_pair(const LocalModelData& lm, const InvariantTriple& target) {
  const auto c1 = rational_21_subspaces(lm.k, lm.grading1);
  const auto c2 = rational_21_subspaces(lm.k, lm.grading2);
  for (const auto& w : c1) {
    if (detail::perp(w).image(lm.B) != w) continue;
    for (const auto& wp : c2) {
      HodgePair hp{w, wp};
      if (!check_hodge_pair(lm, hp).ok()) continue;
      if (invariants_from_hodge(lm, hp) == target) return hp;
    }
  }
  return std::nullopt;
}

enum class HodgeRule { AnnKernelV, AnnKernelF };

struct PointHodgeData {
  LocalModelData model;
  HodgePair hodge;
};

// De Rham side of (L, H): M1 = (L/pL)^dual with B = G^T, M2 = (M'/pM')^dual with B' the transposed
// induced form, D(h) the transpose of L -> M'. O_E acts on the dual through the conjugate labels.
inline PointHodgeData hodge_from_point(const DieudonneLattice& L, const SubgroupRecord& h,
                                       HodgeRule rule = HodgeRule::AnnKernelF) {
  const GaloisRing& W = L.ring();
  const FieldPtr& k = W.residue_field_ptr();
  const DieudonneSpace m = L.reduce();
  const QuotientModule q = quotient_module(L, h.sigma_vec, h.sigma_bar_vec);
  const std::size_t n = L.rank();

  auto Binv = inverse(W, [&] {
    GRMatrix b = q.p_basis;
    for (std::size_t j = 2; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) b(i, j) = W.div_p(b(i, j));
    return b;
  }());
  FMatrix iota(n, n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    GRVector e(n, W.zero());
    e[j] = W.one();
    const GRVector z = mat_vec(W, *Binv, e);
    for (std::size_t i = 2; i < n; ++i) iota(i, j) = W.reduce(z[i]);
  }

  LocalModelData lm{k, flip(m.grading()), flip(q.mprime.grading()), transpose(m.pairing()), transpose(q.induced_form),
                    transpose(iota)};
  auto omega = [&](const DieudonneSpace& s) {
    return detail::perp(rule == HodgeRule::AnnKernelV ? s.kernel_V() : s.kernel_F());
  };
  return {lm, {omega(m), omega(q.mprime)}};
}

// Embedding dimensions of the special fibres of L_y and L_x~ in the local-rings table.
struct LocalRingRow {
  std::string name;
  Stratum stratum;
  InvariantTriple invariants;
  int tangent_y;
  int tangent_xtilde;
};

inline std::vector<LocalRingRow> local_ring_rows() {
  return {
      {"mu-ord kappa*mu_p", Stratum::MuOrdinary, {2, 0, 1}, 2, 2},
      {"mu-ord kappa*Z/p", Stratum::MuOrdinary, {0, 2, 1}, 2, 2},
      {"gss G[p]", Stratum::Gss, {1, 1, 1}, 2, 2},
      {"gss alpha*_p2", Stratum::Gss, {2, 1, 2}, 3, 3},
      {"gss alpha_p2", Stratum::Gss, {1, 2, 2}, 3, 3},
      {"ssp G[p]", Stratum::Ssp, {1, 1, 1}, 2, 2},
      {"ssp kappa*alpha_p generic", Stratum::Ssp, {2, 2, 1}, 3, 2},
      {"ssp kappa*alpha_p root", Stratum::Ssp, {2, 2, 2}, 3, 3},
  };
}

}  // namespace udm
