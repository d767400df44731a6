#pragma once

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "udm/dieudonne.hpp"
#include "udm/fibers.hpp"
#include "udm/raynaud.hpp"
#include "udm/strata.hpp"

namespace udm {

// How to build the P-basis (h1~, h2~, p c_1, ..., p c_4) of P = pL + <lifts of H>.
struct QuotientBasisChoice {
  std::optional<std::array<GRVector, 2>> lifts;     // default: Teichmuller lifts of the graded H basis
  std::optional<std::vector<std::size_t>> complement;  // standard basis indices; default: greedy
};

struct QuotientModule {
  DieudonneSpace mprime;  // M'/pM' realized as P/pP
  FMatrix induced_form;   // (<b_i, b_j> / p) mod p on the P-basis
  GRMatrix p_basis;       // columns b_i in L-coordinates
};

namespace detail {

inline std::vector<std::size_t> greedy_complement(const Field& k, const std::vector<FVector>& start, std::size_t n) {
  FMatrix m(0, n);
  for (const auto& v : start) m.append_row(v);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n && m.rows() < n; ++i) {
    FVector e(n, 0);
    e[i] = 1;
    FMatrix t = m;
    t.append_row(e);
    if (rank(k, t) == t.rows()) {
      m = t;
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace detail

inline QuotientModule quotient_module(const DieudonneLattice& L, const FVector& h_sigma, const FVector& h_sigma_bar,
                                      const QuotientBasisChoice& choice = {}) {
  const GaloisRing& R = L.ring();
  const Field& k = R.residue_field();
  const std::size_t n = L.rank();
  const DieudonneSpace Lbar = L.reduce();
  const Subspace h = Subspace::span(Lbar.field_ptr(), n, std::vector<FVector>{h_sigma, h_sigma_bar});
  if (h.dim() != 2 || !Lbar.is_stable(h) || !Lbar.is_isotropic(h))
    throw std::invalid_argument("H is not an admissible subgroup");
  if (Lbar.type_of(h) != SignatureType{1, 1}) throw std::invalid_argument("H is not balanced");

  std::array<GRVector, 2> lifts =
      choice.lifts ? *choice.lifts : std::array<GRVector, 2>{teichmuller_vec(R, h_sigma), teichmuller_vec(R, h_sigma_bar)};
  if (reduce_vec(R, lifts[0]) != h_sigma || reduce_vec(R, lifts[1]) != h_sigma_bar)
    throw std::invalid_argument("lifts do not reduce to the H basis");
  std::vector<std::size_t> comp = choice.complement ? *choice.complement
                                                    : detail::greedy_complement(k, {h_sigma, h_sigma_bar}, n);
  if (comp.size() + 2 != n) throw std::invalid_argument("complement has the wrong size");

  GRMatrix B(n, n, R.zero()), P(n, n, R.zero());
  Grading gr(n);
  B.set_col(0, lifts[0]);
  B.set_col(1, lifts[1]);
  P.set_col(0, lifts[0]);
  P.set_col(1, lifts[1]);
  gr[0] = Grade::Sigma;
  gr[1] = Grade::SigmaBar;
  for (std::size_t j = 0; j < comp.size(); ++j) {
    B(comp[j], j + 2) = R.one();
    P(comp[j], j + 2) = R.from_int(R.p());
    gr[j + 2] = L.grading()[comp[j]];
  }
  auto Binv = inverse(R, B);
  if (!Binv) throw std::invalid_argument("complement does not complete H to a basis");

  // Coordinates of v in P/pP: z = B^{-1} v, x_i = z_i mod p, y_j = (z_j / p) mod p.
  auto coords = [&](const GRVector& v) {
    const GRVector z = mat_vec(R, *Binv, v);
    FVector c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < 2) c[i] = R.reduce(z[i]);
      else {
        if (!R.divisible_by_p(z[i])) throw std::logic_error("vector does not lie in P");
        c[i] = R.reduce(R.div_p(z[i]));
      }
    }
    return c;
  };
  FMatrix f(n, n), v(n, n), form(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const GRVector b = P.col(j);
    f.set_col(j, coords(L.apply_F(b)));
    v.set_col(j, coords(L.apply_V(b)));
  }
  if (L.has_pairing())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const GRElem x = L.pair(P.col(i), P.col(j));
        if (!R.divisible_by_p(x)) throw std::logic_error("pairing on P is not divisible by p");
        form(i, j) = R.reduce(R.div_p(x));
      }
  return {DieudonneSpace(Lbar.field_ptr(), gr, f, v), form, P};
}

// Type of Lie(H^perp / H).
inline SignatureType tau_psi(const DieudonneSpace& m, const Subspace& h) {
  return lie_type_of_quotient(m, m.annihilator(h), h);
}

// The seven strata, keyed by (tau(psi), a(A')).
inline std::optional<int> stilde_row(const SignatureType& tau, const SignatureType& a) {
  static const std::array<std::pair<SignatureType, SignatureType>, 7> rows = {{
      {{1, 0}, {1, 0}},
      {{0, 1}, {1, 1}},
      {{1, 1}, {1, 1}},
      {{1, 0}, {2, 0}},
      {{0, 1}, {2, 1}},
      {{1, 1}, {2, 1}},
      {{1, 0}, {2, 1}},
  }};
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].first == tau && rows[i].second == a) return static_cast<int>(i + 1);
  return std::nullopt;
}

inline SignatureType stilde_tau(int row) {
  static const SignatureType t[7] = {{1, 0}, {0, 1}, {1, 1}, {1, 0}, {0, 1}, {1, 1}, {1, 0}};
  return t[row - 1];
}
inline SignatureType stilde_a_type(int row) {
  static const SignatureType a[7] = {{1, 0}, {1, 1}, {1, 1}, {2, 0}, {2, 1}, {2, 1}, {2, 1}};
  return a[row - 1];
}

// Row predicted from the source point: stratum, subgroup type and, at superspecial points,
// the rationality of zeta or beta3 over kappa.
struct SourceKey {
  Stratum stratum = Stratum::MuOrdinary;
  RaynaudLabel type = RaynaudLabel::Etale;
  Parametrization coords;
};

inline std::optional<int> expected_stilde_row(const Field& k, const SourceKey& s) {
  switch (s.stratum) {
    case Stratum::MuOrdinary: return 1;
    case Stratum::Gss:
      if (s.type == RaynaudLabel::GSigma) return 2;
      if (s.type == RaynaudLabel::AlphaP2Sigma || s.type == RaynaudLabel::AlphaP2DualSigma) return 3;
      return std::nullopt;
    case Stratum::Ssp:
      if (s.coords.branch == Parametrization::Branch::Tooth && s.coords.beta3)
        return k.in_kappa(*s.coords.beta3) ? 5 : 2;
      if (s.coords.branch == Parametrization::Branch::Base && s.coords.zeta) {
        const ProjectivePoint& z = *s.coords.zeta;
        if (!z.infinite && !k.in_kappa(z.value)) return 4;
        return is_tooth_root(k, z) ? 6 : 7;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

struct QuotientData {
  QuotientModule quotient;
  SignatureType tau;
  SignatureType a_type;
  std::optional<int> row;
};

inline QuotientData analyze_quotient(const DieudonneLattice& L, const SubgroupRecord& h,
                                     const QuotientBasisChoice& choice = {}) {
  QuotientData d{quotient_module(L, h.sigma_vec, h.sigma_bar_vec, choice), {}, {}, std::nullopt};
  const DieudonneSpace& mp = d.quotient.mprime;
  if (mp.lie_type() != SignatureType{2, 1})
    throw std::logic_error("quotient has Lie type " + mp.lie_type().to_string());
  d.tau = tau_psi(L.reduce(), h.h);
  d.a_type = a_number_type(mp);
  d.row = stilde_row(d.tau, d.a_type);
  return d;
}

// Random g, block diagonal for the grading, invertible mod p.
template <class Rng>
GRMatrix random_graded_basis_change(const GaloisRing& R, const Grading& grading, Rng& rng) {
  const std::size_t n = grading.size();
  std::uniform_int_distribution<int> digit(0, static_cast<int>(R.modulus() - 1));
  while (true) {
    GRMatrix g(n, n, R.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (grading[i] != grading[j]) continue;
        std::vector<int> c(R.degree());
        for (auto& x : c) x = digit(rng);
        g(i, j) = R.from_coeffs(c);
      }
    if (inverse(R, g)) return g;
  }
}

}  // namespace udm
