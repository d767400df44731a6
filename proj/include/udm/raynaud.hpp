#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "udm/dieudonne.hpp"

namespace udm {

// The nine rank-p^2 Raynaud O_E-group schemes, keyed by (a0, b0; a1, b1).
enum class RaynaudLabel {
  Etale,           // kappa (x) Z/p
  Multiplicative,  // kappa (x) mu_p
  AlphaP,          // kappa (x) alpha_p
  GSigma,          // G[p]_Sigma
  GSigmaBar,       // G[p]_SigmaBar
  AlphaP2Sigma,    // alpha_{p^2, Sigma}
  AlphaP2SigmaBar,
  AlphaP2DualSigma,  // alpha*_{p^2, Sigma}
  AlphaP2DualSigmaBar,
};

inline constexpr std::array<RaynaudLabel, 9> kAllRaynaudLabels = {
    RaynaudLabel::Etale,           RaynaudLabel::Multiplicative,   RaynaudLabel::AlphaP,
    RaynaudLabel::GSigma,          RaynaudLabel::GSigmaBar,        RaynaudLabel::AlphaP2Sigma,
    RaynaudLabel::AlphaP2SigmaBar, RaynaudLabel::AlphaP2DualSigma, RaynaudLabel::AlphaP2DualSigmaBar,
};

struct RaynaudVector {
  int a0 = 0, b0 = 0, a1 = 0, b1 = 0;
  bool operator==(const RaynaudVector& o) const { return a0 == o.a0 && b0 == o.b0 && a1 == o.a1 && b1 == o.b1; }
  bool operator!=(const RaynaudVector& o) const { return !(*this == o); }
  RaynaudVector dual() const { return {b0, a0, b1, a1}; }
  RaynaudVector twist() const { return {a1, b1, a0, b0}; }
  std::string to_string() const {
    return "(" + std::to_string(a0) + "," + std::to_string(b0) + ";" + std::to_string(a1) + "," + std::to_string(b1) + ")";
  }
};

inline RaynaudVector raynaud_vector(RaynaudLabel l) {
  switch (l) {
    case RaynaudLabel::Etale: return {0, 1, 0, 1};
    case RaynaudLabel::Multiplicative: return {1, 0, 1, 0};
    case RaynaudLabel::AlphaP: return {0, 0, 0, 0};
    case RaynaudLabel::GSigma: return {0, 1, 1, 0};
    case RaynaudLabel::GSigmaBar: return {1, 0, 0, 1};
    case RaynaudLabel::AlphaP2Sigma: return {0, 1, 0, 0};
    case RaynaudLabel::AlphaP2SigmaBar: return {0, 0, 0, 1};
    case RaynaudLabel::AlphaP2DualSigma: return {0, 0, 1, 0};
    case RaynaudLabel::AlphaP2DualSigmaBar: return {1, 0, 0, 0};
  }
  throw std::logic_error("unknown label");
}

inline std::optional<RaynaudLabel> label_of(const RaynaudVector& v) {
  for (auto l : kAllRaynaudLabels)
    if (raynaud_vector(l) == v) return l;
  return std::nullopt;
}

inline const char* label_name(RaynaudLabel l) {
  switch (l) {
    case RaynaudLabel::Etale: return "kappa*Z/p";
    case RaynaudLabel::Multiplicative: return "kappa*mu_p";
    case RaynaudLabel::AlphaP: return "kappa*alpha_p";
    case RaynaudLabel::GSigma: return "G[p]_Sigma";
    case RaynaudLabel::GSigmaBar: return "G[p]_SigmaBar";
    case RaynaudLabel::AlphaP2Sigma: return "alpha_p2_Sigma";
    case RaynaudLabel::AlphaP2SigmaBar: return "alpha_p2_SigmaBar";
    case RaynaudLabel::AlphaP2DualSigma: return "alpha*_p2_Sigma";
    case RaynaudLabel::AlphaP2DualSigmaBar: return "alpha*_p2_SigmaBar";
  }
  return "?";
}

inline std::optional<RaynaudLabel> label_from_name(const std::string& s) {
  for (auto l : kAllRaynaudLabels)
    if (s == label_name(l)) return l;
  return std::nullopt;
}

inline RaynaudLabel dual_label(RaynaudLabel l) { return *label_of(raynaud_vector(l).dual()); }
inline RaynaudLabel twist_label(RaynaudLabel l) { return *label_of(raynaud_vector(l).twist()); }

// Types that never occur as isotropic subgroups of A[p] for signature (2,1).
inline bool is_forbidden(RaynaudLabel l) {
  return l == RaynaudLabel::GSigmaBar || l == RaynaudLabel::AlphaP2SigmaBar ||
         l == RaynaudLabel::AlphaP2DualSigmaBar;
}

struct InvariantTriple {
  int alpha = 0;
  int beta = 0;
  std::optional<int> gamma;
  bool operator==(const InvariantTriple& o) const {
    return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
  }
  std::string to_string() const {
    return "(" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
           (gamma ? std::to_string(*gamma) : std::string("-")) + ")";
  }
};

inline InvariantTriple invariants_of(RaynaudLabel l) {
  auto v = raynaud_vector(l);
  return {2 - v.b0 - v.b1, 2 - v.a0 - v.a1, std::nullopt};
}

// Representative space over k: n0 spans the Sigma line, n1 the SigmaBar line.
inline DieudonneSpace raynaud_representative(const FieldPtr& k, RaynaudLabel l) {
  auto v = raynaud_vector(l);
  FMatrix f(2, 2, 0), vv(2, 2, 0);
  f(1, 0) = static_cast<FieldElem>(v.a0);
  f(0, 1) = static_cast<FieldElem>(v.a1);
  vv(0, 1) = static_cast<FieldElem>(v.b0);
  vv(1, 0) = static_cast<FieldElem>(v.b1);
  return DieudonneSpace(k, {Grade::Sigma, Grade::SigmaBar}, f, vv);
}

inline bool is_balanced(const DieudonneSpace& n) {
  if (n.dim() != 2) throw std::invalid_argument("expected a 2-dimensional space");
  return n.type_of(n.whole()) == SignatureType{1, 1};
}

inline RaynaudLabel classify_rank_p2(const DieudonneSpace& n) {
  if (!is_balanced(n)) throw std::invalid_argument("space is not balanced");
  const FVector n0 = n.graded_piece(Grade::Sigma).vector(0);
  const FVector n1 = n.graded_piece(Grade::SigmaBar).vector(0);
  const Field& k = n.field();
  auto nz = [&](const FVector& x) { return is_zero_vec(k, x) ? 0 : 1; };
  RaynaudVector v{nz(n.apply_F(n0)), nz(n.apply_V(n1)), nz(n.apply_F(n1)), nz(n.apply_V(n0))};
  auto l = label_of(v);
  if (!l) throw std::logic_error("vanishing pattern " + v.to_string() + " violates a_i b_i = 0");
  return *l;
}

// (dim ker V, dim coker F) computed on the space itself.
inline InvariantTriple alpha_beta(const DieudonneSpace& n) {
  const int alpha = static_cast<int>(n.kernel_V().dim());
  const int beta = static_cast<int>(n.dim() - n.image(Op::F, n.whole()).dim());
  return {alpha, beta, std::nullopt};
}

// Type of ker V on W/U for V-stable U inside W.
inline SignatureType lie_type_of_quotient(const DieudonneSpace& m, const Subspace& w, const Subspace& u) {
  if (!w.contains(u)) throw std::invalid_argument("quotient needs U inside W");
  auto mult = [&](Grade g) {
    const Subspace wg = m.graded_part(w, g);
    const Subspace img = m.image(Op::V, wg).sum(u);
    return static_cast<int>(wg.dim()) - static_cast<int>(img.dim() - u.dim()) -
           static_cast<int>(m.graded_part(u, g).dim());
  };
  return {mult(Grade::Sigma), mult(Grade::SigmaBar)};
}

// gamma = dim Lie(H^perp / H).
inline int gamma(const DieudonneSpace& m, const Subspace& h) {
  const Subspace hp = m.annihilator(h);
  if (!hp.contains(h)) throw std::invalid_argument("subgroup is not isotropic");
  return lie_type_of_quotient(m, hp, h).size();
}

}  // namespace udm
