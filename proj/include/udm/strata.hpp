#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "udm/dieudonne.hpp"
#include "udm/raynaud.hpp"

namespace udm {

enum class Stratum { MuOrdinary, Gss, Ssp };

inline const char* stratum_name(Stratum s) {
  switch (s) {
    case Stratum::MuOrdinary: return "mu_ordinary";
    case Stratum::Gss: return "gss";
    case Stratum::Ssp: return "ssp";
  }
  return "?";
}

// Type of ker F \cap ker V; its size is the a-number.
inline SignatureType a_number_type(const DieudonneSpace& m) {
  return m.type_of(m.kernel_F().intersect(m.kernel_V()));
}

// Hasse test on the contravariant side: with omega = ann(Lie) (= ker V of the dual), V of
// the dual applied twice to a SigmaBar vector outside omega must leave omega.
inline bool hasse_nonzero(const DieudonneSpace& m) {
  const DieudonneSpace d = m.dual();
  const Subspace omega = d.kernel_V();
  const Subspace bar = d.graded_piece(Grade::SigmaBar);
  if (bar.dim() != omega.intersect(bar).dim() + 1)
    throw std::invalid_argument("Lie algebra does not have type (2,1)");
  FVector xi;
  for (const auto& v : bar.vectors())
    if (!omega.contains(v)) {
      xi = v;
      break;
    }
  return !omega.contains(d.apply_V(d.apply_V(xi)));
}

inline Stratum classify_stratum(const DieudonneSpace& m) {
  if (m.lie_type() != SignatureType{2, 1})
    throw std::invalid_argument("Lie algebra type " + m.lie_type().to_string() + " is not (2,1)");
  if (hasse_nonzero(m)) return Stratum::MuOrdinary;
  return a_number_type(m).size() == 3 ? Stratum::Ssp : Stratum::Gss;
}

// The canonical modules below use the basis (e1, e2, e3, f1, f2, f3), e's of type Sigma.
inline Grading standard_grading() {
  return {Grade::Sigma, Grade::Sigma, Grade::Sigma, Grade::SigmaBar, Grade::SigmaBar, Grade::SigmaBar};
}

namespace detail {

// (target, source, coefficient a + b p): image of basis vector `source` has `coefficient` at `target`.
struct Entry {
  int target;
  int source;
  long long unit;
  long long p_mult;
};

inline GRMatrix integer_matrix(const GaloisRing& R, std::size_t n, const std::vector<Entry>& es) {
  GRMatrix m(n, n, R.zero());
  for (const auto& e : es) m(e.target, e.source) = R.from_int(e.unit + e.p_mult * R.p());
  return m;
}

inline GRMatrix alternating(const GaloisRing& R, std::size_t n, const std::vector<std::tuple<int, int, long long>>& pairs) {
  GRMatrix g(n, n, R.zero());
  for (auto [i, j, c] : pairs) {
    g(i, j) = R.from_int(c);
    g(j, i) = R.from_int(-c);
  }
  return g;
}

enum : int { e1 = 0, e2 = 1, e3 = 2, f1 = 3, f2 = 4, f3 = 5 };

}  // namespace detail

// Direct sum of the multiplicative, G_Sigma and etale pieces: (e1, f1) = (u0, u1) carries mu_p,
// (e2, f2) = (g0, g1) carries G_Sigma, (e3, f3) = (w0, w1) carries Z/p.
inline DieudonneLattice make_mu_ordinary_lattice(const RingPtr& R) {
  using namespace detail;
  GRMatrix F = integer_matrix(*R, 6, {{f1, e1, 1, 0}, {e1, f1, 1, 0}, {e2, f2, 1, 0}, {f2, e2, 0, -1},
                                      {f3, e3, 0, 1}, {e3, f3, 0, 1}});
  GRMatrix V = integer_matrix(*R, 6, {{f1, e1, 0, 1}, {e1, f1, 0, 1}, {f3, e3, 1, 0}, {e3, f3, 1, 0},
                                      {e2, f2, -1, 0}, {f2, e2, 0, 1}});
  GRMatrix G = alternating(*R, 6, {{e1, f3, 1}, {f1, e3, 1}, {e2, f2, 1}});
  return DieudonneLattice(R, standard_grading(), F, V, G);
}

// Lift of the general supersingular module with F, V as in the braid table mod p.
inline DieudonneLattice make_gss_braid_lattice(const RingPtr& R) {
  using namespace detail;
  GRMatrix F = integer_matrix(*R, 6, {{f3, e1, -1, 0}, {e1, f2, 1, 0}, {e2, f3, 1, 0},
                                      {f1, e2, 0, 1}, {f2, e3, 0, 1}, {e3, f1, 0, 1}});
  GRMatrix V = integer_matrix(*R, 6, {{f1, e3, 1, 0}, {e2, f1, 1, 0}, {e3, f2, 1, 0},
                                      {e1, f3, 0, -1}, {f2, e1, 0, 1}, {f3, e2, 0, 1}});
  GRMatrix G = alternating(*R, 6, {{e1, f1, -1}, {e2, f2, 1}, {e3, f3, -1}});
  return DieudonneLattice(R, standard_grading(), F, V, G);
}

// Superspecial module: F e_i = -p f_i (i = 1, 2), F e3 = -f3, F f_i = e_i, F f3 = p e3, V alike.
inline DieudonneLattice make_ssp_lattice(const RingPtr& R) {
  using namespace detail;
  GRMatrix F = integer_matrix(*R, 6, {{f1, e1, 0, -1}, {f2, e2, 0, -1}, {f3, e3, -1, 0},
                                      {e1, f1, 1, 0}, {e2, f2, 1, 0}, {e3, f3, 0, 1}});
  GRMatrix V = integer_matrix(*R, 6, {{f1, e1, 0, 1}, {f2, e2, 0, 1}, {f3, e3, 1, 0},
                                      {e1, f1, -1, 0}, {e2, f2, -1, 0}, {e3, f3, 0, -1}});
  GRMatrix G = alternating(*R, 6, {{e1, f1, 1}, {e2, f2, 1}, {e3, f3, 1}});
  return DieudonneLattice(R, standard_grading(), F, V, G);
}

inline DieudonneSpace make_mu_ordinary(const FieldPtr& k) { return make_mu_ordinary_lattice(GaloisRing::make(k, 2)).reduce(); }
inline DieudonneSpace make_gss_braid(const FieldPtr& k) { return make_gss_braid_lattice(GaloisRing::make(k, 2)).reduce(); }
inline DieudonneSpace make_ssp(const FieldPtr& k) { return make_ssp_lattice(GaloisRing::make(k, 2)).reduce(); }

// Multiplies the Gram matrix by c; c = delta passes between the integral and the delta-scaled
// normalizations. Annihilators do not change; adjunction picks up the factor c / sigma(c).
inline DieudonneSpace rescale_pairing(const DieudonneSpace& m, FieldElem c) {
  return m.with_pairing(mat_scale(m.field(), m.pairing(), c));
}
inline DieudonneLattice rescale_pairing(const DieudonneLattice& m, const GRElem& c) {
  return m.with_pairing(mat_scale(m.ring(), m.pairing(), c));
}

}  // namespace udm
