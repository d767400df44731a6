#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "udm/galois_ring.hpp"
#include "udm/matrix.hpp"
#include "udm/subspace.hpp"

namespace udm {

// O_E acts on each basis vector through Sigma or through its conjugate.
enum class Grade { Sigma, SigmaBar };

inline Grade flip(Grade g) { return g == Grade::Sigma ? Grade::SigmaBar : Grade::Sigma; }
inline const char* grade_name(Grade g) { return g == Grade::Sigma ? "Sigma" : "SigmaBar"; }

using Grading = std::vector<Grade>;

inline Grading flip(const Grading& g) {
  Grading out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = flip(g[i]);
  return out;
}

inline std::vector<std::size_t> indices_of(const Grading& g, Grade which) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] == which) out.push_back(i);
  return out;
}

// Multiset over {Sigma, SigmaBar}.
struct SignatureType {
  int sigma = 0;
  int sigma_bar = 0;
  int size() const { return sigma + sigma_bar; }
  bool operator==(const SignatureType& o) const { return sigma == o.sigma && sigma_bar == o.sigma_bar; }
  bool operator!=(const SignatureType& o) const { return !(*this == o); }
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < sigma; ++i, first = false) s += first ? "Sigma" : ",Sigma";
    for (int i = 0; i < sigma_bar; ++i, first = false) s += first ? "SigmaBar" : ",SigmaBar";
    return s + "}";
  }
};

enum class Op { F, V };

// x -> A sigma^e(x).
struct Semilinear {
  FMatrix matrix;
  int twist = 0;
};

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  bool mentions(const std::string& word) const {
    for (const auto& v : violations)
      if (v.find(word) != std::string::npos) return true;
    return false;
  }
};

// Graded k-space with sigma-linear F (x -> A_F sigma(x)), sigma^{-1}-linear V
// (x -> A_V sigma^{-1}(x)) and an optional alternating Gram matrix.
class DieudonneSpace {
 public:
  DieudonneSpace() = default;
  DieudonneSpace(FieldPtr k, Grading grading, FMatrix f, FMatrix v, std::optional<FMatrix> pairing = std::nullopt)
      : k_(std::move(k)), grading_(std::move(grading)), f_(std::move(f)), v_(std::move(v)), pairing_(std::move(pairing)) {
    const std::size_t n = grading_.size();
    if (f_.rows() != n || f_.cols() != n || v_.rows() != n || v_.cols() != n)
      throw std::invalid_argument("operator matrices must be square of the space's dimension");
    if (pairing_ && (pairing_->rows() != n || pairing_->cols() != n))
      throw std::invalid_argument("pairing must be square of the space's dimension");
  }

  const FieldPtr& field_ptr() const { return k_; }
  const Field& field() const { return *k_; }
  std::size_t dim() const { return grading_.size(); }
  const Grading& grading() const { return grading_; }
  const FMatrix& F_matrix() const { return f_; }
  const FMatrix& V_matrix() const { return v_; }
  bool has_pairing() const { return pairing_.has_value(); }
  const FMatrix& pairing() const {
    if (!pairing_) throw std::logic_error("space carries no pairing");
    return *pairing_;
  }
  Semilinear semilinear(Op which) const {
    return which == Op::F ? Semilinear{f_, 1} : Semilinear{v_, -1};
  }

  FVector apply(Op which, const FVector& x) const {
    return which == Op::F ? apply_F(x) : apply_V(x);
  }
  FVector apply_F(const FVector& x) const { return mat_vec(*k_, f_, vec_frob(*k_, x, 1)); }
  FVector apply_V(const FVector& x) const { return mat_vec(*k_, v_, vec_frob(*k_, x, -1)); }

  Subspace image(Op which, const Subspace& s) const {
    std::vector<FVector> out;
    for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(apply(which, s.vector(i)));
    return Subspace::span(k_, dim(), out);
  }
  // ker(x -> A sigma^e x) = sigma^{-e}(ker A).
  Subspace kernel(Op which) const {
    const auto sl = semilinear(which);
    return Subspace::span(k_, dim(), udm::kernel(*k_, sl.matrix)).twist(-sl.twist);
  }
  Subspace kernel_F() const { return kernel(Op::F); }
  Subspace kernel_V() const { return kernel(Op::V); }
  bool is_stable(const Subspace& s) const {
    return s.contains(image(Op::F, s)) && s.contains(image(Op::V, s));
  }

  Subspace whole() const { return Subspace::whole(k_, dim()); }
  Subspace zero() const { return Subspace(k_, dim()); }
  Subspace graded_piece(Grade g) const { return Subspace::coordinate(k_, dim(), indices_of(grading_, g)); }
  Subspace graded_part(const Subspace& s, Grade g) const { return s.intersect(graded_piece(g)); }
  bool is_graded(const Subspace& s) const {
    return graded_part(s, Grade::Sigma).dim() + graded_part(s, Grade::SigmaBar).dim() == s.dim();
  }
  SignatureType type_of(const Subspace& s) const {
    SignatureType t{static_cast<int>(graded_part(s, Grade::Sigma).dim()),
                    static_cast<int>(graded_part(s, Grade::SigmaBar).dim())};
    if (t.size() != static_cast<int>(s.dim())) throw std::invalid_argument("subspace is not graded");
    return t;
  }
  SignatureType lie_type() const { return type_of(kernel_V()); }

  // <x, y> = x^T G y.
  FieldElem pair(const FVector& x, const FVector& y) const {
    const FVector gy = mat_vec(*k_, pairing(), y);
    FieldElem s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = k_->add(s, k_->mul(x[i], gy[i]));
    return s;
  }
  // {x : <x, sigma^e(u)> = 0 for all u in s}; e = 0 is the bilinear annihilator.
  Subspace annihilator(const Subspace& s, int sesqui = 0) const {
    const FMatrix& g = pairing();
    if (determinant(*k_, g) == 0) throw std::domain_error("pairing is degenerate");
    FMatrix rows(0, dim());
    for (std::size_t i = 0; i < s.dim(); ++i) rows.append_row(mat_vec(*k_, g, vec_frob(*k_, s.vector(i), sesqui)));
    if (rows.rows() == 0) return whole();
    return Subspace::span(k_, dim(), udm::kernel(*k_, rows));
  }
  bool is_isotropic(const Subspace& s) const { return annihilator(s).contains(s); }

  // M^{(p^r)}: entries twisted by sigma^r; odd r swaps the O_E-grading.
  DieudonneSpace twist(int r) const {
    std::optional<FMatrix> g;
    if (pairing_) g = mat_frob(*k_, *pairing_, r);
    return DieudonneSpace(k_, (r % 2 != 0) ? flip(grading_) : grading_, mat_frob(*k_, f_, r), mat_frob(*k_, v_, r), g);
  }
  // Linear dual with F*(xi) = sigma o xi o V and V*(xi) = sigma^{-1} o xi o F.
  DieudonneSpace dual() const {
    return DieudonneSpace(k_, grading_, transpose(mat_frob(*k_, v_, 1)), transpose(mat_frob(*k_, f_, -1)));
  }
  // Structure transported to new coordinates x = g x'.
  DieudonneSpace change_basis(const FMatrix& g) const {
    auto gi = inverse(*k_, g);
    if (!gi) throw std::invalid_argument("change of basis is singular");
    Grading gr(dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      std::optional<Grade> col;
      for (std::size_t i = 0; i < dim(); ++i) {
        if (g(i, j) == 0) continue;
        if (col && *col != grading_[i]) throw std::invalid_argument("change of basis mixes gradings");
        col = grading_[i];
      }
      gr[j] = *col;
    }
    FMatrix nf = mat_mul(*k_, *gi, mat_mul(*k_, f_, mat_frob(*k_, g, 1)));
    FMatrix nv = mat_mul(*k_, *gi, mat_mul(*k_, v_, mat_frob(*k_, g, -1)));
    std::optional<FMatrix> np;
    if (pairing_) np = mat_mul(*k_, transpose(g), mat_mul(*k_, *pairing_, g));
    return DieudonneSpace(k_, gr, nf, nv, np);
  }

  // The sub-object on a stable graded subspace, in its graded basis (Sigma vectors first).
  DieudonneSpace restrict_to(const Subspace& s) const {
    if (!is_stable(s)) throw std::invalid_argument("subspace is not F/V-stable");
    std::vector<FVector> basis;
    Grading gr;
    for (Grade g : {Grade::Sigma, Grade::SigmaBar}) {
      auto part = graded_part(s, g);
      for (auto& v : part.vectors()) {
        basis.push_back(v);
        gr.push_back(g);
      }
    }
    if (basis.size() != s.dim()) throw std::invalid_argument("subspace is not graded");
    const std::size_t m = basis.size();
    FMatrix bm(0, dim());
    for (auto& v : basis) bm.append_row(v);
    FMatrix bt = transpose(bm);
    auto coords = [&](const FVector& y) {
      auto x = solve(*k_, bt, y);
      if (!x) throw std::logic_error("image left the subspace");
      return *x;
    };
    FMatrix nf(m, m), nv(m, m);
    for (std::size_t j = 0; j < m; ++j) {
      nf.set_col(j, coords(apply_F(basis[j])));
      nv.set_col(j, coords(apply_V(basis[j])));
    }
    return DieudonneSpace(k_, gr, nf, nv);
  }

  DieudonneSpace with_pairing(std::optional<FMatrix> g) const {
    return DieudonneSpace(k_, grading_, f_, v_, std::move(g));
  }

  AxiomReport check_axioms() const {
    AxiomReport rep;
    const Field& k = *k_;
    const std::size_t n = dim();
    if (n % 2 != 0) rep.add("dimension: odd dimension");
    if (!is_zero_matrix(k, mat_mul(k, f_, mat_frob(k, v_, 1)))) rep.add("p-torsion: F V != 0");
    if (!is_zero_matrix(k, mat_mul(k, v_, mat_frob(k, f_, -1)))) rep.add("p-torsion: V F != 0");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (grading_[i] == grading_[j] && f_(i, j) != 0) rep.add("grading: F preserves the grading");
        if (grading_[i] == grading_[j] && v_(i, j) != 0) rep.add("grading: V preserves the grading");
      }
    if (pairing_) {
      const FMatrix& g = *pairing_;
      for (std::size_t i = 0; i < n; ++i) {
        if (g(i, i) != 0) rep.add("pairing: not alternating");
        for (std::size_t j = 0; j < n; ++j) {
          if (g(i, j) != k.neg(g(j, i))) rep.add("pairing: not alternating");
          if (grading_[i] == grading_[j] && g(i, j) != 0) rep.add("pairing: graded pieces not isotropic");
        }
      }
      if (determinant(k, g) == 0) rep.add("pairing: degenerate");
      // <F e_i, e_j> = sigma(<e_i, V e_j>)  <=>  A_F^T G = sigma(G A_V).
      if (mat_mul(k, transpose(f_), g) != mat_frob(k, mat_mul(k, g, v_), 1)) rep.add("pairing: adjunction fails");
    }
    return rep;
  }

 private:
  FieldPtr k_;
  Grading grading_;
  FMatrix f_;
  FMatrix v_;
  std::optional<FMatrix> pairing_;
};

// Free module of rank n over GR(p^2, d) with F, V and pairing, FV = VF = p.
class DieudonneLattice {
 public:
  DieudonneLattice() = default;
  DieudonneLattice(RingPtr R, Grading grading, GRMatrix f, GRMatrix v, std::optional<GRMatrix> pairing = std::nullopt)
      : R_(std::move(R)), grading_(std::move(grading)), f_(std::move(f)), v_(std::move(v)), pairing_(std::move(pairing)) {
    if (R_->n() != 2) throw std::invalid_argument("lattices are kept modulo p^2");
    const std::size_t n = grading_.size();
    if (f_.rows() != n || f_.cols() != n || v_.rows() != n || v_.cols() != n)
      throw std::invalid_argument("operator matrices must be square of the lattice's rank");
  }

  const RingPtr& ring_ptr() const { return R_; }
  const GaloisRing& ring() const { return *R_; }
  std::size_t rank() const { return grading_.size(); }
  const Grading& grading() const { return grading_; }
  const GRMatrix& F_matrix() const { return f_; }
  const GRMatrix& V_matrix() const { return v_; }
  bool has_pairing() const { return pairing_.has_value(); }
  const GRMatrix& pairing() const {
    if (!pairing_) throw std::logic_error("lattice carries no pairing");
    return *pairing_;
  }

  GRVector apply_F(const GRVector& x) const { return mat_vec(*R_, f_, vec_frob(*R_, x, 1)); }
  GRVector apply_V(const GRVector& x) const { return mat_vec(*R_, v_, vec_frob(*R_, x, -1)); }
  GRElem pair(const GRVector& x, const GRVector& y) const {
    GRVector gy = mat_vec(*R_, pairing(), y);
    GRElem s = R_->zero();
    for (std::size_t i = 0; i < x.size(); ++i) s = R_->add(s, R_->mul(x[i], gy[i]));
    return s;
  }

  DieudonneSpace reduce() const {
    std::optional<FMatrix> g;
    if (pairing_) g = reduce_matrix(*R_, *pairing_);
    return DieudonneSpace(R_->residue_field_ptr(), grading_, reduce_matrix(*R_, f_), reduce_matrix(*R_, v_), g);
  }

  DieudonneLattice change_basis(const GRMatrix& g) const {
    auto gi = inverse(*R_, g);
    if (!gi) throw std::invalid_argument("change of basis is not invertible");
    Grading gr(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
      std::optional<Grade> col;
      for (std::size_t i = 0; i < rank(); ++i) {
        if (R_->is_zero(g(i, j))) continue;
        if (col && *col != grading_[i]) throw std::invalid_argument("change of basis mixes gradings");
        col = grading_[i];
      }
      gr[j] = *col;
    }
    GRMatrix nf = mat_mul(*R_, *gi, mat_mul(*R_, f_, mat_frob(*R_, g, 1)));
    GRMatrix nv = mat_mul(*R_, *gi, mat_mul(*R_, v_, mat_frob(*R_, g, -1)));
    std::optional<GRMatrix> np;
    if (pairing_) np = mat_mul(*R_, transpose(g), mat_mul(*R_, *pairing_, g));
    return DieudonneLattice(R_, gr, nf, nv, np);
  }

  DieudonneLattice with_pairing(std::optional<GRMatrix> g) const {
    return DieudonneLattice(R_, grading_, f_, v_, std::move(g));
  }

  AxiomReport check_axioms() const {
    AxiomReport rep;
    const GaloisRing& R = *R_;
    const std::size_t n = rank();
    const GRMatrix pI = mat_scale(R, identity(R, n), R.from_int(R.p()));
    if (mat_mul(R, f_, mat_frob(R, v_, 1)) != pI) rep.add("p-torsion: F V != p");
    if (mat_mul(R, v_, mat_frob(R, f_, -1)) != pI) rep.add("p-torsion: V F != p");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (grading_[i] == grading_[j] && !R.is_zero(f_(i, j))) rep.add("grading: F preserves the grading");
        if (grading_[i] == grading_[j] && !R.is_zero(v_(i, j))) rep.add("grading: V preserves the grading");
      }
    if (pairing_) {
      const GRMatrix& g = *pairing_;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (g(i, j) != R.neg(g(j, i))) rep.add("pairing: not alternating");
          if (grading_[i] == grading_[j] && !R.is_zero(g(i, j))) rep.add("pairing: graded pieces not isotropic");
        }
      if (determinant(R.residue_field(), reduce_matrix(R, g)) == 0) rep.add("pairing: not perfect");
      if (mat_mul(R, transpose(f_), g) != mat_frob(R, mat_mul(R, g, v_), 1)) rep.add("pairing: adjunction fails");
    }
    for (const auto& v : reduce().check_axioms().violations) rep.add("reduction: " + v);
    return rep;
  }

 private:
  RingPtr R_;
  Grading grading_;
  GRMatrix f_;
  GRMatrix v_;
  std::optional<GRMatrix> pairing_;
};

}  // namespace udm
