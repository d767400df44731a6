#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "udm/matrix.hpp"

namespace udm {

// A subspace of k^n stored by its reduced row echelon basis, so equal spaces compare equal.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldPtr k, std::size_t n) : k_(std::move(k)), n_(n), basis_(0, n) {}

  static Subspace span(FieldPtr k, std::size_t n, const FMatrix& rows) {
    Subspace s(std::move(k), n);
    if (rows.rows() > 0) {
      if (rows.cols() != n) throw std::invalid_argument("vector length mismatch");
      auto e = rref(*s.k_, rows);
      s.basis_ = e.reduced;
      s.pivots_ = e.pivots;
    }
    return s;
  }
  static Subspace span(FieldPtr k, std::size_t n, const std::vector<FVector>& vs) {
    FMatrix m(0, n);
    for (const auto& v : vs) m.append_row(v);
    return span(std::move(k), n, m);
  }
  static Subspace whole(FieldPtr k, std::size_t n) { return span(k, n, identity(*k, n)); }
  static Subspace coordinate(FieldPtr k, std::size_t n, const std::vector<std::size_t>& idx) {
    FMatrix m(0, n);
    for (auto i : idx) {
      FVector v(n, 0);
      v[i] = 1;
      m.append_row(v);
    }
    return span(std::move(k), n, m);
  }

  const FieldPtr& field_ptr() const { return k_; }
  const Field& field() const { return *k_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const FMatrix& basis() const { return basis_; }
  FVector vector(std::size_t i) const { return basis_.row(i); }
  std::vector<FVector> vectors() const {
    std::vector<FVector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Canonical remainder of v modulo the subspace.
  FVector reduce(FVector v) const {
    const Field& k = *k_;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      const FieldElem f = v[pivots_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = k.sub(v[j], k.mul(f, basis_(i, j)));
    }
    return v;
  }
  bool contains(const FVector& v) const { return is_zero_vec(*k_, reduce(v)); }
  bool contains(const Subspace& o) const {
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.vector(i))) return false;
    return true;
  }
  // Coefficients of v in the stored basis; nullopt if v is outside.
  std::optional<FVector> coordinates(const FVector& v) const {
    if (!contains(v)) return std::nullopt;
    FVector c(dim());
    for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  Subspace sum(const Subspace& o) const {
    check_same(o);
    FMatrix m = basis_;
    for (std::size_t i = 0; i < o.dim(); ++i) m.append_row(o.vector(i));
    return span(k_, n_, m);
  }
  // Zassenhaus: rows [u u; w 0] reduce to a block whose zero-left rows span the intersection.
  Subspace intersect(const Subspace& o) const {
    check_same(o);
    FMatrix z(0, 2 * n_);
    for (std::size_t i = 0; i < dim(); ++i) {
      FVector r(2 * n_);
      for (std::size_t j = 0; j < n_; ++j) r[j] = r[n_ + j] = basis_(i, j);
      z.append_row(r);
    }
    for (std::size_t i = 0; i < o.dim(); ++i) {
      FVector r(2 * n_, 0);
      for (std::size_t j = 0; j < n_; ++j) r[j] = o.basis_(i, j);
      z.append_row(r);
    }
    auto e = rref(*k_, z);
    FMatrix out(0, n_);
    for (std::size_t i = 0; i < e.reduced.rows(); ++i) {
      if (e.pivots[i] < n_) continue;
      FVector r(n_);
      for (std::size_t j = 0; j < n_; ++j) r[j] = e.reduced(i, n_ + j);
      out.append_row(r);
    }
    return span(k_, n_, out);
  }

  // Entry-wise sigma^r of the basis.
  Subspace twist(int r) const { return span(k_, n_, mat_frob(*k_, basis_, r)); }
  // Image under x -> A x.
  Subspace image(const FMatrix& a) const {
    FMatrix m(0, a.rows());
    for (std::size_t i = 0; i < dim(); ++i) m.append_row(mat_vec(*k_, a, vector(i)));
    return span(k_, a.rows(), m);
  }

  bool operator==(const Subspace& o) const { return n_ == o.n_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.data() < o.basis_.data();
  }

 private:
  void check_same(const Subspace& o) const {
    if (n_ != o.n_) throw std::invalid_argument("subspaces live in different ambients");
  }

  FieldPtr k_;
  std::size_t n_ = 0;
  FMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace udm
