#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "udm/field.hpp"
#include "udm/galois_ring.hpp"

namespace udm {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }
  const std::vector<T>& data() const { return data_; }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  static Matrix from_rows(const std::vector<std::vector<T>>& rs, std::size_t cols) {
    Matrix m(0, cols);
    m.cols_ = cols;
    for (const auto& r : rs) m.append_row(r);
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using FMatrix = Matrix<FieldElem>;
using GRMatrix = Matrix<GRElem>;
using FVector = std::vector<FieldElem>;
using GRVector = std::vector<GRElem>;

// Operations below take the coefficient ring (Field or GaloisRing) explicitly.

template <class R>
Matrix<typename R::Elem> identity(const R& ring, std::size_t n) {
  Matrix<typename R::Elem> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class R>
Matrix<typename R::Elem> zeros(const R& ring, std::size_t r, std::size_t c) {
  return Matrix<typename R::Elem>(r, c, ring.zero());
}

template <class R>
Matrix<typename R::Elem> mat_mul(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  Matrix<typename R::Elem> r(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const auto& x = a(i, t);
      if (ring.is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = ring.add(r(i, j), ring.mul(x, b(t, j)));
    }
  return r;
}

template <class R>
std::vector<typename R::Elem> mat_vec(const R& ring, const Matrix<typename R::Elem>& a,
                                      const std::vector<typename R::Elem>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  std::vector<typename R::Elem> r(a.rows(), ring.zero());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (ring.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) r[i] = ring.add(r[i], ring.mul(a(i, j), v[j]));
  }
  return r;
}

template <class R>
Matrix<typename R::Elem> mat_add(const R& ring, const Matrix<typename R::Elem>& a,
                                 const Matrix<typename R::Elem>& b) {
  Matrix<typename R::Elem> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.add(a(i, j), b(i, j));
  return r;
}

template <class R>
Matrix<typename R::Elem> mat_scale(const R& ring, const Matrix<typename R::Elem>& a,
                                   const typename R::Elem& s) {
  Matrix<typename R::Elem> r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = ring.mul(a(i, j), s);
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

// Entry-wise sigma^r.
template <class R>
Matrix<typename R::Elem> mat_frob(const R& ring, const Matrix<typename R::Elem>& a, int r) {
  Matrix<typename R::Elem> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.frob(a(i, j), r);
  return out;
}

template <class R>
std::vector<typename R::Elem> vec_frob(const R& ring, const std::vector<typename R::Elem>& v, int r) {
  std::vector<typename R::Elem> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.frob(v[i], r);
  return out;
}

template <class R>
bool is_zero_matrix(const R& ring, const Matrix<typename R::Elem>& a) {
  for (const auto& x : a.data())
    if (!ring.is_zero(x)) return false;
  return true;
}

template <class R>
bool is_zero_vec(const R& ring, const std::vector<typename R::Elem>& v) {
  for (const auto& x : v)
    if (!ring.is_zero(x)) return false;
  return true;
}

// ---- Linear algebra over a finite field ----

struct EchelonResult {
  FMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form; pivots normalized to 1.
inline EchelonResult rref(const Field& k, FMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t pr = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr == m.rows()) continue;
    m.swap_rows(row, pr);
    const FieldElem inv = k.inv(m(row, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(row, j) = k.mul(m(row, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, c) == 0) continue;
      const FieldElem f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  FMatrix reduced(row, m.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {reduced, pivots};
}

inline std::size_t rank(const Field& k, const FMatrix& m) { return rref(k, m).pivots.size(); }

// Basis (as rows, in reduced echelon form) of {x : m x = 0}.
inline FMatrix kernel(const Field& k, const FMatrix& m) {
  const std::size_t n = m.cols();
  auto e = rref(k, m);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  FMatrix out(0, n);
  for (std::size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    FVector v(n, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = k.neg(e.reduced(i, fc));
    out.append_row(v);
  }
  return rref(k, out).reduced;
}

// Some x with m x = b, if one exists.
inline std::optional<FVector> solve(const Field& k, const FMatrix& m, const FVector& b) {
  FMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto e = rref(k, aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  FVector x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

inline std::optional<FMatrix> inverse(const Field& k, const FMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  FMatrix aug(n, 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto e = rref(k, aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  FMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

inline FieldElem determinant(const Field& k, FMatrix m) {
  const std::size_t n = m.rows();
  FieldElem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t i = c; i < n; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr == n) return 0;
    if (pr != c) {
      m.swap_rows(pr, c);
      det = k.neg(det);
    }
    det = k.mul(det, m(c, c));
    const FieldElem inv = k.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const FieldElem f = k.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(c, j)));
    }
  }
  return det;
}

// ---- Linear algebra over GR(p^2, d) ----

inline FMatrix reduce_matrix(const GaloisRing& R, const GRMatrix& a) {
  FMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = R.reduce(a(i, j));
  return r;
}

inline GRMatrix teichmuller_matrix(const GaloisRing& R, const FMatrix& a) {
  GRMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = R.teichmuller(a(i, j));
  return r;
}

inline GRVector teichmuller_vec(const GaloisRing& R, const FVector& v) {
  GRVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = R.teichmuller(v[i]);
  return r;
}

inline FVector reduce_vec(const GaloisRing& R, const GRVector& v) {
  FVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = R.reduce(v[i]);
  return r;
}

// Inverse of a matrix whose reduction is invertible (Gauss-Jordan with unit pivots).
inline std::optional<GRMatrix> inverse(const GaloisRing& R, const GRMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("inverse of non-square matrix");
  GRMatrix a(n, 2 * n, R.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = R.one();
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = n;
    for (std::size_t i = c; i < n; ++i)
      if (R.is_unit(a(i, c))) {
        pr = i;
        break;
      }
    if (pr == n) return std::nullopt;
    a.swap_rows(c, pr);
    const GRElem inv = R.inv(a(c, c));
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) = R.mul(a(c, j), inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || R.is_zero(a(i, c))) continue;
      const GRElem f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) = R.sub(a(i, j), R.mul(f, a(c, j)));
    }
  }
  GRMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

// Canonical generating set of a submodule of GR(p^2, d)^n.
// Rows split into unit-pivot rows (their reductions form the reduced echelon basis of the
// image mod p, their p-digits reduced against the second layer) followed by p-multiples
// p*w_j where w_j is the reduced echelon basis of {x : p x~ in N}.
struct SubmoduleForm {
  GRMatrix unit_rows;
  FMatrix p_layer;
  bool operator==(const SubmoduleForm& o) const {
    return unit_rows == o.unit_rows && p_layer == o.p_layer;
  }
};

inline SubmoduleForm submodule_form(const GaloisRing& R, const GRMatrix& gens) {
  if (R.n() != 2) throw std::invalid_argument("submodule form implemented for length 2");
  const Field& k = R.residue_field();
  const std::size_t n = gens.cols();
  GRMatrix a = gens;
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < n && row < a.rows(); ++c) {
    std::size_t pr = a.rows();
    for (std::size_t i = row; i < a.rows(); ++i)
      if (R.is_unit(a(i, c))) {
        pr = i;
        break;
      }
    if (pr == a.rows()) continue;
    a.swap_rows(row, pr);
    const GRElem inv = R.inv(a(row, c));
    for (std::size_t j = 0; j < n; ++j) a(row, j) = R.mul(a(row, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || R.is_zero(a(i, c))) continue;
      const GRElem f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) = R.sub(a(i, j), R.mul(f, a(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  // Second layer: reductions of the unit rows plus (remaining rows)/p.
  FMatrix layer(0, n);
  for (std::size_t i = 0; i < row; ++i) layer.append_row(reduce_vec(R, a.row(i)));
  for (std::size_t i = row; i < a.rows(); ++i) {
    FVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = R.reduce(R.div_p(a(i, j)));
    layer.append_row(v);
  }
  auto L = rref(k, layer);
  std::vector<bool> lpiv(n, false);
  for (auto c : L.pivots) lpiv[c] = true;

  // Unit rows: teichmuller lift of the reduced row plus a p-digit reduced modulo the layer.
  FMatrix top(0, n);
  for (std::size_t i = 0; i < row; ++i) top.append_row(reduce_vec(R, a.row(i)));
  auto T = rref(k, top);
  GRMatrix unit_rows(0, n);
  for (std::size_t i = 0; i < T.reduced.rows(); ++i) {
    // Find the element of N lifting this reduced row: combine the unit rows.
    // Since a's unit rows are already reduced on their pivots, the reduced echelon row i
    // equals reduce(a.row(i)) after Gauss-Jordan above.
    GRVector r = a.row(i);
    GRVector lift = teichmuller_vec(R, T.reduced.row(i));
    FVector digit(n);
    for (std::size_t j = 0; j < n; ++j) digit[j] = R.reduce(R.div_p(R.sub(r[j], lift[j])));
    for (std::size_t li = 0; li < L.pivots.size(); ++li) {
      const std::size_t c = L.pivots[li];
      if (digit[c] == 0) continue;
      const FieldElem f = digit[c];
      for (std::size_t j = 0; j < n; ++j) digit[j] = k.sub(digit[j], k.mul(f, L.reduced(li, j)));
    }
    GRVector out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = R.add(lift[j], R.mul_p(R.teichmuller(digit[j])));
    unit_rows.append_row(out);
  }
  return {unit_rows, L.reduced};
}

}  // namespace udm
