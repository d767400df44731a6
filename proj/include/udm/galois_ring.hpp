#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "udm/field.hpp"

namespace udm {

inline constexpr int kMaxRingDegree = 8;

struct GRElem {
  std::array<std::int32_t, kMaxRingDegree> c{};
  bool operator==(const GRElem& o) const { return c == o.c; }
  bool operator!=(const GRElem& o) const { return !(*this == o); }
  bool operator<(const GRElem& o) const { return c < o.c; }
};

// GR(p^n, d) = (Z/p^n)[x]/(f) with f the coefficient-wise lift of the residue field modulus.
class GaloisRing {
 public:
  using Elem = GRElem;

  GaloisRing(FieldPtr k, int n) : k_(std::move(k)), n_(n) {
    if (n_ < 1) throw std::invalid_argument("truncation level must be positive");
    d_ = k_->degree();
    if (d_ > kMaxRingDegree) throw std::invalid_argument("ring degree too large");
    p_ = k_->p();
    mod_ = 1;
    for (int i = 0; i < n_; ++i) mod_ *= p_;
    f_ = k_->modulus();
    build_teichmuller_table();
  }

  static std::shared_ptr<const GaloisRing> make(FieldPtr k, int n) {
    return std::make_shared<const GaloisRing>(std::move(k), n);
  }

  const Field& residue_field() const { return *k_; }
  const FieldPtr& residue_field_ptr() const { return k_; }
  int p() const { return p_; }
  int n() const { return n_; }
  int degree() const { return d_; }
  long long modulus() const { return mod_; }

  Elem zero() const { return Elem{}; }
  Elem one() const { return from_int(1); }
  Elem from_int(long long v) const {
    Elem r;
    r.c[0] = norm(v);
    return r;
  }
  bool is_zero(const Elem& a) const {
    for (int i = 0; i < d_; ++i)
      if (a.c[i] != 0) return false;
    return true;
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < d_; ++i) r.c[i] = norm(static_cast<long long>(a.c[i]) + b.c[i]);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r;
    for (int i = 0; i < d_; ++i) r.c[i] = norm(static_cast<long long>(a.c[i]) - b.c[i]);
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r;
    for (int i = 0; i < d_; ++i) r.c[i] = norm(-static_cast<long long>(a.c[i]));
    return r;
  }
  Elem scale(const Elem& a, long long s) const {
    Elem r;
    for (int i = 0; i < d_; ++i) r.c[i] = norm(static_cast<long long>(a.c[i]) * norm(s));
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const {
    std::array<long long, 2 * kMaxRingDegree> t{};
    for (int i = 0; i < d_; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < d_; ++j) t[i + j] += static_cast<long long>(a.c[i]) * b.c[j];
    }
    for (int i = 0; i < 2 * d_ - 1; ++i) t[i] %= mod_;
    for (int k = 2 * d_ - 2; k >= d_; --k) {
      const long long c = t[k] % mod_;
      if (c == 0) continue;
      for (int s = 0; s < d_; ++s) t[k - d_ + s] = (t[k - d_ + s] - c * f_[s]) % mod_;
      t[k] = 0;
    }
    Elem r;
    for (int i = 0; i < d_; ++i) r.c[i] = norm(t[i]);
    return r;
  }
  Elem pow(Elem a, unsigned long long e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  FieldElem reduce(const Elem& a) const {
    std::vector<int> c(d_);
    for (int i = 0; i < d_; ++i) c[i] = a.c[i] % p_;
    return k_->from_coeffs(c);
  }
  // Coefficient-wise lift with digits in [0, p).
  Elem lift(FieldElem a) const {
    Elem r;
    auto c = k_->coeffs(a);
    for (int i = 0; i < d_; ++i) r.c[i] = c[i];
    return r;
  }
  bool is_unit(const Elem& a) const { return reduce(a) != 0; }
  int valuation(const Elem& a) const {
    if (is_zero(a)) return n_;
    int v = 0;
    Elem x = a;
    while (reduce(x) == 0) {
      ++v;
      for (int i = 0; i < d_; ++i) x.c[i] /= p_;
    }
    return v;
  }
  bool divisible_by_p(const Elem& a) const { return reduce(a) == 0; }
  // a / p for a divisible by p; the top p-adic digit of the result is taken to be zero.
  Elem div_p(const Elem& a) const {
    if (!divisible_by_p(a)) throw std::domain_error("element not divisible by p");
    Elem r;
    for (int i = 0; i < d_; ++i) r.c[i] = a.c[i] / p_;
    return r;
  }
  Elem mul_p(const Elem& a) const { return scale(a, p_); }

  Elem inv(const Elem& a) const {
    const FieldElem a0 = reduce(a);
    if (a0 == 0) throw std::domain_error("inverse of non-unit");
    Elem y = teichmuller(k_->inv(a0));
    const Elem two = from_int(2);
    for (int i = 0; i < n_; ++i) y = mul(y, sub(two, mul(a, y)));
    return y;
  }

  // Iterates t -> t^q from the digit lift until it stabilizes.
  Elem teichmuller_by_iteration(FieldElem a) const {
    Elem t = lift(a);
    const unsigned long long q = k_->order();
    for (int i = 0; i <= n_; ++i) {
      Elem next = pow(t, q);
      if (next == t) return t;
      t = next;
    }
    return t;
  }
  Elem teichmuller(FieldElem a) const { return teich_[a]; }

  // Teichmuller digits: a = sum [d_i] p^i.
  std::vector<FieldElem> digits(const Elem& a) const {
    std::vector<FieldElem> out(n_);
    Elem rest = a;
    for (int i = 0; i < n_; ++i) {
      const FieldElem di = reduce(rest);
      out[i] = di;
      rest = sub(rest, teichmuller(di));
      for (int j = 0; j < d_; ++j) rest.c[j] /= p_;
    }
    return out;
  }
  Elem from_digits(const std::vector<FieldElem>& ds) const {
    Elem r = zero();
    long long pp = 1;
    for (std::size_t i = 0; i < ds.size() && static_cast<int>(i) < n_; ++i) {
      r = add(r, scale(teichmuller(ds[i]), pp));
      pp *= p_;
    }
    return r;
  }

  // sigma^r on Teichmuller digits; r may be negative.
  Elem frob(const Elem& a, int r = 1) const {
    auto ds = digits(a);
    for (auto& x : ds) x = k_->frob(x, r);
    return from_digits(ds);
  }
  Elem frobenius(const Elem& a) const { return frob(a, 1); }

  std::string to_string(const Elem& a) const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < d_; ++i) os << (i ? "," : "") << a.c[i];
    os << ']';
    return os.str();
  }
  std::vector<int> coeffs(const Elem& a) const { return std::vector<int>(a.c.begin(), a.c.begin() + d_); }
  Elem from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > d_) throw std::invalid_argument("too many coefficients");
    Elem r;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = norm(c[i]);
    return r;
  }

 private:
  std::int32_t norm(long long v) const {
    long long r = v % mod_;
    return static_cast<std::int32_t>(r < 0 ? r + mod_ : r);
  }

  void build_teichmuller_table() {
    const std::uint32_t q = k_->order();
    teich_.resize(q);
    teich_[0] = zero();
    if (q <= 1) return;
    // [g^i] = [g]^i keeps the table multiplicative.
    const FieldElem g = k_->primitive();
    const Elem tg = teichmuller_by_iteration(g);
    Elem cur = one();
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      teich_[k_->exp(i)] = cur;
      cur = mul(cur, tg);
    }
  }

  FieldPtr k_;
  int n_;
  int d_;
  int p_;
  long long mod_;
  Poly f_;
  std::vector<Elem> teich_;
};

using RingPtr = std::shared_ptr<const GaloisRing>;

struct SpecialUnit {
  GRElem delta;
};

// Smallest field element d != 0 with d^p = -d, lifted to its Teichmuller representative.
inline SpecialUnit find_special_unit(const GaloisRing& R) {
  const Field& k = R.residue_field();
  if (k.p() == 2) throw std::invalid_argument("special unit needs odd p");
  if (k.degree() % 2 != 0) throw std::invalid_argument("residue field must contain F_{p^2}");
  for (FieldElem a = 1; a < k.order(); ++a) {
    if (k.frob(a) == k.neg(a)) return SpecialUnit{R.teichmuller(a)};
  }
  throw std::logic_error("no special unit found");
}

}  // namespace udm
