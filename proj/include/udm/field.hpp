#pragma once

#include <cstdint>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace udm {

// Dense polynomials over F_p, lowest degree first.
using Poly = std::vector<int>;

namespace fp_poly {

inline int mod(long long a, int p) {
  long long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline int inv(int a, int p) {
  long long r = 1, b = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<int>(r);
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = mod(r[i + j] + 1LL * a[i] * b[j], p);
  trim(r);
  return r;
}

inline Poly rem(Poly a, const Poly& f, int p) {
  Poly g = f;
  trim(g);
  if (g.empty()) throw std::domain_error("polynomial division by zero");
  trim(a);
  const int lead_inv = inv(g.back(), p);
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const int c = mod(1LL * a.back() * lead_inv, p);
    const std::size_t shift = a.size() - 1 - dg;
    for (std::size_t t = 0; t <= dg; ++t) a[shift + t] = mod(a[shift + t] - 1LL * c * g[t], p);
    trim(a);
  }
  return a;
}

inline Poly sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  trim(a);
  return a;
}

inline Poly gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly powmod(Poly base, unsigned long long e, const Poly& f, int p) {
  Poly r{1};
  base = rem(base, f, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), f, p);
    base = rem(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline std::vector<int> prime_factors(unsigned long long n) {
  std::vector<int> out;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

// Rabin's test for a monic f of degree d.
inline bool is_irreducible(const Poly& f, int p) {
  Poly g = f;
  trim(g);
  const int d = static_cast<int>(g.size()) - 1;
  if (d < 1) return false;
  const Poly x{0, 1};
  auto frob_iter = [&](int times) {
    Poly h = x;
    for (int i = 0; i < times; ++i) h = powmod(h, static_cast<unsigned long long>(p), g, p);
    return h;
  };
  if (!sub(frob_iter(d), x, p).empty()) return false;
  for (int r : prime_factors(static_cast<unsigned long long>(d))) {
    Poly h = sub(frob_iter(d / r), x, p);
    if (gcd(g, h, p).size() != 1) return false;
  }
  return true;
}

// First monic irreducible of degree d, scanning (c_0, ..., c_{d-1}) lexicographically
// with c_0 most significant.
inline Poly first_irreducible(int p, int d) {
  unsigned long long total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<unsigned long long>(p);
  for (unsigned long long idx = 0; idx < total; ++idx) {
    Poly f(d + 1, 0);
    unsigned long long rest = idx;
    for (int i = d - 1; i >= 0; --i) {
      f[i] = static_cast<int>(rest % p);
      rest /= p;
    }
    f[d] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace fp_poly

// F_{p^d} with elements encoded as integers sum c_i p^i over the fixed modulus.
class Field {
 public:
  using Elem = std::uint32_t;

  Field(int p, int degree) : p_(p), d_(degree) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (degree < 1) throw std::invalid_argument("degree must be positive");
    q_ = 1;
    for (int i = 0; i < d_; ++i) {
      if (q_ > (1u << 24) / static_cast<unsigned>(p)) throw std::invalid_argument("field too large");
      q_ *= static_cast<unsigned>(p);
    }
    modulus_ = fp_poly::first_irreducible(p, d_);
    if (!fp_poly::is_irreducible(modulus_, p)) throw std::logic_error("modulus not irreducible");
    build_tables();
  }

  static std::shared_ptr<const Field> make(int p, int degree) {
    return std::make_shared<const Field>(p, degree);
  }

  int p() const { return p_; }
  int degree() const { return d_; }
  std::uint32_t order() const { return q_; }
  const Poly& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return digit_combine(a, b, 1);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const {
    if (a == 0) {
      if (e == 0) return 1;
      if (e < 0) throw std::domain_error("negative power of zero");
      return 0;
    }
    const long long n = q_ - 1;
    long long k = static_cast<long long>(log_[a]) * (((e % n) + n) % n) % n;
    return exp_[static_cast<std::size_t>(k)];
  }
  // a^{p^r}; r may be negative.
  Elem frob(Elem a, int r = 1) const {
    if (a == 0) return 0;
    const int rr = ((r % d_) + d_) % d_;
    const unsigned long long k =
        static_cast<unsigned long long>(log_[a]) * ppow_[rr] % (q_ - 1);
    return exp_[static_cast<std::size_t>(k)];
  }
  Elem from_int(long long v) const { return static_cast<Elem>(fp_poly::mod(v, p_)); }

  std::vector<int> coeffs(Elem a) const {
    std::vector<int> c(d_);
    for (int i = 0; i < d_; ++i) {
      c[i] = static_cast<int>(a % p_);
      a /= p_;
    }
    return c;
  }
  Elem from_coeffs(const std::vector<int>& c) const {
    if (static_cast<int>(c.size()) > d_) throw std::invalid_argument("too many coefficients");
    Elem v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      v = v * p_ + static_cast<Elem>(fp_poly::mod(c[i], p_));
    return v;
  }

  bool in_subfield(Elem a, int sub_degree) const { return frob(a, sub_degree) == a; }
  // Elements of F_{p^2}, the residue field of O_E.
  bool in_kappa(Elem a) const { return in_subfield(a, 2); }

  Elem primitive() const { return generator_; }
  std::uint32_t log(Elem a) const { return log_[a]; }
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

  std::string to_string(Elem a) const {
    std::ostringstream os;
    os << '[';
    auto c = coeffs(a);
    for (int i = 0; i < d_; ++i) os << (i ? "," : "") << c[i];
    os << ']';
    return os.str();
  }

  bool operator==(const Field& o) const { return p_ == o.p_ && d_ == o.d_; }

 private:
  static bool is_prime(int n) {
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return n >= 2;
  }

  Elem digit_combine(Elem a, Elem b, int sign) const {
    Elem r = 0, scale = 1;
    for (int i = 0; i < d_; ++i) {
      int x = static_cast<int>(a % p_) + sign * static_cast<int>(b % p_);
      x = fp_poly::mod(x, p_);
      r += scale * static_cast<Elem>(x);
      scale *= p_;
      a /= p_;
      b /= p_;
    }
    return r;
  }

  Elem poly_mul(Elem a, Elem b) const {
    Poly pa = coeffs(a);
    Poly pb = coeffs(b);
    Poly r = fp_poly::rem(fp_poly::mul(pa, pb, p_), modulus_, p_);
    r.resize(d_, 0);
    return from_coeffs(r);
  }

  void build_tables() {
    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
      auto c = coeffs(a);
      for (auto& x : c) x = fp_poly::mod(-x, p_);
      neg_[a] = from_coeffs(c);
    }
    if (static_cast<unsigned long long>(q_) * q_ <= (1ull << 23)) {
      add_table_.resize(static_cast<std::size_t>(q_) * q_);
      for (Elem a = 0; a < q_; ++a)
        for (Elem b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = digit_combine(a, b, 1);
    }
    const unsigned long long n = q_ - 1;
    auto factors = fp_poly::prime_factors(n);
    auto slow_pow = [&](Elem g, unsigned long long e) {
      Elem r = 1;
      while (e) {
        if (e & 1) r = poly_mul(r, g);
        g = poly_mul(g, g);
        e >>= 1;
      }
      return r;
    };
    generator_ = 0;
    for (Elem g = 1; g < q_ && generator_ == 0; ++g) {
      if (q_ == 2) {
        generator_ = 1;
        break;
      }
      bool ok = slow_pow(g, n) == 1;
      for (int r : factors)
        if (ok && slow_pow(g, n / r) == 1) ok = false;
      if (ok) generator_ = g;
    }
    exp_.assign(q_ - 1 == 0 ? 1 : q_ - 1, 0);
    log_.assign(q_, 0);
    Elem cur = 1;
    for (unsigned long long k = 0; k < n; ++k) {
      exp_[k] = cur;
      log_[cur] = static_cast<std::uint32_t>(k);
      cur = poly_mul(cur, generator_);
    }
    ppow_.resize(d_);
    unsigned long long pp = 1 % (n == 0 ? 1 : n);
    for (int r = 0; r < d_; ++r) {
      ppow_[r] = pp;
      pp = pp * p_ % n;
    }
  }

  int p_;
  int d_;
  std::uint32_t q_;
  Poly modulus_;
  Elem generator_ = 1;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<unsigned long long> ppow_;
};

using FieldPtr = std::shared_ptr<const Field>;
using FieldElem = Field::Elem;

}  // namespace udm
