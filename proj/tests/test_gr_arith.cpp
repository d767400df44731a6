#include <gtest/gtest.h>

#include <random>
#include <set>

#include "udm/galois_ring.hpp"

using namespace udm;

namespace {

// Schoolbook product of coefficient vectors modulo a monic f over Z/mod.
std::vector<long long> naive_mulmod(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& f,
                                    long long mod) {
  const std::size_t d = f.size() - 1;
  std::vector<long long> prod(2 * d, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + 1LL * a[i] * b[j]) % mod;
  for (std::size_t i = prod.size(); i-- > d;) {
    const long long c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) prod[i - d + j] = ((prod[i - d + j] - c * f[j]) % mod + mod) % mod;
  }
  prod.resize(d);
  return prod;
}

GRElem naive_pow(const GaloisRing& R, GRElem x, unsigned long long e) {
  GRElem r = R.one();
  for (unsigned long long i = 0; i < e; ++i) r = R.mul(r, x);
  return r;
}

// Trial division by every monic polynomial of degree 1..d/2.
bool irreducible_by_trial_division(const std::vector<int>& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int e = 1; 2 * e <= d; ++e) {
    int total = 1;
    for (int i = 0; i < e; ++i) total *= p;
    for (int idx = 0; idx < total; ++idx) {
      std::vector<int> g(e + 1, 1);
      for (int i = 0, r = idx; i < e; ++i, r /= p) g[i] = r % p;
      std::vector<int> rem = f;
      for (int i = d; i >= e; --i) {
        const int c = rem[i];
        for (int j = 0; j <= e; ++j) rem[i - e + j] = ((rem[i - e + j] - c * g[j]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < e; ++i) zero &= rem[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Field, ModulusIsLexFirstIrreducible) {
  for (auto [p, d] : {std::pair{3, 2}, {3, 4}, {5, 2}, {5, 4}, {7, 2}}) {
    const Field k(p, d);
    // Scan with the constant term most significant.
    std::vector<int> first;
    int total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (int idx = 0; idx < total && first.empty(); ++idx) {
      std::vector<int> f(d + 1, 1);
      for (int i = d - 1, r = idx; i >= 0; --i, r /= p) f[i] = r % p;
      if (irreducible_by_trial_division(f, p)) first = f;
    }
    EXPECT_EQ(k.modulus(), first) << "p=" << p << " d=" << d;
  }
}

TEST(Field, MultiplicationMatchesPolynomialArithmetic) {
  const Field k(3, 2);
  for (FieldElem a = 0; a < k.order(); ++a)
    for (FieldElem b = 0; b < k.order(); ++b) {
      const auto want = naive_mulmod(k.coeffs(a), k.coeffs(b), k.modulus(), 3);
      std::vector<int> w(want.begin(), want.end());
      ASSERT_EQ(k.mul(a, b), k.from_coeffs(w));
    }
  const Field k81(3, 4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<FieldElem> pick(0, k81.order() - 1);
  for (int i = 0; i < 2000; ++i) {
    const FieldElem a = pick(rng), b = pick(rng);
    const auto want = naive_mulmod(k81.coeffs(a), k81.coeffs(b), k81.modulus(), 3);
    ASSERT_EQ(k81.mul(a, b), k81.from_coeffs(std::vector<int>(want.begin(), want.end())));
  }
}

TEST(Field, AdditionIsCoefficientwise) {
  const Field k(5, 2);
  for (FieldElem a = 0; a < k.order(); ++a)
    for (FieldElem b = 0; b < k.order(); ++b) {
      auto ca = k.coeffs(a), cb = k.coeffs(b);
      for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % 5;
      ASSERT_EQ(k.add(a, b), k.from_coeffs(ca));
      ASSERT_EQ(k.sub(k.add(a, b), b), a);
    }
}

TEST(Field, InverseAndFrobenius) {
  const Field k(3, 4);
  for (FieldElem a = 1; a < k.order(); ++a) {
    ASSERT_EQ(k.mul(a, k.inv(a)), k.one());
    FieldElem cube = k.mul(a, k.mul(a, a));
    ASSERT_EQ(k.frob(a), cube);
    ASSERT_EQ(k.frob(k.frob(a), -1), a);
    ASSERT_EQ(k.frob(a, 4), a);
  }
  std::set<FieldElem> kappa;
  for (FieldElem a = 0; a < k.order(); ++a)
    if (k.in_kappa(a)) kappa.insert(a);
  EXPECT_EQ(kappa.size(), 9u);
}

TEST(Field, PrimitiveElementGeneratesUnits) {
  const Field k(5, 2);
  std::set<FieldElem> seen;
  FieldElem x = k.one();
  for (unsigned i = 0; i + 1 < k.order(); ++i) {
    seen.insert(x);
    x = k.mul(x, k.primitive());
  }
  EXPECT_EQ(seen.size(), k.order() - 1);
  EXPECT_EQ(x, k.one());
}

TEST(GaloisRing, RingAxiomsExhaustiveP3) {
  auto k = Field::make(3, 2);
  const GaloisRing R(k, 2);
  std::vector<GRElem> all;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) all.push_back(R.from_coeffs({a, b}));
  ASSERT_EQ(all.size(), 81u);
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto want = naive_mulmod(R.coeffs(x), R.coeffs(y), k->modulus(), 9);
      ASSERT_EQ(R.coeffs(R.mul(x, y)), std::vector<int>(want.begin(), want.end()));
      ASSERT_EQ(R.mul(x, y), R.mul(y, x));
      ASSERT_EQ(R.sub(R.add(x, y), y), x);
    }
  for (int i = 0; i < 81; i += 7)
    for (int j = 0; j < 81; j += 5)
      for (int l = 0; l < 81; l += 3) {
        const auto &x = all[i], &y = all[j], &z = all[l];
        ASSERT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
        ASSERT_EQ(R.mul(x, R.mul(y, z)), R.mul(R.mul(x, y), z));
      }
}

TEST(GaloisRing, TeichmullerIsFixedByQPowerAndMultiplicative) {
  auto k = Field::make(3, 2);
  const GaloisRing R(k, 2);
  EXPECT_EQ(R.teichmuller(0), R.zero());
  EXPECT_EQ(R.teichmuller(1), R.one());
  for (FieldElem a = 0; a < k->order(); ++a) {
    const GRElem t = R.teichmuller(a);
    EXPECT_EQ(R.reduce(t), a);
    EXPECT_EQ(naive_pow(R, t, 9), t);
    EXPECT_EQ(R.teichmuller_by_iteration(a), t);
    for (FieldElem b = 0; b < k->order(); ++b) EXPECT_EQ(R.teichmuller(k->mul(a, b)), R.mul(t, R.teichmuller(b)));
  }
}

TEST(GaloisRing, FrobeniusIsAnAutomorphismOfOrderTwoM) {
  auto k = Field::make(3, 2);
  const GaloisRing R(k, 2);
  std::vector<GRElem> all;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) all.push_back(R.from_coeffs({a, b}));
  for (const auto& x : all) {
    EXPECT_EQ(R.frob(R.frob(x)), x);
    EXPECT_EQ(R.frob(R.frob(x, 1), -1), x);
    const auto d = R.digits(x);
    EXPECT_EQ(R.frob(x), R.add(R.teichmuller(k->frob(d[0])), R.mul_p(R.teichmuller(k->frob(d[1])))));
  }
  for (int i = 0; i < 81; i += 4)
    for (int j = 0; j < 81; j += 3) {
      EXPECT_EQ(R.frob(R.add(all[i], all[j])), R.add(R.frob(all[i]), R.frob(all[j])));
      EXPECT_EQ(R.frob(R.mul(all[i], all[j])), R.mul(R.frob(all[i]), R.frob(all[j])));
    }
  for (int v = 0; v < 9; ++v) EXPECT_EQ(R.frob(R.from_int(v)), R.from_int(v));

  auto k81 = Field::make(5, 4);
  const GaloisRing R4(k81, 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(0, 24);
  for (int i = 0; i < 200; ++i) {
    const GRElem x = R4.from_coeffs({c(rng), c(rng), c(rng), c(rng)});
    EXPECT_EQ(R4.frob(x, 4), x);
    EXPECT_EQ(R4.reduce(R4.frob(x)), k81->frob(R4.reduce(x)));
  }
}

TEST(GaloisRing, DivisionByP) {
  auto k = Field::make(5, 2);
  const GaloisRing R(k, 2);
  for (int a = 0; a < 25; ++a)
    for (int b = 0; b < 25; ++b) {
      const GRElem x = R.from_coeffs({a, b});
      if (!R.divisible_by_p(x)) {
        EXPECT_EQ(R.mul(x, R.inv(x)), R.one());
        continue;
      }
      EXPECT_EQ(R.mul_p(R.div_p(x)), x);
    }
}

TEST(GaloisRing, SpecialUnit) {
  for (int p : {3, 5, 7}) {
    auto k = Field::make(p, 2);
    const GaloisRing R(k, 2);
    const GRElem d = find_special_unit(R).delta;
    EXPECT_FALSE(R.is_zero(d));
    EXPECT_EQ(R.frob(d), R.neg(d));
    EXPECT_EQ(naive_pow(R, d, p * p - 1), R.one());
    // The smallest such element by a scan over the field.
    FieldElem first = 0;
    for (FieldElem a = 1; a < k->order() && first == 0; ++a)
      if (k->add(k->frob(a), a) == 0) first = a;
    EXPECT_EQ(R.reduce(d), first);
    // delta^2 is a non-square in F_p.
    const FieldElem d2 = k->mul(first, first);
    EXPECT_TRUE(k->frob(d2) == d2);
    bool square = false;
    for (int x = 0; x < p; ++x) square |= k->from_int(x * x) == d2;
    EXPECT_FALSE(square);
  }
}
