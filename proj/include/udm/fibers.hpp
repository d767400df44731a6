#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "udm/dieudonne.hpp"
#include "udm/raynaud.hpp"
#include "udm/strata.hpp"

namespace udm {

// A point of P^1(k): (value : 1), or (1 : 0) when infinite.
struct ProjectivePoint {
  FieldElem value = 0;
  bool infinite = false;
  bool operator==(const ProjectivePoint& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  bool operator<(const ProjectivePoint& o) const {
    if (infinite != o.infinite) return !infinite;
    return !infinite && value < o.value;
  }
  static ProjectivePoint ratio(const Field& k, FieldElem num, FieldElem den) {
    if (den == 0) {
      if (num == 0) throw std::invalid_argument("(0:0) is not a projective point");
      return {0, true};
    }
    return {k.div(num, den), false};
  }
};

// Calls fn on one normalized spanning vector (first nonzero coefficient 1) of every line in s.
inline void for_each_line(const Subspace& s, const std::function<void(const FVector&)>& fn) {
  const Field& k = s.field();
  const std::size_t d = s.dim();
  const std::uint32_t q = k.order();
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t free = d - 1 - lead;
    std::vector<FieldElem> c(free, 0);
    while (true) {
      FVector v = s.vector(lead);
      for (std::size_t t = 0; t < free; ++t) {
        if (c[t] == 0) continue;
        const FVector b = s.vector(lead + 1 + t);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = k.add(v[j], k.mul(c[t], b[j]));
      }
      fn(v);
      std::size_t t = 0;
      while (t < free && ++c[t] == q) c[t++] = 0;
      if (t == free) break;
    }
  }
}

inline std::vector<FVector> lines_of(const Subspace& s) {
  std::vector<FVector> out;
  for_each_line(s, [&](const FVector& v) { out.push_back(v); });
  return out;
}

inline unsigned long long line_count(unsigned long long q, std::size_t d) {
  unsigned long long n = 0, pw = 1;
  for (std::size_t i = 0; i < d; ++i, pw *= q) n += pw;
  return n;
}

// Parametrization data read off in the standard basis (e1, e2, e3, f1, f2, f3).
struct Parametrization {
  enum class Branch { None, Line, Base, Tooth };
  Branch branch = Branch::None;
  std::optional<ProjectivePoint> lambda;  // gss: (lambda1 : lambda3)
  std::optional<ProjectivePoint> zeta;    // ssp: (alpha1 : alpha2)
  std::optional<FieldElem> beta3;         // ssp tooth, with (beta1 : beta2) normalized
};

struct SubgroupRecord {
  Subspace h;
  FVector sigma_vec;
  FVector sigma_bar_vec;
  RaynaudLabel type = RaynaudLabel::AlphaP;
  int gamma = 0;
  Parametrization coords;
  bool operator<(const SubgroupRecord& o) const { return h < o.h; }
};

enum class EnumerationStrategy { Pruned, Brute };

struct EnumerationOptions {
  EnumerationStrategy strategy = EnumerationStrategy::Pruned;
  unsigned threads = 1;
  unsigned long long budget = 100000000ULL;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool in_line(const Field& k, const FVector& v, const FVector& dir) {
  std::size_t piv = dir.size();
  for (std::size_t i = 0; i < dir.size(); ++i)
    if (dir[i] != 0) {
      piv = i;
      break;
    }
  const FieldElem c = k.div(v[piv], dir[piv]);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != k.mul(c, dir[i])) return false;
  return true;
}

inline std::optional<FVector> forced_partner(const DieudonneSpace& m, const FVector& x) {
  const Field& k = m.field();
  FVector fx = m.apply_F(x), vx = m.apply_V(x);
  const bool fz = is_zero_vec(k, fx), vz = is_zero_vec(k, vx);
  if (fz && vz) return std::nullopt;
  return fz ? vx : fx;
}

}  // namespace detail

inline unsigned long long estimate_candidates(const DieudonneSpace& m, EnumerationStrategy s) {
  const unsigned long long q = m.field().order();
  const auto n0 = line_count(q, m.graded_piece(Grade::Sigma).dim());
  const auto n1 = line_count(q, m.graded_piece(Grade::SigmaBar).dim());
  if (s == EnumerationStrategy::Brute) return n0 * n1;
  const Subspace idle = m.kernel_F().intersect(m.kernel_V()).intersect(m.graded_piece(Grade::Sigma));
  return n0 + line_count(q, idle.dim()) * (q + 1);
}

// Is <x, y> (x of type Sigma, y of type SigmaBar) isotropic and stable under F and V?
inline bool is_admissible_pair(const DieudonneSpace& m, const FVector& x, const FVector& y) {
  const Field& k = m.field();
  if (m.pair(x, y) != 0) return false;
  for (Op op : {Op::F, Op::V}) {
    if (!detail::in_line(k, m.apply(op, x), y)) return false;
    if (!detail::in_line(k, m.apply(op, y), x)) return false;
  }
  return true;
}

inline SubgroupRecord make_record(const DieudonneSpace& m, const FVector& x, const FVector& y) {
  SubgroupRecord r;
  r.h = Subspace::span(m.field_ptr(), m.dim(), std::vector<FVector>{x, y});
  r.sigma_vec = x;
  r.sigma_bar_vec = y;
  r.type = classify_rank_p2(m.restrict_to(r.h));
  r.gamma = gamma(m, r.h);
  return r;
}

// All H = (line in the Sigma piece) + (line in the SigmaBar piece), isotropic and F/V-stable,
// sorted by their echelon key.
inline std::vector<SubgroupRecord> enumerate_H(const DieudonneSpace& m, const EnumerationOptions& opt = {}) {
  if (!m.has_pairing()) throw std::invalid_argument("enumeration needs a pairing");
  const auto est = estimate_candidates(m, opt.strategy);
  if (est > opt.budget)
    throw BudgetExceeded("enumeration needs about " + std::to_string(est) + " candidates, budget is " +
                         std::to_string(opt.budget));
  const Subspace sig = m.graded_piece(Grade::Sigma);
  const Subspace bar = m.graded_piece(Grade::SigmaBar);
  const std::vector<FVector> outer = lines_of(sig);
  std::vector<FVector> bar_lines;
  if (opt.strategy == EnumerationStrategy::Brute) bar_lines = lines_of(bar);

  auto work = [&](std::size_t begin, std::size_t end, std::vector<SubgroupRecord>& out) {
    for (std::size_t i = begin; i < end; ++i) {
      const FVector& x = outer[i];
      if (opt.strategy == EnumerationStrategy::Brute) {
        for (const auto& y : bar_lines)
          if (is_admissible_pair(m, x, y)) out.push_back(make_record(m, x, y));
        continue;
      }
      if (auto y = detail::forced_partner(m, x)) {
        if (is_admissible_pair(m, x, *y)) out.push_back(make_record(m, x, *y));
        continue;
      }
      const Subspace orth = m.annihilator(Subspace::span(m.field_ptr(), m.dim(), std::vector<FVector>{x})).intersect(bar);
      for_each_line(orth, [&](const FVector& y) {
        if (is_admissible_pair(m, x, y)) out.push_back(make_record(m, x, y));
      });
    }
  };

  std::vector<SubgroupRecord> all;
  const unsigned nt = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(outer.size())));
  if (nt == 1) {
    work(0, outer.size(), all);
  } else {
    std::vector<std::vector<SubgroupRecord>> parts(nt);
    std::vector<std::thread> pool;
    const std::size_t chunk = (outer.size() + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
      const std::size_t b = std::min(outer.size(), t * chunk), e = std::min(outer.size(), b + chunk);
      pool.emplace_back(work, b, e, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

enum class FiberShape { TwoPoints, ProjectiveLine, Comb, Other };

inline const char* shape_name(FiberShape s) {
  switch (s) {
    case FiberShape::TwoPoints: return "two_points";
    case FiberShape::ProjectiveLine: return "projective_line";
    case FiberShape::Comb: return "comb";
    case FiberShape::Other: return "other";
  }
  return "?";
}

struct FiberCensus {
  std::size_t total = 0;
  std::map<RaynaudLabel, std::size_t> by_type;
  FiberShape structure = FiberShape::Other;
  std::size_t count(RaynaudLabel l) const {
    auto it = by_type.find(l);
    return it == by_type.end() ? 0 : it->second;
  }
};

inline FiberCensus census(const std::vector<SubgroupRecord>& recs, unsigned long long q, int p) {
  FiberCensus c;
  c.total = recs.size();
  for (const auto& r : recs) ++c.by_type[r.type];
  if (c.total == 2) c.structure = FiberShape::TwoPoints;
  else if (c.total == q + 1) c.structure = FiberShape::ProjectiveLine;
  else if (c.total == (q + 1) + (static_cast<unsigned long long>(p) + 1) * q) c.structure = FiberShape::Comb;
  return c;
}

// gss fibers in the braid basis: H = <e2, lambda1 f1 + lambda3 f3>.
inline std::optional<ProjectivePoint> braid_lambda(const Field& k, const SubgroupRecord& r) {
  const FVector& y = r.sigma_bar_vec;
  if (y[detail::f2] != 0) return std::nullopt;
  return ProjectivePoint::ratio(k, y[detail::f1], y[detail::f3]);
}

// ssp fibers: base <alpha1 e1 + alpha2 e2, f3>, teeth <alpha, beta1 f1 + beta2 f2 + beta3 f3>.
inline Parametrization ssp_coordinates(const Field& k, const FVector& x, const FVector& y) {
  using namespace detail;
  Parametrization out;
  if (x[e3] != 0) return out;
  out.zeta = ProjectivePoint::ratio(k, x[e1], x[e2]);
  if (y[f1] == 0 && y[f2] == 0) {
    out.branch = Parametrization::Branch::Base;
    return out;
  }
  out.branch = Parametrization::Branch::Tooth;
  const FieldElem lead = y[f1] != 0 ? y[f1] : y[f2];
  out.beta3 = k.div(y[f3], lead);
  return out;
}

inline void attach_coordinates(const Field& k, Stratum s, std::vector<SubgroupRecord>& recs) {
  for (auto& r : recs) {
    if (s == Stratum::Gss) {
      r.coords.lambda = braid_lambda(k, r);
      if (r.coords.lambda) r.coords.branch = Parametrization::Branch::Line;
    } else if (s == Stratum::Ssp) {
      r.coords = ssp_coordinates(k, r.sigma_vec, r.sigma_bar_vec);
    }
  }
}

inline bool is_tooth_root(const Field& k, const ProjectivePoint& z) {
  return !z.infinite && k.pow(z.value, k.p() + 1) == k.neg(k.one());
}

struct CombStructure {
  std::map<ProjectivePoint, SubgroupRecord> base;
  std::map<ProjectivePoint, std::map<FieldElem, SubgroupRecord>> teeth;
};

inline CombStructure comb_structure(const DieudonneSpace& m, const EnumerationOptions& opt = {}) {
  if (classify_stratum(m) != Stratum::Ssp) throw std::invalid_argument("comb structure needs a superspecial point");
  auto recs = enumerate_H(m, opt);
  attach_coordinates(m.field(), Stratum::Ssp, recs);
  CombStructure c;
  for (auto& r : recs) {
    if (r.coords.branch == Parametrization::Branch::Base) c.base.emplace(*r.coords.zeta, r);
    else if (r.coords.branch == Parametrization::Branch::Tooth) c.teeth[*r.coords.zeta].emplace(*r.coords.beta3, r);
    else throw std::logic_error("subgroup outside the comb parametrization");
  }
  return c;
}

// M(H) + (H^perp \cap ker V) for H of etale type.
inline Subspace k1_submodule(const DieudonneSpace& m, const SubgroupRecord& h) {
  if (h.type != RaynaudLabel::Etale) throw std::invalid_argument("K1 needs an etale subgroup");
  return h.h.sum(m.annihilator(h.h).intersect(m.kernel_V()));
}

// V(ker F) carried to the sigma^2-twisted module.
inline SubgroupRecord rho_et_subgroup(const DieudonneSpace& m) {
  if (classify_stratum(m) == Stratum::Ssp) throw std::invalid_argument("rho_et is not defined here at superspecial points");
  const Subspace img = m.image(Op::V, m.kernel_F()).twist(2);
  const DieudonneSpace m2 = m.twist(2);
  if (img.dim() != 2 || !m2.is_stable(img) || !m2.is_isotropic(img))
    throw std::logic_error("V(ker F) is not an admissible subgroup");
  const Subspace xs = m2.graded_part(img, Grade::Sigma), ys = m2.graded_part(img, Grade::SigmaBar);
  if (xs.dim() != 1 || ys.dim() != 1) throw std::logic_error("V(ker F) is not balanced");
  return make_record(m2, xs.vector(0), ys.vector(0));
}

struct CanonicalFiltration {
  Subspace fil2;
  Subspace fil1;
  RaynaudLabel gr2_type;
};

inline CanonicalFiltration canonical_filtration(const DieudonneSpace& m) {
  if (classify_stratum(m) == Stratum::Ssp) throw std::invalid_argument("no canonical filtration at superspecial points");
  CanonicalFiltration c;
  c.fil2 = m.image(Op::F, m.kernel_V());
  c.fil1 = m.annihilator(c.fil2);
  c.gr2_type = classify_rank_p2(m.restrict_to(c.fil2));
  return c;
}

struct ForbiddenReport {
  std::size_t enumerated = 0;
  std::size_t forbidden = 0;
  bool ok() const { return forbidden == 0; }
};

inline ForbiddenReport forbidden_check(const std::vector<SubgroupRecord>& recs) {
  ForbiddenReport r;
  r.enumerated = recs.size();
  for (const auto& h : recs)
    if (is_forbidden(h.type)) ++r.forbidden;
  return r;
}

inline ForbiddenReport forbidden_check(const DieudonneSpace& m, const EnumerationOptions& opt = {}) {
  return forbidden_check(enumerate_H(m, opt));
}

}  // namespace udm
