// Command-line front end: fiber censuses, verification suites, module dumps.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "udm/appendix.hpp"
#include "udm/fibers.hpp"
#include "udm/report.hpp"
#include "udm/serialize.hpp"
#include "udm/strata.hpp"
#include "udm/suites.hpp"

namespace {

using namespace udm;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render(const ReportDocument& r, const std::string& format) {
  if (format == "json") return to_json(r);
  if (format == "csv") return to_csv(r);
  return to_text(r);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

void check_field(int p, int deg) {
  if (p != 3 && p != 5 && p != 7) throw UsageError("--p must be 3, 5 or 7");
  if (deg < 1 || 2 * deg > kMaxRingDegree) throw UsageError("--deg must be between 1 and " + std::to_string(kMaxRingDegree / 2));
}

std::string type_list(const std::map<RaynaudLabel, std::size_t>& by_type) {
  std::ostringstream os;
  bool first = true;
  for (auto [l, n] : by_type) {
    os << (first ? "" : ", ") << n << "x " << label_name(l);
    first = false;
  }
  return os.str();
}

Section section(std::string name, std::string anchor, std::string expected, std::string actual) {
  const bool pass = expected == actual;
  return {std::move(name), std::move(anchor), std::move(expected), std::move(actual), pass};
}

void census_fiber(ReportDocument& rep, const RingPtr& R, const std::string& point, unsigned threads) {
  const Field& k = R->residue_field();
  const unsigned long long q = k.order();
  const int p = k.p();
  const DieudonneLattice L = canonical_lattice(point == "mu" ? "mu-ordinary" : point == "gss" ? "gss-braid" : "ssp", R);
  const DieudonneSpace m = L.reduce();
  EnumerationOptions opt;
  opt.threads = threads;
  const auto est = estimate_candidates(m, opt.strategy);
  if (est > opt.budget)
    throw UsageError("enumeration needs about " + std::to_string(est) + " candidates, budget is " + std::to_string(opt.budget));
  const Stratum st = classify_stratum(m);
  auto recs = enumerate_H(m, opt);
  attach_coordinates(k, st, recs);
  const FiberCensus c = census(recs, q, p);
  rep.add(section("stratum", "stratification by a-number and Hasse invariant", point == "mu" ? "mu_ordinary" : point,
                  stratum_name(st)));
  unsigned long long total = 0;
  std::map<RaynaudLabel, std::size_t> types;
  if (st == Stratum::MuOrdinary) {
    total = 2;
    types = {{RaynaudLabel::Etale, 1}, {RaynaudLabel::Multiplicative, 1}};
  } else if (st == Stratum::Gss) {
    total = q + 1;
    types = {{RaynaudLabel::GSigma, q - 1}, {RaynaudLabel::AlphaP2Sigma, 1}, {RaynaudLabel::AlphaP2DualSigma, 1}};
  } else {
    total = (q + 1) + (p + 1) * q;
    types = {{RaynaudLabel::AlphaP, q + 1}, {RaynaudLabel::GSigma, (p + 1) * q}};
  }
  rep.add(section("total", "cardinality of the fiber of pi", std::to_string(total), std::to_string(c.total)));
  rep.add(section("types", "Raynaud types occurring in the fiber", type_list(types), type_list(c.by_type)));
  rep.add(section("shape", "reduced fiber structure",
                  st == Stratum::MuOrdinary ? "two_points" : st == Stratum::Gss ? "projective_line" : "comb",
                  shape_name(c.structure)));
  if (st == Stratum::Ssp) {
    std::size_t roots = 0, gamma2 = 0;
    for (const auto& r : recs) {
      if (r.coords.branch != Parametrization::Branch::Base) continue;
      roots += is_tooth_root(k, *r.coords.zeta);
      gamma2 += r.gamma == 2;
    }
    rep.add(section("tooth-roots", "teeth sit at zeta^(p+1) = -1", std::to_string(p + 1), std::to_string(roots)));
    rep.add(section("gamma-2-on-base", "gamma = 2 exactly at the roots", std::to_string(p + 1), std::to_string(gamma2)));
  }
  const auto fb = forbidden_check(recs);
  rep.add(section("forbidden", "forbidden Raynaud types never occur", "0", std::to_string(fb.forbidden)));
}

void census_appendix(ReportDocument& rep, const RingPtr& R, unsigned threads) {
  const Field& k = R->residue_field();
  const int p = k.p();
  const auto pts = curve_points(k);
  rep.add(section("hermitian-count", "F_{p^2}-points of x^p z + x z^p = y^(p+1)", std::to_string(p * p * p + 1),
                  std::to_string(hermitian_count(p))));
  const auto roots = kappa_roots(k);
  std::size_t outside = 0, ssp = 0, gss = 0;
  const GssFamilyPoint* first = nullptr;
  std::vector<GssFamilyPoint> family;
  family.reserve(pts.size());
  for (auto [a, b] : pts) {
    family.push_back(gss_family(R, roots.front(), a, b));
    const auto& pt = family.back();
    outside += !pt.over_kappa;
    const Stratum st = classify_stratum(pt.lattice.reduce());
    ssp += st == Stratum::Ssp;
    gss += st == Stratum::Gss;
  }
  for (const auto& pt : family)
    if (!pt.over_kappa) {
      first = &pt;
      break;
    }
  rep.add(section("affine-points", "affine points of a^p + a = b^(p+1) over k", std::to_string(pts.size()),
                  std::to_string(pts.size())));
  rep.add(section("ssp-points", "(a, b) in kappa^2 exactly at superspecial points", std::to_string(pts.size() - outside),
                  std::to_string(ssp)));
  rep.add(section("gss-points", "points outside kappa^2 are gss", std::to_string(outside), std::to_string(gss)));
  if (first) {
    EnumerationOptions opt;
    opt.threads = threads;
    std::map<Subspace, RaynaudLabel> a, b;
    for (const auto& r : enumerate_H(first->lattice.reduce(), opt)) a.emplace(r.h, r.type);
    for (const auto& r : enumerate_H_uv(*first)) b.emplace(r.record.h, r.record.type);
    rep.add(section("uv-census", "subgroups <eps3, eta(u:v)> exhaust the fiber", std::to_string(a.size()),
                    std::to_string(a == b ? b.size() : 0)));
  }
}

int cmd_census(int p, int deg, const std::string& point, const std::string& format, const std::string& out,
               unsigned threads) {
  check_field(p, deg);
  auto R = GaloisRing::make(Field::make(p, 2 * deg), 2);
  ReportDocument rep = make_report(p, deg, 0);
  rep.meta["command"] = "census";
  rep.meta["point"] = point;
  if (point == "appendix") census_appendix(rep, R, threads);
  else census_fiber(rep, R, point, threads);
  emit(render(rep, format), out);
  return rep.pass() ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, const std::string& format, const std::string& out, unsigned threads,
               std::uint64_t seed) {
  SuiteOptions o;
  o.threads = threads;
  o.seed = seed;
  ReportDocument rep = make_report(3, 0, seed);
  rep.meta["command"] = "verify";
  rep.meta["suite"] = suite;
  rep.add(run_suite(suite, o));
  emit(render(rep, format), out);
  return rep.pass() ? kExitPass : kExitFail;
}

int cmd_dump(const std::string& id, int p, int deg, const std::string& out) {
  check_field(p, deg);
  emit(dump_module(id, canonical_lattice(id, GaloisRing::make(Field::make(p, 2 * deg), 2))), out);
  return kExitPass;
}

// Reads a dump, checks the axioms and writes it back out.
int cmd_load(const std::string& in, const std::string& out) {
  std::ifstream f(in, std::ios::binary);
  if (!f) throw UsageError("cannot read " + in);
  std::stringstream ss;
  ss << f.rdbuf();
  const LoadedModule m = load_module(ss.str());
  const auto rep = m.lattice.check_axioms();
  for (const auto& v : rep.violations) std::cerr << "axiom violation: " << v << '\n';
  emit(dump_module(m.id, m.lattice), out);
  return rep.ok() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dieudonne-module fiber census and verification"};
  app.require_subcommand(1);
  int p = 3, deg = 1;
  std::string point = "mu", format = "text", out, suite = "all", id, in;
  unsigned threads = 1;
  std::uint64_t seed = SuiteOptions{}.seed;

  const std::vector<std::string> formats = {"json", "csv", "text"};
  auto* census = app.add_subcommand("census", "enumerate the fiber above a canonical point");
  census->add_option("--p", p, "residue characteristic")->check(CLI::IsMember({3, 5, 7}));
  census->add_option("--deg", deg, "field degree m, k = F_{p^{2m}}");
  census->add_option("--point", point, "source point")->check(CLI::IsMember({"mu", "gss", "ssp", "appendix"}));
  census->add_option("--format", format)->check(CLI::IsMember(formats));
  census->add_option("--out", out, "write the report to FILE");
  census->add_option("--threads", threads);

  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  verify->add_option("--format", format)->check(CLI::IsMember(formats));
  verify->add_option("--out", out, "write the report to FILE");
  verify->add_option("--threads", threads);
  verify->add_option("--seed", seed, "seed for sampled basis changes");

  auto* dump = app.add_subcommand("dump", "serialize a canonical module");
  dump->add_option("id", id, "module id")->required()->check(CLI::IsMember(canonical_module_ids()));
  dump->add_option("--p", p)->check(CLI::IsMember({3, 5, 7}));
  dump->add_option("--deg", deg);
  dump->add_option("--format", format)->check(CLI::IsMember({"json"}));
  dump->add_option("--out", out);

  auto* load = app.add_subcommand("load", "read a dump, check axioms, re-serialize");
  load->add_option("file", in)->required();
  load->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  try {
    if (*census) return cmd_census(p, deg, point, format, out, threads);
    if (*verify) return cmd_verify(suite, format, out, threads, seed);
    if (*dump) return cmd_dump(id, p, deg, out);
    if (*load) return cmd_load(in, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
