#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bgaps/admissible/admissibility.hpp"
#include "bgaps/admissible/hsmall.hpp"
#include "bgaps/admissible/sieves.hpp"
#include "bgaps/admissible/tuple_io.hpp"
#include "bgaps/bounds/m4eps.hpp"
#include "bgaps/common/hash.hpp"
#include "bgaps/pipeline/report.hpp"
#include "bgaps/symmpoly/algebra.hpp"
#include "bgaps/varprob/krylov.hpp"

using namespace bgaps;
namespace adm = bgaps::admissible;
using bounds::Real;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.require(seconds < budget_seconds, "runtime budget " + std::to_string(budget_seconds) + " s");
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << ": " << title << " ("
            << std::fixed << std::setprecision(2) << seconds << " s)" << out.detail.str() << std::endl;
}

std::string data(const char* name) { return std::string(BGAPS_DATA_DIR) + "/" + name; }

std::string show(const Real& x, int digits = 12) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

}  // namespace

int main() {
  criterion(1, "admissibility ground truth and published tuples", 1, [](Outcome& o) {
    o.require(adm::is_admissible(adm::Tuple({0, 2, 6})), "(0,2,6) admissible");
    o.require(!adm::is_admissible(adm::Tuple({0, 2, 4})), "(0,2,4) not admissible");
    for (auto [file, k, d] : {std::tuple{"tuple_k50.txt", 50u, 246}, {"tuple_k51.txt", 51u, 252}, {"tuple_k54.txt", 54u, 270}}) {
      auto t = adm::load_tuple(data(file));
      o.detail << " H(" << k << ")<=" << t.diameter();
      o.require(t.size() == k && t.diameter() == d && adm::is_admissible(t), file);
    }
  });

  criterion(2, "exhaustive H(3)", 1, [](Outcome& o) {
    auto h = adm::h_exact_small(3, 10);
    o.detail << " H(3)=" << h;
    o.require(h == 6, "H(3) = 6");
  });

  criterion(3, "k primes past k", 30, [](Outcome& o) {
    for (auto [k, d] : {std::pair{5511u, 56538}, {35410u, 433992}, {41588u, 516586}}) {
      auto t = adm::sieve_k_primes_past_k(k);
      o.detail << " " << k << ":" << t.diameter();
      o.require(t.diameter() == d && t.size() == k, std::to_string(k));
    }
  });

  criterion(4, "sieve quality ladder at k=5511", 1800, [](Outcome& o) {
    constexpr std::size_t k = 5511;
    auto check = [&](const char* name, const adm::Tuple& t, double target, double slack) {
      o.detail << " " << name << ":" << t.diameter();
      o.require(t.size() == k && adm::is_admissible(t), std::string(name) + " admissible");
      o.require(t.diameter() <= target * (1 + slack), std::string(name) + " diameter");
    };
    check("eratosthenes", adm::sieve_eratosthenes(k), 55160, 0.005);
    check("hensley-richards", adm::sieve_hensley_richards(k), 54480, 0.005);
    adm::SieveConfig cfg;
    cfg.method = adm::SieveMethod::shifted_schinzel;
    check("shifted-schinzel", adm::sieve_shifted_schinzel(k, cfg).tuple, 53774, 0.005);
    cfg.method = adm::SieveMethod::shifted_greedy;
    check("shifted-greedy", adm::sieve_shifted_greedy(k, cfg).tuple, 52296, 0.01);
  });

  criterion(5, "Krylov lower bounds with exact re-validation", 300, [](Outcome& o) {
    const std::pair<unsigned, const char*> targets[] = {{2, "1.38592"}, {3, "1.64643"}, {4, "1.84539"}, {5, "2.00713"}};
    for (auto [k, target] : targets) {
      auto c = varprob::krylov_lower_bound(k, 25);
      std::stringstream file;
      varprob::write_certificate(file, c);
      auto again = varprob::verify_certificate(varprob::read_certificate(file));
      o.detail << " k=" << k << ":" << to_decimal(c.C, 6);
      o.require(c.verified && again.verified, "certificate re-validates for k=" + std::to_string(k));
      o.require(c.C >= parse_rational(target), "bound for k=" + std::to_string(k));
      o.require(c.C.get_d() < static_cast<double>(bounds::mk_upper(k)), "below (k/(k-1)) ln k");
    }
    for (unsigned k = 2; k <= 10; ++k) {
      auto m = varprob::krylov_moments(k, 2).moments;
      auto f = [](unsigned n) { return symmpoly::factorial(n); };
      bool ok = m[0] == frac(1, f(k)) && m[1] == frac(2 * k, f(k + 1)) &&
                m[2] == frac(k * (5 * k + 1), f(k + 2)) && m[3] == frac(2 * k * k * (7 * k + 5), f(k + 3));
      o.require(ok, "moment closed forms for k=" + std::to_string(k));
    }
  });

  criterion(6, "exact special values", 10, [](Outcome& o) {
    auto m2 = bounds::m2_exact();
    o.detail << " M2=" << show(m2, 10);
    o.require(std::round(static_cast<double>(m2) * 1e5) == 138593, "M2 to 5 decimals");
    Real third = Real(1) / 3;
    Real gap = abs(bounds::m2_eps(third - Real("1e-30")) - bounds::m2_eps(third));
    o.require(gap < Real("1e-9"), "m2_eps branches agree at 1/3");
    o.require(abs(bounds::m2_eps_residual(bounds::m2_eps(third), third)) < Real("1e-9"), "residual at 1/3");
    auto b2 = bounds::bessel_lower(2), b6 = bounds::bessel_lower(6);
    o.detail << " bessel(2)=" << show(b2, 6) << " bessel(6)=" << show(b6, 6);
    o.require(abs(b2 - Real("1.383")) < Real("0.0005"), "bessel_lower(2)");
    o.require(b6 > 2, "bessel_lower(6) > 2");
    for (unsigned k = 2; k <= 200; ++k) o.require(bounds::bessel_lower(k) < 4, "bessel_lower < 4");
  });

  criterion(7, "explicit bound rows reproduce the reference M column", 5, [](Outcome& o) {
    struct Row {
      std::uint64_t k;
      const char *theta, *beta, *M;
    };
    const Row rows[] = {{5511, "0.965", "0.973", "6.000048609"},          {35410, "0.99479", "0.85213", "7.829849259"},
                        {41588, "0.97878", "0.94319", "8.000001401"},     {309661, "0.98627", "0.92091", "10.00000032"},
                        {1649821, "1.00422", "0.80148", "11.65752556"},   {75845707, "1.00712", "0.77003", "15.48125090"},
                        {3473955908, "1.0079318", "0.7490925", "19.30374872"}};
    Real worst = 0;
    for (const auto& r : rows) {
      auto p = bounds::table_params(r.k, Real(r.theta), Real(r.beta));
      bounds::check_conditions(p, bounds::g_moments(p));
      auto rep = bounds::asymptotic_lower(p);
      Real err = abs(rep.lower_bound - Real(r.M));
      worst = std::max(worst, err);
      o.require(err < Real("1e-6"), "row k=" + std::to_string(r.k));
    }
    o.detail << " max |M - published| = " << show(worst, 3);
  });

  criterion(8, "MPZ gate chain for k=35410", 1, [](Outcome& o) {
    auto rep = bounds::asymptotic_lower(bounds::table_params(35410, Real("0.99479"), Real("0.85213")));
    auto C = pipeline::CertifiedBound::from_asymptotic(rep);
    auto tp = pipeline::trunc_parameters(C, 2);
    Rational gate = 600 * tp.varpi + 180 * tp.delta;
    o.detail << " 600varpi+180delta=" << to_decimal(gate, 9);
    o.require(gate < 7, "gate");
    auto d = pipeline::dhl_from_trunc(35410, C, tp.varpi, tp.delta, 2);
    o.detail << " " << d.name();
    o.require(d.name() == "DHL[35410,3]", "claim");
  });

  criterion(9, "3D cutoff exact verification", 120, [](Outcome& o) {
    auto r = cutoff3d::verify_cutoff(cutoff3d::reference_cutoff());
    o.require(r.I == Rational("62082439864241/507343011840"), "I");
    o.require(r.J == Rational("9933190664926733/40587440947200"), "J");
    o.require(r.marginals.size() == 6 && r.marginals_vanish, "six marginals vanish");
    Rational excess = r.J / r.I - 2;
    o.detail << " J/I-2=" << excess;
    o.require(excess == Rational("286648173/4966595189139280"), "J/I - 2");
  });

  criterion(10, "4D enlarged cutoff", 1, [](Outcome& o) {
    auto r = bounds::m4eps_check(Rational(21, 125), Rational(98, 125));
    o.require(abs(r.I.get_d() - 0.00728001347) < 1e-9, "I");
    o.require(abs(r.J.get_d() - 0.003650160667) < 1e-9, "J");
    Rational ratio = 4 * r.J / r.I;
    o.detail << " I=" << to_decimal(r.I, 12) << " J=" << to_decimal(r.J, 12) << " 4J/I=" << to_decimal(ratio, 10);
    o.require(ratio > Rational(200558, 100000), "4J/I > 2.00558");
  });

  criterion(11, "end-to-end H_m chains", 60, [](Outcome& o) {
    using namespace pipeline;
    std::vector<Claim> claims;
    auto d50 = dhl_from_eps(50, Rational(1, 25), CertifiedBound::constant(parse_rational("4.0043"), "published"),
                            Hypothesis::bv(), 1);
    claims.push_back(hm_from_dhl(d50, adm::load_tuple(data("tuple_k50.txt")), file_hash(data("tuple_k50.txt"))));

    auto ratio = CertifiedBound::from_cutoff(cutoff3d::verify_cutoff(cutoff3d::reference_cutoff()));
    auto d3 = dhl_from_marginal(3, Rational(1, 4), ratio, Hypothesis::geh(kThetaNearOne), 1);
    claims.push_back(hm_from_dhl(d3, adm::Tuple({0, 2, 6})));

    auto rep = bounds::asymptotic_lower(bounds::table_params(35410, Real("0.99479"), Real("0.85213")));
    auto C = CertifiedBound::from_asymptotic(rep);
    auto tp = trunc_parameters(C, 2);
    auto d35410 = dhl_from_trunc(35410, C, tp.varpi, tp.delta, 2);
    // A stored 35410-tuple if present, else the only sieve that fits the time budget.
    auto stored = data("tuple_k35410.txt");
    if (std::filesystem::exists(stored)) {
      claims.push_back(hm_from_dhl(d35410, adm::load_tuple(stored), file_hash(stored)));
    } else {
      claims.push_back(hm_from_dhl(d35410, adm::sieve_k_primes_past_k(35410)));
    }

    auto audit = audit_report(emit_report(claims));
    o.require(audit.ok() && audit.claims == 3, "report round-trip audit");
    const std::pair<unsigned, std::int64_t> expected[] = {{1, 246}, {1, 6}, {2, 398130}};
    for (std::size_t i = 0; i < claims.size(); ++i) {
      const auto& h = std::get<HmClaim>(claims[i]);
      o.detail << " H_" << h.m << "<=" << h.bound;
      o.require(h.m == expected[i].first && h.bound <= expected[i].second,
                "H_" + std::to_string(expected[i].first) + " <= " + std::to_string(expected[i].second));
    }
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
