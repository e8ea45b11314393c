#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bgaps/admissible/admissibility.hpp"
#include "bgaps/admissible/hsmall.hpp"
#include "bgaps/admissible/sieves.hpp"
#include "bgaps/admissible/tuple_io.hpp"
#include "bgaps/bounds/asymptotic.hpp"
#include "bgaps/bounds/closed_forms.hpp"
#include "bgaps/bounds/m4eps.hpp"
#include "bgaps/common/hash.hpp"
#include "bgaps/cutoff3d/cutoff.hpp"
#include "bgaps/pipeline/report.hpp"
#include "bgaps/varprob/certificate.hpp"
#include "bgaps/varprob/krylov.hpp"

using namespace bgaps;

namespace {

void print_real(const std::string& label, const bounds::Real& x, int digits = 20) {
  std::cout << label << " = " << std::setprecision(digits) << x << '\n';
}

int emit_certificate(const varprob::BoundCertificate& c, const std::string& out) {
  std::cout << "variant=" << c.variant.name() << " d=" << c.d << " size=" << c.a.size() << '\n'
            << "C=" << to_decimal(c.C, 12) << " verified=" << c.verified << '\n';
  if (!out.empty()) {
    std::ofstream f(out);
    varprob::write_certificate(f, c);
  }
  return c.verified ? 0 : 1;
}


}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bgaps: admissible tuples, variational bounds and DHL/H_m claims"};
  app.require_subcommand(1);
  int status = 0;

  // tuple
  auto* tuple = app.add_subcommand("tuple", "admissible tuples");
  tuple->require_subcommand(1);
  {
    auto* find = tuple->add_subcommand("find", "construct an admissible k-tuple with a sieve");
    static std::size_t k = 0;
    static std::string method = "shifted-greedy", out;
    static std::optional<std::int64_t> shift;
    static unsigned threads = 1;
    find->add_option("--k", k)->required();
    find->add_option("--method", method);
    find->add_option("--shift", shift, "fixed shift; omitted means search");
    find->add_option("--threads", threads);
    find->add_option("--out", out, "write the tuple here");
    find->callback([&] {
      admissible::SieveConfig cfg;
      cfg.method = admissible::parse_sieve_method(method);
      cfg.shift = shift;
      cfg.threads = threads;
      cfg.batch = threads;
      auto r = admissible::run_sieve(k, cfg);
      std::cout << "k=" << k << " method=" << method << " diameter=" << r.tuple.diameter() << " shift=" << r.shift
                << " admissible=" << admissible::is_admissible(r.tuple) << '\n';
      if (!out.empty()) admissible::save_tuple(out, r.tuple);
    });

    auto* verify = tuple->add_subcommand("verify", "check a tuple file");
    static std::string file;
    verify->add_option("file", file)->required();
    verify->callback([&] {
      auto t = admissible::load_tuple(file);
      auto obstruction = admissible::first_obstruction(t);
      std::cout << "k=" << t.size() << " diameter=" << t.diameter() << " hash=" << file_hash(file)
                << " admissible=" << !obstruction.has_value() << '\n';
      if (obstruction) {
        std::cout << "every class mod " << *obstruction << " is occupied\n";
        status = 1;
      }
    });

    auto* hsmall = tuple->add_subcommand("hsmall", "exact H(k) by exhaustive search");
    static std::size_t hk = 0;
    static std::int64_t dmax = 0;
    hsmall->add_option("--k", hk)->required();
    hsmall->add_option("--dmax", dmax)->required();
    hsmall->callback([&] { std::cout << "H(" << hk << ") = " << admissible::h_exact_small(hk, dmax) << '\n'; });
  }

  // mk / mkeps
  auto* mk = app.add_subcommand("mk", "certified lower bounds on M_k");
  mk->require_subcommand(1);
  static unsigned vk = 2, vn = 1, vd = 0, vthreads = 1;
  static bool full = false;
  static std::string vout, veps;
  {
    auto* krylov = mk->add_subcommand("krylov", "Krylov subspace bound");
    krylov->add_option("--k", vk)->required();
    krylov->add_option("--n", vn)->required();
    krylov->add_option("--out", vout);
    krylov->callback([&] { status = emit_certificate(varprob::krylov_lower_bound(vk, vn), vout); });

    auto* basis = mk->add_subcommand("basis", "symmetric polynomial basis bound");
    basis->add_option("--k", vk)->required();
    basis->add_option("--d", vd)->required();
    basis->add_flag("--full-signatures", full);
    basis->add_option("--threads", vthreads);
    basis->add_option("--out", vout);
    basis->callback([&] {
      status = emit_certificate(varprob::find_certificate(varprob::assemble_plain(vk, vd, full, vthreads)), vout);
    });
  }
  auto* mkeps = app.add_subcommand("mkeps", "certified lower bounds on M_{k,eps}");
  mkeps->require_subcommand(1);
  {
    auto* basis = mkeps->add_subcommand("basis", "enlarged-support basis bound");
    basis->add_option("--k", vk)->required();
    basis->add_option("--d", vd)->required();
    basis->add_option("--eps", veps)->required();
    basis->add_flag("--full-signatures", full);
    basis->add_option("--threads", vthreads);
    basis->add_option("--out", vout);
    basis->callback([&] {
      auto g = varprob::assemble_eps(vk, vd, parse_rational(veps), full, vthreads);
      status = emit_certificate(varprob::find_certificate(g), vout);
    });
  }
  auto* vcert = app.add_subcommand("verify-cert", "rebuild the matrices and re-check a certificate");
  static std::string cert_file;
  vcert->add_option("file", cert_file)->required();
  vcert->add_option("--threads", vthreads);
  vcert->callback([&] {
    auto c = varprob::verify_certificate(varprob::load_certificate(cert_file), vthreads);
    std::cout << "variant=" << c.variant.name() << " C=" << to_decimal(c.C, 12) << " verified=" << c.verified
              << " hash=" << file_hash(cert_file) << '\n';
    status = c.verified ? 0 : 1;
  });

  // bounds
  auto* asympt = app.add_subcommand("asympt", "explicit lower bound on M_k^[T]");
  {
    static std::uint64_t k = 0;
    static std::string theta, beta, tau;
    asympt->add_option("--k", k)->required();
    asympt->add_option("--theta", theta)->required();
    asympt->add_option("--beta", beta)->required();
    asympt->add_option("--tau", tau);
    asympt->callback([&] {
      std::optional<bounds::Real> t;
      if (!tau.empty()) t = bounds::Real(tau);
      auto r = bounds::asymptotic_lower(bounds::table_params(k, bounds::Real(theta), bounds::Real(beta), t));
      print_real("c", r.params.c);
      print_real("T", r.params.T);
      print_real("tau", r.params.tau);
      print_real("m2", r.m2);
      print_real("mu", r.mu);
      print_real("sigma2", r.sigma2);
      for (auto [name, v] : {std::pair{"Z", &r.Z}, {"Z3", &r.Z3}, {"W", &r.W}, {"X", &r.X}, {"V", &r.V}, {"U", &r.U}}) {
        print_real(name, *v);
      }
      print_real("error_budget", r.error_budget, 6);
      print_real("M", r.lower_bound, 15);
    });
  }
  app.add_subcommand("m2exact", "M_2 in closed form")->callback([] { print_real("M_2", bounds::m2_exact(), 30); });
  auto* m2eps = app.add_subcommand("m2eps", "M_{2,eps}");
  {
    static std::string eps;
    m2eps->add_option("--eps", eps)->required();
    m2eps->callback([&] {
      Rational e = parse_rational(eps);
      print_real("M_2,eps", bounds::m2_eps(bounds::Real(e.get_num().get_str()) / bounds::Real(e.get_den().get_str())),
                 30);
    });
  }
  auto* m4 = app.add_subcommand("m4eps", "exact four-dimensional enlarged-support check");
  {
    static std::string eps, alpha;
    m4->add_option("--eps", eps)->required();
    m4->add_option("--alpha", alpha)->required();
    m4->callback([&] {
      auto r = bounds::m4eps_check(parse_rational(eps), parse_rational(alpha));
      Rational ratio = 4 * r.J / r.I;
      std::cout << "I = " << r.I << " ~ " << to_decimal(r.I, 15) << '\n'
                << "J = " << r.J << " ~ " << to_decimal(r.J, 15) << '\n'
                << "4J/I ~ " << to_decimal(ratio, 12) << " above 2.00558: " << r.ratio_ok << '\n';
      status = r.ratio_ok ? 0 : 1;
    });
  }
  auto* bessel = app.add_subcommand("bessel", "4k(k-1)/j_{k-2}^2");
  {
    static unsigned k = 2;
    bessel->add_option("--k", k)->required();
    bessel->callback([&] { print_real("lower", bounds::bessel_lower(k)); });
  }

  // cutoff3d
  auto* c3 = app.add_subcommand("cutoff3d", "three-dimensional piecewise cutoff");
  c3->require_subcommand(1);
  {
    c3->add_subcommand("verify", "exact I, J and marginal identities")->callback([&] {
      auto r = cutoff3d::verify_cutoff(cutoff3d::reference_cutoff());
      std::cout << "I = " << r.I << " ~ " << to_decimal(r.I, 12) << '\n'
                << "J = " << r.J << " ~ " << to_decimal(r.J, 12) << '\n'
                << "J/I - 2 = " << Rational(r.J / r.I - 2) << '\n';
      for (const auto& [id, p] : r.marginals) std::cout << id << ": " << p.to_string() << '\n';
      std::cout << "marginals vanish: " << r.marginals_vanish << ", J > 2I: " << r.ratio_above_two << '\n';
      status = r.ok() ? 0 : 1;
    });
    auto* ev = c3->add_subcommand("eval", "evaluate one piece at a point");
    static std::string piece, at;
    ev->add_option("--piece", piece, "A..U, optionally with a relabeling such as A_yzx")->required();
    ev->add_option("--at", at, "x,y,z as rationals")->required();
    ev->callback([&] {
      cutoff3d::Point3 p;
      std::stringstream ss(at);
      std::string item;
      for (auto& c : p) {
        if (!std::getline(ss, item, ',')) throw CLI::ValidationError("--at", "expected x,y,z");
        c = parse_rational(item);
      }
      std::string perm = piece.size() > 2 ? piece.substr(2) : "xyz";
      auto f = cutoff3d::reference_cutoff();
      Rational v = f.on(piece[0], perm).eval(p[0], p[1], p[2]);
      bool inside = false;
      for (const auto& poly : cutoff3d::build_partition(f.eps)) {
        if (poly.piece() == piece[0] && poly.perm() == perm) inside = poly.contains(p);
      }
      std::cout << piece[0] << '_' << perm << "(" << at << ") = " << v << " ~ " << to_decimal(v, 12)
                << (inside ? "" : " (point outside this region)") << '\n';
    });
  }

  // chain / report
  auto* chain = app.add_subcommand("chain", "derive DHL and H_m claims");
  chain->require_subcommand(1);
  {
    auto* hm = chain->add_subcommand("hm", "H_m bound from a DHL rule and a tuple");
    static std::string rule, eps = "0", theta, varpi, delta, hyp, cert, constant, tuple_file, out;
    static std::string a_theta, a_beta;
    static std::uint64_t k = 0;
    static unsigned m = 1;
    static bool non_strict = false;
    hm->add_option("--dhl-rule", rule)->required()->check(CLI::IsMember({"mk", "trunc", "eps", "marginal"}));
    hm->add_option("--k", k)->required();
    hm->add_option("--m", m)->required();
    hm->add_option("--eps", eps);
    hm->add_option("--theta", theta, "P/Q, or near1 for the full hypothesis");
    hm->add_option("--hyp", hyp, "EH, GEH or BV (default: BV for theta 1/2 under mk/eps, GEH for marginal)");
    hm->add_option("--varpi", varpi);
    hm->add_option("--delta", delta);
    hm->add_option("--cert", cert, "certificate file, re-verified before use");
    hm->add_option("--constant", constant, "externally supplied bound instead of --cert");
    hm->add_option("--asympt-theta", a_theta, "trunc rule: evaluate the explicit bound with this theta");
    hm->add_option("--asympt-beta", a_beta);
    hm->add_option("--tuple", tuple_file)->required();
    hm->add_option("--out", out, "write the report here as well");
    hm->add_flag("--non-strict", non_strict, "non-strict side conditions for the eps rule");
    hm->callback([&] {
      using namespace pipeline;
      auto r = parse_dhl_rule(rule);
      Rational th = theta.empty() || theta == "near1" ? kThetaNearOne : parse_rational(theta);
      std::string kind = hyp.empty() ? (r == DhlRule::marginal ? "GEH" : (th == Rational(1, 2) ? "BV" : "EH")) : hyp;
      Hypothesis h = kind == "BV" ? Hypothesis::bv() : kind == "GEH" ? Hypothesis::geh(th) : Hypothesis::eh(th);

      std::optional<CertifiedBound> bound;
      if (!cert.empty()) {
        bound = CertifiedBound::from_certificate(varprob::verify_certificate(varprob::load_certificate(cert)),
                                                 file_hash(cert));
      } else if (!constant.empty()) {
        bound = CertifiedBound::constant(parse_rational(constant), "cli");
      } else if (r == DhlRule::marginal) {
        bound = CertifiedBound::from_cutoff(cutoff3d::verify_cutoff(cutoff3d::reference_cutoff()));
      } else if (r == DhlRule::trunc && !a_theta.empty()) {
        bound = CertifiedBound::from_asymptotic(
            bounds::asymptotic_lower(bounds::table_params(k, bounds::Real(a_theta), bounds::Real(a_beta))));
      } else {
        throw CLI::ValidationError("bound", "give --cert, --constant or (trunc) --asympt-theta/--asympt-beta");
      }

      DHLClaim d;
      switch (r) {
        case DhlRule::mk:
          d = dhl_from_mk(k, *bound, h, m);
          break;
        case DhlRule::trunc: {
          TruncParameters tp{};
          if (!varpi.empty()) {
            tp = {parse_rational(varpi), parse_rational(delta)};
          } else {
            tp = trunc_parameters(*bound, m);
          }
          d = dhl_from_trunc(k, *bound, tp.varpi, tp.delta, m);
          break;
        }
        case DhlRule::eps:
          d = dhl_from_eps(k, parse_rational(eps), *bound, h, m, {non_strict});
          break;
        case DhlRule::marginal:
          d = dhl_from_marginal(k, parse_rational(eps), *bound, h, m);
          break;
      }
      auto claim = hm_from_dhl(d, admissible::load_tuple(tuple_file), file_hash(tuple_file));
      std::string text = emit_report({claim});
      std::cout << text;
      if (!out.empty()) std::ofstream(out) << text;
    });
  }
  auto* report = app.add_subcommand("report", "re-parse and audit report files");
  {
    static std::vector<std::string> files;
    report->add_option("files", files)->required();
    report->callback([&] {
      for (const auto& f : files) {
        auto a = pipeline::audit_report(read_file(f));
        std::cout << f << ": claims=" << a.claims << " " << (a.ok() ? "valid" : "INVALID") << '\n';
        for (const auto& p : a.problems) std::cout << "  " << p << '\n';
        if (!a.ok()) status = 1;
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return status;
}
