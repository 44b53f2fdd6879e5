#include "hbsum/analytic.hpp"
#include "hbsum/periodic.hpp"
#include "hbsum/polys.hpp"
#include "hbsum/reciprocity.hpp"
#include "hbsum/report_io.hpp"
#include "hbsum/sums.hpp"
#include "sweep.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using hbsum::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitVerified = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  bool json_output = false;
  int jobs = 0;
  std::string out_path;
};

std::ostream& open_out(const GlobalOpts& g, std::ofstream& file) {
  if (g.out_path.empty()) return std::cout;
  file.open(g.out_path);
  if (!file) {
    throw hbsum::ParseError("cannot open output file: " + g.out_path);
  }
  return file;
}

int print_report(const hbsum::VerificationReport& rep, const GlobalOpts& g) {
  std::ofstream file;
  std::ostream& out = open_out(g, file);
  if (g.json_output) {
    out << hbsum::report_json(rep) << '\n';
  } else {
    out << "identity: " << hbsum::identity_name(rep.identity) << '\n'
        << "params:   m=" << rep.params.m << " n=" << rep.params.n
        << " a=" << rep.params.a << " b=" << rep.params.b
        << " c=" << rep.params.c << " x=" << hbsum::to_string(rep.params.x)
        << " y=" << hbsum::to_string(rep.params.y)
        << " z=" << hbsum::to_string(rep.params.z) << '\n'
        << "lhs:      " << hbsum::to_string(rep.lhs) << '\n'
        << "rhs:      " << hbsum::to_string(rep.rhs) << '\n'
        << "residual: " << hbsum::to_string(rep.residual) << '\n'
        << "verified: " << (rep.verified ? "true" : "false") << '\n';
  }
  return rep.verified ? kExitVerified : kExitMathFailure;
}

json check_to_json(const hbsum::CheckResult& res) {
  json j;
  j["check"] = res.check;
  j["params"] = res.params;
  j["lhs"] = {{"re", res.lhs.real()}, {"im", res.lhs.imag()}};
  j["rhs"] = {{"re", res.rhs.real()}, {"im", res.rhs.imag()}};
  j["deviation"] = res.deviation;
  j["bound"] = res.bound;
  j["terms"] = res.terms_used;
  j["status"] = res.status == hbsum::CheckStatus::ok ? "ok"
                : res.status == hbsum::CheckStatus::non_convergence
                    ? "non_convergence"
                    : "unsupported_point";
  j["passed"] = res.passed;
  return j;
}

int print_check(const hbsum::CheckResult& res, const GlobalOpts& g) {
  std::ofstream file;
  std::ostream& out = open_out(g, file);
  if (g.json_output) {
    out << check_to_json(res).dump() << '\n';
  } else {
    out << res.check << " " << res.params << '\n'
        << "lhs:       " << res.lhs.real() << (res.lhs.imag() < 0 ? " - " : " + ")
        << std::abs(res.lhs.imag()) << "i" << '\n'
        << "rhs:       " << res.rhs.real() << (res.rhs.imag() < 0 ? " - " : " + ")
        << std::abs(res.rhs.imag()) << "i" << '\n'
        << "deviation: " << res.deviation << '\n'
        << "bound:     " << res.bound << '\n'
        << "terms:     " << res.terms_used << '\n';
    if (res.status == hbsum::CheckStatus::non_convergence) {
      out << "status:    non-convergence (best estimate shown)\n";
    } else if (res.status == hbsum::CheckStatus::unsupported_point) {
      out << "status:    unsupported point\n";
    }
    out << (res.passed ? "passed" : "FAILED") << '\n';
  }
  if (res.status == hbsum::CheckStatus::unsupported_point) return kExitUsage;
  return res.passed ? kExitVerified : kExitMathFailure;
}

struct FourierArgs {
  std::int64_t n = 0;
  std::string x = "0";
  std::int64_t terms = 1000;
  std::int64_t max_terms = 1000000;
  double growth = 4.0;
  double tol = 1e-3;
};

hbsum::TruncationPlan plan_from(const FourierArgs& fa) {
  hbsum::TruncationPlan plan;
  plan.initial_terms = fa.terms;
  plan.max_terms = std::max(fa.max_terms, fa.terms);
  plan.growth_factor = fa.growth;
  plan.tolerance = fa.tol;
  return plan;
}

int run_fourier_check(const char* name, bool euler, const FourierArgs& fa,
                      const GlobalOpts& g) {
  const Rational x = hbsum::parse_rational(fa.x);
  const hbsum::TruncationPlan plan = plan_from(fa);
  const hbsum::ApproxComplex approx = euler
                                          ? hbsum::ebar_fourier(fa.n, x, plan)
                                          : hbsum::bbar_fourier(fa.n, x, plan);
  const Rational exact_q = euler ? hbsum::euler_bar(fa.n, x)
                                 : hbsum::bernoulli_bar(fa.n, x);
  const double exact = exact_q.convert_to<double>();

  hbsum::CheckResult res;
  res.check = name;
  res.params = "n=" + std::to_string(fa.n) + " x=" + hbsum::to_string(x);
  res.lhs = approx.value();
  res.rhs = {exact, 0.0};
  res.deviation = std::abs(approx.value() - std::complex<double>{exact, 0.0});
  res.bound = approx.tail_bound;
  res.tolerance = plan.tolerance;
  const bool converged = approx.tail_bound <= plan.tolerance;
  res.status = converged ? hbsum::CheckStatus::ok
                         : hbsum::CheckStatus::non_convergence;
  res.passed = converged && res.deviation <= plan.tolerance;
  return print_check(res, g);
}

int run_identities_check(std::int64_t count, std::uint64_t seed,
                         const GlobalOpts& g) {
  const auto suites = hbsum::run_identity_suites(count, seed);
  std::ofstream file;
  std::ostream& out = open_out(g, file);
  std::int64_t failures = 0;
  if (g.json_output) {
    json arr = json::array();
    for (const auto& s : suites) {
      failures += s.failures;
      arr.push_back({{"suite", s.name},
                     {"instances", s.instances},
                     {"failures", s.failures}});
    }
    out << arr.dump(2) << '\n';
  } else {
    for (const auto& s : suites) {
      failures += s.failures;
      out << s.name << ": " << s.instances << " instances, " << s.failures
          << " failures\n";
    }
    out << (failures == 0 ? "passed" : "FAILED") << '\n';
  }
  return failures == 0 ? kExitVerified : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hbsum: exact Dedekind/Hardy-Berndt sums, reciprocity "
               "verification, and numerical series checks"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.json_output, "emit JSON instead of human-readable text");
  app.add_option("--jobs", g.jobs, "worker threads for sweeps (default: all cores)");
  app.add_option("--out", g.out_path, "write output to a file instead of stdout");

  std::function<int()> action;

  // ---- compute ----
  auto* compute = app.add_subcommand("compute", "evaluate one sum exactly");
  compute->require_subcommand(1);
  {
    struct ComputeArgs {
      std::int64_t m = 0, n = 0, a = 0, b = 0, c = 0;
      std::string x = "0", y = "0", z = "0";
    };
    auto args = std::make_shared<ComputeArgs>();

    auto* ded = compute->add_subcommand("dedekind", "classical Dedekind sum s(a,b)");
    ded->add_option("--a", args->a)->required();
    ded->add_option("--b", args->b)->required();
    ded->callback([&action, args] {
      action = [args] {
        std::cout << hbsum::to_string(hbsum::dedekind_sum(args->a, args->b)) << '\n';
        return kExitVerified;
      };
    });

    auto* s5 = compute->add_subcommand("s5", "Hardy-Berndt sum s5(a,b)");
    s5->add_option("--a", args->a)->required();
    s5->add_option("--b", args->b)->required();
    s5->callback([&action, args] {
      action = [args] {
        std::cout << hbsum::to_string(hbsum::hardy_s5(args->a, args->b)) << '\n';
        return kExitVerified;
      };
    });

    auto* s5t = compute->add_subcommand("s5-three", "three-argument sum s5(a,b,c)");
    s5t->add_option("--a", args->a)->required();
    s5t->add_option("--b", args->b)->required();
    s5t->add_option("--c", args->c)->required();
    s5t->callback([&action, args] {
      action = [args] {
        std::cout << hbsum::to_string(
                         hbsum::hardy_s5_three(args->a, args->b, args->c))
                  << '\n';
        return kExitVerified;
      };
    });

    auto* gen = compute->add_subcommand("gen", "generalized sum S^(5)_{m,n}");
    gen->add_option("--m", args->m)->required();
    gen->add_option("--n", args->n)->required();
    gen->add_option("--a", args->a)->required();
    gen->add_option("--b", args->b)->required();
    gen->add_option("--c", args->c)->required();
    gen->add_option("--x", args->x);
    gen->add_option("--y", args->y);
    gen->add_option("--z", args->z);
    gen->callback([&action, args] {
      action = [args] {
        hbsum::SumSpec spec{args->m, args->n, args->a, args->b, args->c,
                            hbsum::parse_rational(args->x),
                            hbsum::parse_rational(args->y),
                            hbsum::parse_rational(args->z)};
        std::cout << hbsum::to_string(hbsum::generalized_s5(spec)) << '\n';
        return kExitVerified;
      };
    });
  }

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "verify one identity instance exactly");
  verify->require_subcommand(1);
  {
    struct VerifyArgs {
      std::int64_t m = 0, n = 0, a = 1, b = 1, c = 1;
      std::string x = "0", y = "0", z = "0";
    };
    auto args = std::make_shared<VerifyArgs>();

    auto add_ab = [&](CLI::App* cmd) {
      cmd->add_option("--a", args->a)->required();
      cmd->add_option("--b", args->b)->required();
    };

    auto* ded = verify->add_subcommand("dedekind", "Dedekind reciprocity");
    add_ab(ded);
    ded->callback([&action, args, &g] {
      action = [args, &g] {
        return print_report(hbsum::verify_dedekind(args->a, args->b), g);
      };
    });

    auto* hardy = verify->add_subcommand("hardy", "Hardy reciprocity (coprime)");
    add_ab(hardy);
    hardy->callback([&action, args, &g] {
      action = [args, &g] {
        return print_report(hbsum::verify_hardy(args->a, args->b), g);
      };
    });

    auto* cor12 = verify->add_subcommand("cor12", "Hardy reciprocity, gcd form");
    add_ab(cor12);
    cor12->callback([&action, args, &g] {
      action = [args, &g] {
        return print_report(hbsum::verify_cor12(args->a, args->b), g);
      };
    });

    auto* thm11 = verify->add_subcommand("thm11", "generalized two-term reciprocity");
    thm11->add_option("--m", args->m)->required();
    thm11->add_option("--n", args->n)->required();
    add_ab(thm11);
    thm11->add_option("--x", args->x);
    thm11->add_option("--y", args->y);
    thm11->add_option("--z", args->z);
    thm11->callback([&action, args, &g] {
      action = [args, &g] {
        return print_report(
            hbsum::verify_thm11(args->m, args->n, args->a, args->b,
                                hbsum::parse_rational(args->x),
                                hbsum::parse_rational(args->y),
                                hbsum::parse_rational(args->z)),
            g);
      };
    });

    auto* thm13 = verify->add_subcommand("thm13", "generalized modulus-c reciprocity");
    thm13->add_option("--m", args->m)->required();
    thm13->add_option("--n", args->n)->required();
    add_ab(thm13);
    thm13->add_option("--c", args->c)->required();
    thm13->add_option("--x", args->x);
    thm13->add_option("--y", args->y);
    thm13->add_option("--z", args->z);
    thm13->callback([&action, args, &g] {
      action = [args, &g] {
        return print_report(
            hbsum::verify_thm13(args->m, args->n, args->a, args->b, args->c,
                                hbsum::parse_rational(args->x),
                                hbsum::parse_rational(args->y),
                                hbsum::parse_rational(args->z)),
            g);
      };
    });

    auto* cor14 = verify->add_subcommand("cor14", "three-argument reciprocity");
    add_ab(cor14);
    cor14->add_option("--c", args->c)->required();
    cor14->callback([&action, args, &g] {
      action = [args, &g] {
        return print_report(hbsum::verify_cor14(args->a, args->b, args->c), g);
      };
    });
  }

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "verify an identity over a parameter grid");
  {
    struct SweepArgs {
      std::string identity;
      std::string m = "0", n = "0", a = "1", b = "1", c = "1";
      std::string x = "0", y = "0", z = "0";
      std::string format = "csv";
      std::int64_t corrupt_row = -1;
    };
    auto args = std::make_shared<SweepArgs>();
    sweep->add_option("--identity", args->identity,
                      "dedekind_12|hardy_13|thm_11|cor_12|thm_13|cor_14")
        ->required();
    sweep->add_option("--m", args->m, "integer axis: start:stop[:step] or comma list");
    sweep->add_option("--n", args->n);
    sweep->add_option("--a", args->a);
    sweep->add_option("--b", args->b);
    sweep->add_option("--c", args->c);
    sweep->add_option("--x", args->x, "rational axis: comma list of p/q");
    sweep->add_option("--y", args->y);
    sweep->add_option("--z", args->z);
    sweep->add_option("--format", args->format)
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--corrupt-row", args->corrupt_row)->group("");
    sweep->callback([&action, args, &g] {
      action = [args, &g] {
        const auto id = hbsum::identity_from_name(args->identity);
        if (!id) {
          throw hbsum::ParseError("unknown identity: '" + args->identity + "'");
        }
        hbsum::cli::SweepGrid grid;
        grid.identity = *id;
        grid.m = hbsum::cli::parse_int_axis(args->m);
        grid.n = hbsum::cli::parse_int_axis(args->n);
        grid.a = hbsum::cli::parse_int_axis(args->a);
        grid.b = hbsum::cli::parse_int_axis(args->b);
        grid.c = hbsum::cli::parse_int_axis(args->c);
        grid.x = hbsum::cli::parse_rational_axis(args->x);
        grid.y = hbsum::cli::parse_rational_axis(args->y);
        grid.z = hbsum::cli::parse_rational_axis(args->z);
        grid.format = args->format == "json" ? hbsum::cli::OutputFormat::json
                                             : hbsum::cli::OutputFormat::csv;
        grid.jobs = g.jobs;
        if (args->corrupt_row >= 0) grid.corrupt_row = args->corrupt_row;

        std::int64_t skipped = 0;
        if (hbsum::cli::enumerate_instances(grid, &skipped).empty()) {
          std::cerr << "sweep: empty grid after precondition filtering ("
                    << skipped << " skipped)\n";
          return kExitUsage;
        }
        std::ofstream file;
        std::ostream& out = open_out(g, file);
        const auto summary = hbsum::cli::run_sweep(grid, out);
        std::ostream& info = g.out_path.empty() ? std::cerr : std::cout;
        info << "verified=" << summary.verified << " failed=" << summary.failed
             << " skipped=" << summary.skipped << " total=" << summary.total()
             << '\n';
        return summary.failed == 0 ? kExitVerified : kExitMathFailure;
      };
    });
  }

  // ---- check ----
  auto* check = app.add_subcommand("check", "numerical checks of the series identities");
  check->require_subcommand(1);
  {
    auto fa = std::make_shared<FourierArgs>();
    auto add_plan = [&](CLI::App* cmd, double default_tol) {
      fa->tol = default_tol;
      cmd->add_option("--terms", fa->terms, "initial number of term pairs");
      cmd->add_option("--max-terms", fa->max_terms);
      cmd->add_option("--growth", fa->growth);
      cmd->add_option("--tol", fa->tol);
    };

    auto* ebar = check->add_subcommand(
        "ebar-fourier", "Fourier series of the quasi-periodic Euler function");
    ebar->add_option("--n", fa->n)->required();
    ebar->add_option("--x", fa->x)->required();
    add_plan(ebar, 1e-3);
    ebar->callback([&action, fa, &g] {
      action = [fa, &g] { return run_fourier_check("ebar-fourier", true, *fa, g); };
    });

    auto* bbar = check->add_subcommand(
        "bbar-fourier", "Fourier series of the Bernoulli function");
    bbar->add_option("--n", fa->n)->required();
    bbar->add_option("--x", fa->x)->required();
    add_plan(bbar, 1e-3);
    bbar->callback([&action, fa, &g] {
      action = [fa, &g] { return run_fourier_check("bbar-fourier", false, *fa, g); };
    });

    struct LemmaArgs {
      std::int64_t j = 1, b = 1, r = 0;
      std::string x = "0";
      std::string point;
      double tol = -1.0;  // <0: per-order default
      std::int64_t terms = 1000, max_terms = 1000000;
      double growth = 4.0;
    };
    auto la = std::make_shared<LemmaArgs>();
    auto add_lemma_plan = [&](CLI::App* cmd) {
      cmd->add_option("--terms", la->terms);
      cmd->add_option("--max-terms", la->max_terms);
      cmd->add_option("--growth", la->growth);
      cmd->add_option("--tol", la->tol);
    };
    auto lemma_plan = [la] {
      hbsum::TruncationPlan plan = hbsum::TruncationPlan::for_order(la->j);
      plan.initial_terms = la->terms;
      plan.max_terms = std::max(la->max_terms, std::int64_t{1});
      plan.growth_factor = la->growth;
      if (la->tol > 0) plan.tolerance = la->tol;
      return plan;
    };

    auto* l24 = check->add_subcommand(
        "lemma24", "cot derivatives against the periodic zeta closed form");
    l24->add_option("--j", la->j)->required();
    l24->add_option("--r", la->r);
    l24->add_option("--b", la->b);
    l24->add_option("--point", la->point, "evaluation point p/q (overrides --r/--b)");
    l24->add_option("--tol", la->tol);
    l24->callback([&action, la, &g] {
      action = [la, &g] {
        const Rational point =
            la->point.empty()
                ? hbsum::make_rational(hbsum::Int(2 * la->r - 1), hbsum::Int(2) * la->b)
                : hbsum::parse_rational(la->point);
        const double tol = la->tol > 0 ? la->tol : 1e-9;
        return print_check(hbsum::lemma24_check(point, la->j, tol), g);
      };
    });

    auto* l25 = check->add_subcommand(
        "lemma25", "bilateral pole sum against its finite closed form");
    l25->add_option("--j", la->j)->required();
    l25->add_option("--b", la->b)->required();
    l25->add_option("--r", la->r)->required();
    add_lemma_plan(l25);
    l25->callback([&action, la, &g, lemma_plan] {
      action = [la, &g, lemma_plan] {
        return print_check(hbsum::lemma25_check(la->j, la->b, la->r, lemma_plan()), g);
      };
    });

    auto* l27 = check->add_subcommand(
        "lemma27", "twisted bilateral pole sum against its finite closed form");
    l27->add_option("--j", la->j)->required();
    l27->add_option("--b", la->b)->required();
    l27->add_option("--r", la->r)->required();
    l27->add_option("--x", la->x)->required();
    add_lemma_plan(l27);
    l27->callback([&action, la, &g, lemma_plan] {
      action = [la, &g, lemma_plan] {
        return print_check(hbsum::lemma27_check(la->j, la->b, la->r,
                                                hbsum::parse_rational(la->x),
                                                lemma_plan()),
                           g);
      };
    });

    struct IdentArgs {
      std::int64_t count = 200;
      std::uint64_t seed = 20240915;
    };
    auto ia = std::make_shared<IdentArgs>();
    auto* ident = check->add_subcommand(
        "identities", "randomized exact suites for the periodized functions");
    ident->add_option("--count", ia->count, "instances per suite");
    ident->add_option("--seed", ia->seed);
    ident->callback([&action, ia, &g] {
      action = [ia, &g] { return run_identities_check(ia->count, ia->seed, g); };
    });
  }

  // ---- polys ----
  auto* polys = app.add_subcommand("polys", "dump exact polynomial value tables as CSV");
  {
    struct PolyArgs {
      std::string table = "bernoulli";
      std::int64_t max_order = 12;
    };
    auto args = std::make_shared<PolyArgs>();
    polys->add_option("--table", args->table, "bernoulli: B_j; euler0: E_n(0)")
        ->check(CLI::IsMember({"bernoulli", "euler0"}));
    polys->add_option("--max-order", args->max_order)->required();
    polys->callback([&action, args, &g] {
      action = [args, &g] {
        std::ofstream file;
        std::ostream& out = open_out(g, file);
        out << "order,value\n";
        for (std::int64_t k = 0; k <= args->max_order; ++k) {
          const Rational v = args->table == "bernoulli"
                                 ? hbsum::bernoulli_number(k)
                                 : hbsum::euler_poly(k, Rational(0));
          out << k << ',' << hbsum::to_string(v) << '\n';
        }
        return kExitVerified;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const hbsum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
