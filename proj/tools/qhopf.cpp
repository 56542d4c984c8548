#include <iostream>

#include <CLI11.hpp>

#include "qhopf/error.hpp"
#include "qhopf/parser.hpp"
#include "qhopf/verify.hpp"

using namespace qhopf;

namespace {

bool usage_error(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnknownSymbol:
    case ErrorKind::UnknownSuite:
    case ErrorKind::ConfigError:
      return true;
    default:
      return false;
  }
}

AlgebraConfig base_config(const std::string& variant, int n) {
  AlgebraConfig c;
  c.variant = variant == "hat" ? Variant::Hat : Variant::Standard;
  if (n > 0) {
    c.level = Level::Braided;
    c.copies = n;
  }
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qhopf: exact verification for q-deformed quaternions and su(2) instantons"};
  app.require_subcommand(1);

  std::string variant = "standard";
  int n = 0;
  std::string expr;

  auto* nf = app.add_subcommand("nf", "print the canonical normal form of an expression");
  nf->add_option("expr", expr, "expression")->required();
  nf->add_option("--variant", variant, "differential calculus")->check(CLI::IsMember({"standard", "hat"}));
  nf->add_option("--n", n, "braided copies");

  std::string qs, us, ps;
  auto* ev = app.add_subcommand("eval", "exact rational value of a coefficient expression");
  ev->add_option("expr", expr, "expression")->required();
  ev->add_option("--q", qs, "q as P/R")->required();
  ev->add_option("--u", us, "|x|^2 as P/R");
  ev->add_option("--p", ps, "rho^2 as P/R");
  ev->add_option("--variant", variant, "differential calculus")->check(CLI::IsMember({"standard", "hat"}));

  std::vector<std::string> suites;
  std::string qnum, config;
  std::vector<std::string> orders;
  int jobs = 1, max_overlap = 3;
  int vn = 2;
  std::string dump_dir;
  bool no_timing = false;
  auto* ver = app.add_subcommand("verify", "run verification suites and print a JSON report");
  ver->add_option("suites", suites, "suite names, or all");
  auto* o_variant = ver->add_option("--variant", variant, "differential calculus")->check(CLI::IsMember({"standard", "hat"}));
  auto* o_n = ver->add_option("--n", vn, "braided copies for the moduli suites");
  auto* o_q = ver->add_option("--q-numeric", qnum, "also specialize residuals at this q (P/R)");
  auto* o_jobs = ver->add_option("--jobs", jobs, "suites run concurrently")->check(CLI::PositiveNumber);
  ver->add_option("--dump-dir", dump_dir, "write full failing residuals here");
  ver->add_option("--config", config, "JSON (.json) or TOML configuration file");
  ver->add_option("--order", orders, "monomial order KIND=LIST, KIND in xi, pd, x, LIST like 11,12,21,22");
  auto* o_ov = ver->add_option("--max-overlap", max_overlap, "overlap length for confluence")->check(CLI::Range(2, 4));
  ver->add_flag("--no-timing", no_timing, "omit the timing field");

  app.add_subcommand("list", "list the suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("list")) {
      for (const auto& s : suite_list()) std::cout << s.name << "\t" << s.summary << "\n";
      return 0;
    }
    if (app.got_subcommand("nf")) {
      auto e = cli::parse(expr);
      auto a = cli::algebra_for(*e, base_config(variant, n));
      std::cout << cli::evaluate(*e, a).str() << "\n";
      return 0;
    }
    if (app.got_subcommand("eval")) {
      mpq_class q = cli::parse_rational(qs);
      std::optional<mpq_class> u, p;
      if (!us.empty()) u = cli::parse_rational(us);
      if (!ps.empty()) p = cli::parse_rational(ps);
      auto e = cli::parse(expr);
      auto a = cli::algebra_for(*e, base_config(variant, 0));
      std::cout << cli::eval_rational(cli::evaluate(*e, a), q, u, p).get_str() << "\n";
      return 0;
    }
    VerifyOptions opt;
    if (!config.empty()) load_config(config, opt);
    if (o_variant->count()) opt.suite.base.variant = variant == "hat" ? Variant::Hat : Variant::Standard;
    if (o_n->count()) opt.suite.n = vn;
    if (o_ov->count()) opt.suite.max_overlap = max_overlap;
    if (o_jobs->count()) opt.jobs = jobs;
    if (o_q->count()) opt.q_numeric = cli::parse_rational(qnum);
    for (const auto& o : orders) apply_order(opt.suite.base, o);
    if (!suites.empty()) opt.suites = suites;
    opt.dump_dir = dump_dir;
    opt.timing = !no_timing;
    VerifyResult r = verify(opt);
    std::cout << r.json.dump(2) << "\n";
    return r.exit_code;
  } catch (const SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!expr.empty() && e.line() == 1) std::cerr << "  " << expr << "\n  " << std::string(static_cast<std::size_t>(e.col() - 1), ' ') << "^\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage_error(e) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
