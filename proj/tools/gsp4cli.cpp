#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gsp4/suites.hpp"

namespace {

using namespace gsp4;

struct CliOpts {
  std::vector<long> ps, ds;
  long lmax = -1, mmax = -1;
  int order = 0;
  int ap = 0, wp = 0;  // 0 = sweep both signs
  std::string casename, out, format = "text";
  int workers = 1;
  std::string target;
};

void add_common(CLI::App* cmd, CliOpts& o) {
  cmd->add_option("--p", o.ps, "primes to sweep (default 3 5)");
  cmd->add_option("--d", o.ds, "discriminants to sweep (default 4 7)");
  cmd->add_option("--lmax", o.lmax, "largest l in grids (default 4)");
  cmd->add_option("--mmax", o.mmax, "largest m in grids (default 4)");
  cmd->add_option("--order", o.order, "series truncation order (default 40)");
  cmd->add_option("--ap", o.ap, "restrict the GL2 sign to +1 or -1");
  cmd->add_option("--wp", o.wp, "restrict the GSp4 sign to +1 or -1");
  cmd->add_option("--case", o.casename,
                  "restrict to one case: unram-st, st-st, st-unram");
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
  cmd->add_option("--format", o.format, "output format: json, tsv, text");
  cmd->add_option("--workers", o.workers, "parallel suite workers (default 1)");
}

RunConfig make_config(const CliOpts& o) {
  RunConfig cfg;
  if (!o.ps.empty()) cfg.ps = o.ps;
  if (!o.ds.empty()) cfg.ds = o.ds;
  if (o.lmax >= 0) cfg.l_max = o.lmax;
  if (o.mmax >= 0) cfg.m_max = o.mmax;
  if (o.order > 0) cfg.order = o.order;
  if (o.ap != 0) cfg.aps = {o.ap};
  if (o.wp != 0) cfg.wps = {o.wp};
  if (!o.casename.empty()) {
    if (o.casename == "unram-st")
      cfg.cases = {UnramPi_StSigma};
    else if (o.casename == "st-st")
      cfg.cases = {StPi_StSigma};
    else if (o.casename == "st-unram")
      cfg.cases = {StPi_UnramSigma};
    else
      throw Error("ConfigError", "unknown case: " + o.casename);
  }
  cfg.workers = o.workers;
  return cfg;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("ConfigError", "cannot open output file: " + out);
  f << text;
}

void print_summaries(const VerifyReport& rep) {
  if (rep.check == "coset-distinctness" && rep.params.count("representatives") &&
      rep.params.count("pairs"))
    std::cout << rep.params.at("representatives") << " representatives, "
              << rep.params.at("pairs") << " distinct-pair checks\n";
  for (const auto& c : rep.children) print_summaries(c);
}

int do_verify(const CliOpts& o) {
  if (o.format == "tsv")
    throw Error("ConfigError", "verify reports support json and text formats");
  RunConfig cfg = make_config(o);
  VerifyReport rep = run_verify(o.target, cfg);
  print_summaries(rep);
  emit(o.format == "json" ? report_to_json(rep) : report_to_text(rep), o.out);
  return rep.ok() ? 0 : 1;
}

int do_table(const CliOpts& o) {
  RunConfig cfg = make_config(o);
  emit(render_table(o.target, cfg, o.format), o.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of local Bessel-model zeta identities for "
               "GSp(4) x GL(2)"};
  app.require_subcommand(1);

  CliOpts vo, to;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("target", vo.target, "cosets, volumes, bessel, whittaker, zeta, all")
      ->required();
  add_common(verify, vo);
  CLI::App* table = app.add_subcommand("table", "emit a value table");
  table->add_option("target", to.target, "bessel, volumes, whittaker")->required();
  add_common(table, to);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return do_verify(vo);
    return do_table(to);
  } catch (const gsp4::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code == "ConfigError" || e.code == "BadIndex") ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
