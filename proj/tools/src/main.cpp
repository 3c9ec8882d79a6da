/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#include <iostream>

#include "CLI11.hpp"
#include "carlitz_cli/cli.hpp"

int main(int argc, char** argv) {
  carlitz_cli::RunConfig cfg;

  CLI::App app{"Exact Carlitz-module arithmetic over F_q[T]: Bernoulli-Carlitz "
               "numbers, Stirling-Carlitz tables, Anderson-Thakur polynomials, "
               "and finite multiple zeta values"};
  app.require_subcommand(1);

  app.add_option("--p", cfg.p, "Field characteristic (prime)");
  app.add_option("--e", cfg.e, "Extension degree over F_p (default 1)");
  app.add_option("--modulus", cfg.modulus,
                 "Extension modulus as F_p digits, constant term first, e.g. 1,1,1");
  app.add_option("--format", cfg.format, "Output format: json (lines) or csv");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for the disk cache");
  app.add_option("--order", cfg.order, "Upper limit on series truncation orders");

  CLI::App* bc = app.add_subcommand("bc", "Bernoulli-Carlitz numbers BC_n");
  bc->add_option("--n", cfg.n, "Single n");
  bc->add_option("--max-n", cfg.max_n, "Sweep n = 0..max-n");
  bc->add_option("--method", cfg.method, "closed, series, or both (comma list)");

  CLI::App* st = app.add_subcommand("stirling", "Stirling-Carlitz triangle rows");
  st->add_option("--n", cfg.n, "Single row n (all m <= n)");
  st->add_option("--max-n", cfg.max_n, "Rows n = 0..max-n");

  CLI::App* mp = app.add_subcommand("mpbcn", "Multi-poly-Bernoulli-Carlitz numbers");
  mp->add_option("--s", cfg.s, "Index, e.g. 2,1");
  mp->add_option("--j", cfg.j, "Coefficient tuple, e.g. 0,0 (default: all)");
  mp->add_option("--n", cfg.n, "Single n");
  mp->add_option("--max-n", cfg.max_n, "Sweep n = 0..max-n");
  mp->add_option("--method", cfg.method, "closed, series, or both (comma list)");

  CLI::App* at = app.add_subcommand("at", "Anderson-Thakur polynomials H_n");
  at->add_option("--n", cfg.n, "Single n");
  at->add_option("--max-n", cfg.max_n, "Sweep n = 0..max-n");

  CLI::App* fz = app.add_subcommand("fmzv", "Finite multiple zeta values");
  fz->add_option("--s", cfg.s, "Index, e.g. 2,1");
  fz->add_option("--prime", cfg.prime, "Monic irreducible modulus, e.g. T^2+T+1");
  fz->add_option("--max-prime-deg", cfg.max_prime_deg,
                 "Enumerate all monic irreducibles up to this degree");
  fz->add_option("--d-ones", cfg.d_ones, "Leading ones prepended to the index");
  fz->add_option("--method", cfg.method,
                 "Comma list from direct, cmpl, mpbcn, mpbcn-ones");

  CLI::App* vf = app.add_subcommand("verify", "Run identity-verification suites");
  vf->add_option("--suite", cfg.suite,
                 "carlitz, stirling, anderson, bernoulli, zeta, or all");

  CLI::App* ca = app.add_subcommand("cache", "Inspect or clear the disk cache");
  ca->add_option("action", cfg.cache_action, "inspect or clear")->required();

  for (CLI::App* sub : {bc, st, mp, at, fz, vf, ca}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.command = app.get_subcommands().front()->get_name();
  return carlitz_cli::run(cfg, std::cout);
}
