/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <ostream>
#include <string>

namespace carlitz_cli {

/*
 * One fully-parsed invocation. String fields keep the user's comma-list
 * syntax; run() does the math-level validation so front ends stay thin and
 * tests can drive the tool in-process.
 */
struct RunConfig {
  // field selection
  int p = 0;
  int e = 1;
  std::string modulus;  // comma list of F_p digits, constant term first

  // subcommand: bc | stirling | mpbcn | at | fmzv | verify | cache
  std::string command;

  // command parameters
  std::string s;               // index, e.g. "2,1"
  std::string j;               // coefficient tuple, e.g. "0,0"
  long long n = -1;            // single target
  long long max_n = -1;        // sweep 0..max_n
  std::string prime;           // modulus text, e.g. "T^2+T+1"
  int max_prime_deg = -1;      // enumerate monic irreducibles up to here
  int d_ones = 0;              // leading ones prepended to the fmzv index
  std::string method;          // comma list; "" means the default set
  std::string suite = "all";   // verify suite
  std::string cache_action;    // inspect | clear

  // output and limits
  std::string format = "json";  // json | csv
  std::string cache_dir;        // empty disables the disk cache
  int order = 4096;             // refuse series truncations beyond this
};

/* Executes one invocation, writing records to out. Returns the process
 * exit status: 0 on success (skipped records included), 1 on any error,
 * which is also reported as a final {"error": ...} record. */
int run(const RunConfig& config, std::ostream& out);

}  // namespace carlitz_cli
