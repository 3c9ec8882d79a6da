/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "carlitz/engine.hpp"
#include "emit.hpp"

namespace carlitz_cli {

/* Runs one verification suite ("carlitz", "stirling", "anderson",
 * "bernoulli", "zeta", or "all"), emitting a record per check and a final
 * summary. Returns the number of failed checks. Throws std::invalid_argument
 * for an unknown suite name. */
int run_verify(carlitz::Engine& eng, const std::string& suite, Emitter& emit);

}  // namespace carlitz_cli
