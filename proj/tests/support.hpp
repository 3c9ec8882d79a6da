/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "carlitz/engine.hpp"

namespace testsupport {

using namespace carlitz;

inline FieldPtr field(int p, int e = 1) { return FqField::create(p, e); }

/* Parse in the same grammar the library prints: T for the main variable,
 * u for the generator of a non-prime field. */
inline Poly P(const FieldPtr& f, const std::string& s) { return parse_poly(f.get(), s); }
inline RatFunc R(const FieldPtr& f, const std::string& s) {
  return parse_ratfunc(f.get(), s);
}

}  // namespace testsupport
