/*
 * carlitz: exact arithmetic for Carlitz-module number theory over F_q[T].
 * SPDX-License-Identifier: Apache-2.0
 *
 * Release gate: every identity the library claims is machine-checked here
 * over its full grid, with exact equality throughout. One line per
 * criterion; exit status is the number of failed criteria.
 */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "carlitz/engine.hpp"
#include "carlitz_cli/cli.hpp"

using namespace carlitz;

namespace {

struct Outcome {
  long long cases = 0;
  long long skipped = 0;
  std::string failure;  // empty = pass

  void fail(std::string what) {
    if (failure.empty()) failure = std::move(what);
  }
};

/* All indices with 1 <= depth <= max_depth and weight <= max_weight. */
std::vector<std::vector<int>> index_grid(int max_depth, int max_weight) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int weight_left) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == max_depth) return;
    for (int part = 1; part <= weight_left; ++part) {
      cur.push_back(part);
      rec(weight_left - part);
      cur.pop_back();
    }
  };
  rec(max_weight);
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

long long qcube(int q) { return static_cast<long long>(q) * q * q; }

std::string index_text(const std::vector<int>& parts) { return Index(parts).str(); }

// criterion 1: the closed chain formula for multi-poly values against the
// independent generating-series expansion, over the full grid
Outcome criterion_mpbcn_routes(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3, 4}) {
    Engine& eng = *engines.at(q);
    for (const auto& parts : index_grid(3, 5)) {
      IndexData d = eng.at().index_data(Index(parts));
      for (const JTuple& j : j_tuples(d))
        for (long long n = 0; n <= qcube(q); ++n) {
          if (eng.bernoulli().mpbcn(d, j, n) != eng.bernoulli().mpbcn_oracle(d, j, n))
            o.fail("q=" + std::to_string(q) + " s=" + index_text(parts) +
                   " n=" + std::to_string(n));
          ++o.cases;
        }
    }
  }
  return o;
}

// criterion 2: plain Bernoulli values against the series route
Outcome criterion_bc_routes(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3, 5}) {
    Engine& eng = *engines.at(q);
    for (long long n = 0; n <= qcube(q); ++n) {
      if (eng.bernoulli().bc(n) != eng.bernoulli().bc_oracle(n))
        o.fail("q=" + std::to_string(q) + " n=" + std::to_string(n));
      ++o.cases;
    }
  }
  return o;
}

// criterion 3: vanishing off the (q-1) lattice, plain and multi-poly
Outcome criterion_vanishing(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3, 4}) {
    Engine& eng = *engines.at(q);
    for (long long n = 1; n <= qcube(q); ++n) {
      if (n % (q - 1) == 0) continue;
      if (!eng.bernoulli().bc(n).is_zero())
        o.fail("bc q=" + std::to_string(q) + " n=" + std::to_string(n));
      ++o.cases;
    }
    for (const auto& parts : index_grid(3, 5)) {
      IndexData d = eng.at().index_data(Index(parts));
      for (const JTuple& j : j_tuples(d))
        for (long long n = 1; n <= qcube(q); ++n) {
          if (n % (q - 1) == 0) continue;
          if (!eng.bernoulli().mpbcn(d, j, n).is_zero())
            o.fail("mpbcn q=" + std::to_string(q) + " s=" + index_text(parts) +
                   " n=" + std::to_string(n));
          ++o.cases;
        }
    }
  }
  return o;
}

// criterion 4: Stirling boundary laws, digit-sum vanishing, and the
// q-power dichotomy, exhaustively
Outcome criterion_stirling(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3}) {
    Engine& eng = *engines.at(q);
    StirlingTable& st = eng.stirling();
    const FqField* f = eng.field();
    const long long B = qcube(q);
    for (long long n = 0; n <= B; ++n)
      for (long long m = 0; m <= B; ++m) {
        RatFunc v = st.value(n, m);
        if (m == n && v != RatFunc::one(f))
          o.fail("diag q=" + std::to_string(q) + " n=" + std::to_string(n));
        if (m == 0 && n > 0 && !v.is_zero())
          o.fail("base q=" + std::to_string(q) + " n=" + std::to_string(n));
        if (m > n && !v.is_zero())
          o.fail("upper q=" + std::to_string(q) + " n=" + std::to_string(n));
        if (digit_sum(q, n) > digit_sum(q, m) && !v.is_zero())
          o.fail("digit q=" + std::to_string(q) + " n=" + std::to_string(n) +
                 " m=" + std::to_string(m));
        ++o.cases;
      }
    for (int m = 0; m <= 3; ++m) {
      long long qm = 1;
      for (int k = 0; k < m; ++k) qm *= q;
      for (int i = 0; i <= m; ++i) {
        long long qi = 1;
        for (int k = 0; k < i; ++k) qi *= q;
        RatFunc v = st.value(qm - 1, qi - 1);
        RatFunc want = (m == i) ? RatFunc::one(f) : RatFunc::zero(f);
        if (v != want)
          o.fail("dichotomy q=" + std::to_string(q) + " m=" + std::to_string(m) +
                 " i=" + std::to_string(i));
        ++o.cases;
      }
    }
  }
  return o;
}

// criterion 5: the all-ones shortcut against the general closed form
Outcome criterion_ones(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3}) {
    Engine& eng = *engines.at(q);
    for (int r = 1; r <= 3; ++r) {
      IndexData d = eng.at().index_data(
          Index(std::vector<int>(static_cast<std::size_t>(r), 1)));
      JTuple zeros(static_cast<std::size_t>(r), 0);
      long long lo = 1;
      for (int k = 0; k < r - 1; ++k) lo *= q;
      for (long long n = lo - 1; n <= qcube(q); ++n) {
        if (eng.bernoulli().mpbcn_ones(r, n) != eng.bernoulli().mpbcn(d, zeros, n))
          o.fail("q=" + std::to_string(q) + " r=" + std::to_string(r) +
                 " n=" + std::to_string(n));
        ++o.cases;
      }
    }
  }
  return o;
}

// criterion 6: the depth-reduction recursion at n = q^m - 1
Outcome criterion_depth_reduction(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3}) {
    Engine& eng = *engines.at(q);
    for (const auto& parts : index_grid(3, 4)) {
      const int r = static_cast<int>(parts.size());
      if (r < 2) continue;
      IndexData d = eng.at().index_data(Index(parts));
      for (const JTuple& j : j_tuples(d))
        for (int m = r - 1; m <= 4; ++m) {
          RecursionSides sides = eng.bernoulli().recursion_sides(d, j, m);
          if (sides.lhs != sides.rhs)
            o.fail("q=" + std::to_string(q) + " s=" + index_text(parts) +
                   " m=" + std::to_string(m));
          ++o.cases;
        }
    }
  }
  return o;
}

// criterion 7: all finite-zeta routes agree at every admissible prime, and
// the leading-ones route matches the padded index for dd <= 2
Outcome criterion_fmzv(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3}) {
    Engine& eng = *engines.at(q);
    const FqField* f = eng.field();
    const int max_deg = q == 2 ? 4 : 3;
    for (const Poly& prime : monic_irreducibles(f, max_deg)) {
      FiniteZeta z = eng.zeta(PrimeModulus(prime));
      for (const auto& parts : index_grid(3, 5)) {
        Index s{parts};
        Residue direct = z.zeta_direct(s);
        try {
          Residue cmpl = z.zeta_via_cmpl(s);
          Residue mp = z.zeta_via_mpbcn(s);
          if (cmpl != direct || mp != direct)
            o.fail("q=" + std::to_string(q) + " s=" + s.str() +
                   " p=" + prime.str());
          o.cases += 2;
          for (int dd = 0; dd <= 2; ++dd) {
            Residue ones = z.zeta_via_mpbcn_ones(s, dd);
            if (ones != z.zeta_direct(s.with_leading_ones(dd)))
              o.fail("ones q=" + std::to_string(q) + " s=" + s.str() +
                     " dd=" + std::to_string(dd) + " p=" + prime.str());
            ++o.cases;
          }
        } catch (const hypothesis_error&) {
          bool divides = false;
          for (int l = 0; l < s.depth(); ++l)
            if (Residue(prime, eng.cache().gamma(s.part(l))).is_zero())
              divides = true;
          if (!divides)
            o.fail("unjustified skip q=" + std::to_string(q) + " s=" + s.str() +
                   " p=" + prime.str());
          ++o.skipped;
        }
      }
    }
  }
  return o;
}

// criterion 8: Anderson-Thakur integrality, initial ones, the generating
// identity round trip, and the coefficient height bound
Outcome criterion_anderson(std::map<int, std::unique_ptr<Engine>>& engines) {
  Outcome o;
  for (int q : {2, 3, 5}) {
    Engine& eng = *engines.at(q);
    AndersonThakur& at = eng.at();
    const CarlitzCache& c = eng.cache();
    const int N = q * q;
    ATSeries s = at.series(N);  // throws if a denominator fails to clear
    o.cases += N + 1;
    for (int n = 0; n <= q - 1; ++n) {
      if (!s.h(n).is_one()) o.fail("q=" + std::to_string(q) + " H_" + std::to_string(n));
      ++o.cases;
    }
    for (int m = 1; m <= N; ++m) {
      BiRat acc(s.h(m), c.factorial(m));
      long long qi = 1;
      for (int i = 0; qi <= m; ++i, qi *= q) {
        BiRat term = at.bracket_term(i) *
                     BiRat(s.h(m - static_cast<int>(qi)),
                           c.factorial(m - static_cast<int>(qi)));
        acc = acc + BiRat(-term.num(), term.den());
      }
      if (!acc.is_zero())
        o.fail("roundtrip q=" + std::to_string(q) + " x^" + std::to_string(m));
      ++o.cases;
    }
    for (int s1 = 1; s1 <= 2 * q; ++s1) {
      IndexData d = at.index_data(Index({s1}));
      if (d.u(0, d.m(0)).is_zero())
        o.fail("leading weight q=" + std::to_string(q) + " s=" + std::to_string(s1));
      for (int j = 0; j <= d.m(0); ++j) {
        if (static_cast<long long>(q - 1) * d.u(0, j).degree() >=
            static_cast<long long>(s1) * q)
          o.fail("height q=" + std::to_string(q) + " s=" + std::to_string(s1) +
                 " j=" + std::to_string(j));
        ++o.cases;
      }
    }
  }
  return o;
}

// criterion 9: two full verification runs are byte-identical
Outcome criterion_determinism(std::map<int, std::unique_ptr<Engine>>&) {
  Outcome o;
  carlitz_cli::RunConfig cfg;
  cfg.command = "verify";
  cfg.p = 2;
  cfg.e = 1;
  cfg.suite = "all";
  std::ostringstream first, second;
  int e1 = carlitz_cli::run(cfg, first);
  int e2 = carlitz_cli::run(cfg, second);
  if (e1 != 0 || e2 != 0) o.fail("verify reported failures");
  if (first.str() != second.str()) o.fail("outputs differ between runs");
  if (first.str().empty()) o.fail("no output produced");
  o.cases = static_cast<long long>(first.str().size());
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    const char* name;
    Outcome (*fn)(std::map<int, std::unique_ptr<Engine>>&);
  };
  const Criterion criteria[] = {
      {"multi-poly closed form = series oracle (q=2,3,4; depth<=3; weight<=5; n<=q^3)",
       criterion_mpbcn_routes},
      {"Bernoulli closed form = series oracle (q=2,3,5; n<=q^3)", criterion_bc_routes},
      {"vanishing off the (q-1) lattice, plain and multi-poly", criterion_vanishing},
      {"Stirling boundary, digit-sum vanishing, q-power dichotomy (n,m<=q^3; q=2,3)",
       criterion_stirling},
      {"all-ones shortcut = general closed form (r<=3; n<=q^3; q=2,3)", criterion_ones},
      {"depth reduction at n=q^m-1 (r=2,3; m<=4; weight<=4; q=2,3)",
       criterion_depth_reduction},
      {"finite zeta route agreement + leading-ones routes (deg<=4/3; q=2,3)",
       criterion_fmzv},
      {"Anderson-Thakur integrality, round trip, height bound (q=2,3,5)",
       criterion_anderson},
      {"byte-identical repeated verification runs", criterion_determinism},
  };

  std::map<int, std::unique_ptr<Engine>> engines;
  engines.emplace(2, std::make_unique<Engine>(FqField::create(2, 1)));
  engines.emplace(3, std::make_unique<Engine>(FqField::create(3, 1)));
  engines.emplace(4, std::make_unique<Engine>(FqField::create(2, 2)));
  engines.emplace(5, std::make_unique<Engine>(FqField::create(5, 1)));

  int failures = 0;
  int idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.fn(engines);
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.failure.empty()) {
      std::printf("PASS [%d/9] %s  (%lld cases", idx, c.name, o.cases);
      if (o.skipped > 0) std::printf(", %lld hypothesis skips", o.skipped);
      std::printf(", %.1fs)\n", secs);
    } else {
      std::printf("FAIL [%d/9] %s  first counterexample: %s\n", idx, c.name,
                  o.failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("acceptance: all 9 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
