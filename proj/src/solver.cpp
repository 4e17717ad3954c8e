#include "lrn/solver.hpp"

#include "lrn/fiblucas.hpp"

#include <algorithm>

namespace lrn::solver {

using boost::multiprecision::abs;
using fiblucas::fib;
using fiblucas::lucas;

namespace {

Int d_power(const Int& d, unsigned m) { return pow_int(d, 2 * m + 1); }

std::vector<unsigned> m_range(const EquationInstance& inst, const SearchBounds& bounds) {
  if (inst.m) return {*inst.m};
  std::vector<unsigned> ms;
  for (unsigned m = 0; m <= bounds.m_max; ++m) ms.push_back(m);
  return ms;
}

bool instance_gates(const Int& c, const Int& d, bool relaxed) {
  if (relaxed) return true;
  Int cd = c * d;
  return gcd(c, d) == 1 && is_squarefree(cd) && cd % 4 != 3;
}

}  // namespace

void SolutionSet::add(Solution s) { solutions.push_back(std::move(s)); }

void SolutionSet::normalize() {
  auto key = [](const Solution& s) { return std::tie(s.n, s.m, s.y, s.x, s.c, s.d); };
  std::stable_sort(solutions.begin(), solutions.end(),
                   [&](const Solution& a, const Solution& b) { return key(a) < key(b); });
  solutions.erase(std::unique(solutions.begin(), solutions.end(),
                              [&](const Solution& a, const Solution& b) { return key(a) == key(b); }),
                  solutions.end());
}

bool verify_solution(const Int& c, const Int& d, const Int& x, const Int& y, unsigned m,
                     unsigned n) {
  if (c < 1 || d < 1 || x < 1 || y < 1 || n < 3) return false;
  return c * x * x + d_power(d, m) == 2 * pow_int(y, n);
}

bool representation_check(const Int& c, const Int& d, const Int& u, const Int& v, const Int& y) {
  return 2 * y == u * u * c + v * v * d;
}

std::optional<Solution> p3_family(const Int& c, const Int& u, unsigned m, int sign, bool relaxed) {
  if (u < 1 || u % 2 == 0) throw std::domain_error("p3_family: odd u >= 1 required");
  if (sign != 1 && sign != -1) throw std::domain_error("p3_family: sign must be +1 or -1");
  Int big_d = 3 * u * u * c + 2 * sign;  // must equal d^(2m+1)
  if (big_d < 1) return std::nullopt;
  auto root = perfect_root(big_d, 2 * m + 1);
  if (!root) return std::nullopt;
  Int d = *root;
  if (!instance_gates(c, d, relaxed)) return std::nullopt;
  Solution s;
  s.c = c;
  s.d = d;
  s.x = u * (4 * u * u * c + 3 * sign);
  s.y = 2 * u * u * c + sign;
  s.m = m;
  s.n = 3;
  s.provenance = sign == -1 ? "p3-family" : "p3-family-mirror";
  s.coords.u = u;
  s.coords.v = pow_int(d, m);
  s.coords.delta = -sign;
  s.trivial = (s.x == 1 && s.y == 1);
  if (!verify_solution(c, d, s.x, s.y, m, 3)) return std::nullopt;
  return s;
}

namespace {

// All cubic-exponent solutions for a fixed (c, d) and power-height m.
// Derived from the coordinate system: v = d^r with 0 <= r <= m and
// 3u^2c = d^(2r+1) +- 2 d^(m-r); u is determined, not scanned.
void p3_for_instance(const Int& c, const Int& d, unsigned m, bool relaxed, SolutionSet& out) {
  for (unsigned r = 0; r <= m; ++r) {
    Int v = pow_int(d, r);
    Int v2d = v * v * d;  // d^(2r+1)
    for (int sign : {1, -1}) {
      Int num = v2d + 2 * sign * pow_int(d, m - r);
      if (num < 3 || num % (3 * c) != 0) continue;
      Int u2 = num / (3 * c);
      if (!is_square(u2)) continue;
      Int u = isqrt(u2);
      if (u % 2 == 0) continue;
      if (gcd(u * c, v * d) != 1) continue;
      Solution s;
      s.c = c;
      s.d = d;
      s.x = u * abs(u * u * c - 3 * v2d) / 2;
      s.y = (u * u * c + v2d) / 2;
      s.m = m;
      s.n = 3;
      s.provenance = sign == 1 ? "p3-family" : "p3-family-mirror";
      s.coords.u = u;
      s.coords.v = v;
      s.coords.delta = sign;
      s.trivial = (s.x == 1 && s.y == 1);
      if (s.x >= 1 && s.y >= 1 && verify_solution(c, d, s.x, s.y, m, 3)) out.add(std::move(s));
    }
  }
}

struct P5Candidate {
  Int c, d, x, y, u, v;
  unsigned index = 0;  // k or t
  int eps = 0;
  bool lucas_branch = false;
};

// Quintic family candidates from the Fibonacci branch (y = F_k) and the
// Lucas branch (y = L_t). The emitted values satisfy 2y = u^2 c + v^2 d;
// whether they solve the equation for a given m is checked by the caller.
template <typename Sink>
void enumerate_p5(const SearchBounds& bounds, Sink&& sink) {
  auto odd_square_divisors = [](const Int& w, auto&& fn) {
    for (Int u = 1; u * u <= w; u += 2)
      if (w % (u * u) == 0) fn(u, w / (u * u));
  };
  for (int eps : {1, -1}) {
    for (unsigned k = 3; k <= bounds.k_max; ++k) {
      long lo = static_cast<long>(k) - 2 * eps;
      if (lo < 0) continue;
      Int fk2e = fib(static_cast<unsigned>(lo));
      Int lke = lucas(static_cast<unsigned>(k + eps));
      if (fk2e % 2 != 0 || lke % 2 != 0) continue;  // parity gate
      odd_square_divisors(fk2e / 2, [&](const Int& u, const Int& c) {
        odd_square_divisors(lke / 2, [&](const Int& v, const Int& d) {
          if (gcd(u * c, v * d) != 1) return;
          P5Candidate cand;
          cand.c = c;
          cand.d = d;
          cand.u = u;
          cand.v = v;
          cand.y = fib(k);
          cand.x = u * ((2 * fib(k) - fk2e) * (2 * fib(k) - fk2e) + fib(k) * lke);
          cand.index = k;
          cand.eps = eps;
          sink(cand);
        });
      });
    }
    for (unsigned t = 2; t <= bounds.t_max; ++t) {
      long lo = static_cast<long>(t) - 2 * eps;
      if (lo < 0) continue;
      Int lt2e = lucas(static_cast<unsigned>(lo));
      Int fte5 = 5 * fib(static_cast<unsigned>(t + eps));
      if (lt2e % 2 != 0 || fte5 % 2 != 0) continue;
      odd_square_divisors(lt2e / 2, [&](const Int& u, const Int& c) {
        odd_square_divisors(fte5 / 2, [&](const Int& v, const Int& d) {
          if (gcd(u * c, v * d) != 1) return;
          P5Candidate cand;
          cand.c = c;
          cand.d = d;
          cand.u = u;
          cand.v = v;
          cand.y = lucas(t);
          cand.x = u * ((2 * lucas(t) - lt2e) * (2 * lucas(t) - lt2e) + lucas(t) * fte5);
          cand.index = t;
          cand.eps = eps;
          cand.lucas_branch = true;
          sink(cand);
        });
      });
    }
  }
}

Solution p5_solution(const P5Candidate& cand, unsigned m) {
  Solution s;
  s.c = cand.c;
  s.d = cand.d;
  s.x = cand.x;
  s.y = cand.y;
  s.m = m;
  s.n = 5;
  s.provenance = cand.lucas_branch ? "p5-lucas-family" : "p5-fib-family";
  s.coords.u = cand.u;
  s.coords.v = cand.v;
  if (cand.lucas_branch)
    s.coords.t = cand.index;
  else
    s.coords.k = cand.index;
  s.coords.eps = cand.eps;
  s.trivial = (s.x == 1 && s.y == 1);
  return s;
}

// alpha^p for alpha = u*sqrt(c) + v*sqrt(-d), expanded exactly in the
// basis {1, sqrt(c), sqrt(-d), sqrt(-cd)}.
struct AlphaPower {
  Int one, rc, rd, rcd;
};

AlphaPower alpha_pow(const Int& u, const Int& v, const Int& c, const Int& d, unsigned p) {
  AlphaPower r{1, 0, 0, 0};
  for (unsigned i = 0; i < p; ++i) {
    AlphaPower n;
    n.one = c * u * r.rc - d * v * r.rd;
    n.rc = u * r.one - d * v * r.rcd;
    n.rd = v * r.one + c * u * r.rcd;
    n.rcd = v * r.rc + u * r.rd;
    r = n;
  }
  return r;
}

// All solutions of c x^2 + d^(2m+1) = 2 y^p with y <= y_max for odd prime
// p, from the shape x sqrt(c) + d^m sqrt(-d) = alpha^p / 2^((p-1)/2) with
// 2y = u^2 c + v^2 d: scan odd coprime (u, v), check that the sqrt(-d)
// component is (up to sign) the required power of d, verify by
// substitution.
void puv_scan(const Int& c, const Int& d, unsigned p, const std::vector<unsigned>& ms,
              const SearchBounds& bounds, const char* provenance, SolutionSet& out) {
  if ((c + d) % 2 != 0) return;  // u, v odd forces u^2 c + v^2 d = c + d (mod 2)
  const Int two_y_max = 2 * bounds.y_max;
  const Int half_pow = pow_int(2, (p - 1) / 2);
  for (Int u = 1; u * u * c < two_y_max; u += 2) {
    for (Int v = 1; u * u * c + v * v * d <= two_y_max; v += 2) {
      if (gcd(u * c, v * d) != 1) continue;
      AlphaPower a = alpha_pow(u, v, c, d, p);
      Int big_x = abs(a.rc), big_v = abs(a.rd);
      if (big_x % half_pow != 0 || big_v % half_pow != 0) continue;
      Int x = big_x / half_pow;
      Int d_m = big_v / half_pow;
      Int y = (u * u * c + v * v * d) / 2;
      for (unsigned m : ms) {
        if (d_m != pow_int(d, m)) continue;
        if (!verify_solution(c, d, x, y, m, p)) continue;
        Solution s;
        s.c = c;
        s.d = d;
        s.x = x;
        s.y = y;
        s.m = m;
        s.n = p;
        s.provenance = provenance;
        s.coords.u = u;
        s.coords.v = v;
        s.trivial = (s.x == 1 && s.y == 1);
        out.add(std::move(s));
      }
    }
  }
}

void emit_trivial(const Int& c, const Int& d, const std::vector<unsigned>& ms, unsigned n,
                  SolutionSet& out) {
  if (c != 1 || d != 1) return;  // c + d^(2m+1) = 2 forces c = d = 1
  for (unsigned m : ms) {
    Solution s;
    s.c = c;
    s.d = d;
    s.x = 1;
    s.y = 1;
    s.m = m;
    s.n = n;
    s.provenance = "trivial";
    s.trivial = true;
    out.add(std::move(s));
  }
}

// Solutions (x, Y, m) of c x^2 + d^(2m+1) = 2 Y^p for odd prime p.
SolutionSet prime_level(const Int& c, const Int& d, unsigned p, const std::vector<unsigned>& ms,
                        const SearchBounds& bounds, bool relaxed) {
  SolutionSet out;
  emit_trivial(c, d, ms, p, out);
  if (p == 3) {
    for (unsigned m : ms) p3_for_instance(c, d, m, relaxed, out);
  } else if (p == 5) {
    puv_scan(c, d, 5, ms, bounds, "p5-family", out);
  } else if (p == 7) {
    // The theory pins the only non-trivial septic solution to
    // (c, d) = (7, 11) with y = 9; the scan is still run everywhere so
    // the claim is checked, not assumed.
    puv_scan(c, d, 7, ms, bounds, "p7-sporadic", out);
    out.complete = true;
  } else {
    out.complete = true;  // no non-trivial solutions above the septic level
  }
  out.normalize();
  return out;
}

bool power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

// Composite (or prime) exponent dispatch on the largest prime divisor P:
// every solution at exponent n restricts to one at exponent P with
// Y = y^(n/P), so candidates come from prime_level and y is recovered by
// exact root extraction.
SolutionSet dispatch(const EquationInstance& inst, const SearchBounds& bounds, bool relaxed,
                     std::vector<std::string>* clauses) {
  unsigned n = inst.n;
  auto fac = factorize(Int(n));
  unsigned big_p = static_cast<unsigned>(fac.largest_prime());
  auto ms = m_range(inst, bounds);
  auto note = [&](const std::string& s) {
    if (clauses) clauses->push_back(s);
  };
  SolutionSet out;
  if (big_p > 7) {
    emit_trivial(inst.c, inst.d, ms, n, out);
    out.complete = true;
    note("large-prime-empty");
    out.normalize();
    return out;
  }
  SolutionSet at_p = prime_level(inst.c, inst.d, big_p, ms, bounds, relaxed);
  note("prime-level-p" + std::to_string(big_p));
  if (n == big_p) return at_p;
  unsigned cof = n / big_p;
  note("root-extraction-e" + std::to_string(cof));
  out.complete = at_p.complete;
  for (const auto& sol : at_p.solutions) {
    auto y = perfect_root(sol.y, cof);
    if (!y) continue;  // near miss: Y is not an exact (n/P)-th power
    Solution s = sol;
    s.y = *y;
    s.n = n;
    if (!s.trivial) s.provenance += "+root" + std::to_string(cof);
    if (verify_solution(s.c, s.d, s.x, s.y, s.m, n)) out.add(std::move(s));
  }
  out.normalize();
  return out;
}

}  // namespace

SolutionSet p5_families(const SearchBounds& bounds, bool relaxed) {
  SolutionSet out;
  enumerate_p5(bounds, [&](const P5Candidate& cand) {
    for (unsigned m = 0; m <= bounds.m_max; ++m) {
      if (!verify_solution(cand.c, cand.d, cand.x, cand.y, m, 5)) continue;
      if (!instance_gates(cand.c, cand.d, relaxed)) continue;
      if (!relaxed && quadforms::hypothesis_check(cand.c, cand.d, 5).admissible == false) continue;
      out.add(p5_solution(cand, m));
    }
  });
  out.normalize();
  return out;
}

std::vector<Pell5Report> pell5_scan(unsigned k_max) {
  if (k_max < 3) throw std::domain_error("pell5_scan: k_max >= 3 required");
  std::vector<Pell5Report> reports;
  for (unsigned k = 3; k <= k_max; ++k) {
    for (int eps : {1, -1}) {
      long lo = static_cast<long>(k) - 2 * eps;
      if (lo < 0) continue;
      Int f = fib(static_cast<unsigned>(lo));
      Int l = lucas(static_cast<unsigned>(k + eps));
      Pell5Report rep;
      rep.k = k;
      rep.eps = eps;
      Int lhs = (l - 5 * f) * (l - 5 * f) - 20 * f * f;
      rep.pell_holds = (lhs == -16);
      // integer shape: F_{k-2e} = 2u^2*l with l an odd prime,
      //                L_{k+e} = 2q^(2m+1) with q an odd prime
      if (f % 2 == 0 && l % 2 == 0) {
        for (Int u = 1; u * u <= f / 2 && !rep.integral; u += 2) {
          if ((f / 2) % (u * u) != 0) continue;
          Int ell = (f / 2) / (u * u);
          if (ell == 2 || !is_prime(ell)) continue;
          Int qpow = l / 2;
          auto qfac = factorize(qpow);
          if (qfac.factors.size() != 1) continue;
          if (qfac.factors[0].exponent % 2 == 0 || qfac.factors[0].prime == 2) continue;
          rep.integral = true;
          rep.u = u;
          rep.ell = ell;
          rep.q = qfac.factors[0].prime;
          rep.m = (qfac.factors[0].exponent - 1) / 2;
        }
      }
      reports.push_back(rep);
    }
  }
  return reports;
}

SolutionSet solve_prime(const EquationInstance& inst, const SearchBounds& bounds, bool relaxed) {
  unsigned p = inst.n;
  if (p < 3 || p % 2 == 0 || !is_prime(Int(p)))
    throw std::domain_error("solve_prime: n must be an odd prime");
  auto rep = quadforms::hypothesis_check(inst.c, inst.d, p);
  if (!relaxed && !rep.admissible) throw InadmissibleError(rep);
  return prime_level(inst.c, inst.d, p, m_range(inst, bounds), bounds, relaxed);
}

SolutionSet solve_composite(const Int& l, const Int& q, unsigned n, const SearchBounds& bounds,
                            bool relaxed) {
  if (!is_prime(l) || !is_prime(q) || l == q || l == 2 || q == 2)
    throw std::domain_error("solve_composite: l, q must be distinct odd primes");
  if (n <= 2 || power_of_two(n)) throw std::domain_error("solve_composite: n > 2 and not a power of 2 required");
  auto rep = quadforms::hypothesis_check(l, q, n);
  if (!relaxed && !rep.admissible) throw InadmissibleError(rep);
  EquationInstance inst{l, q, n, std::nullopt};
  return dispatch(inst, bounds, relaxed, nullptr);
}

SolutionSet solve_c1(const Int& d, unsigned n, const SearchBounds& bounds, bool relaxed) {
  if (!relaxed) {
    if (d <= 1 || d % 4 != 1 || !is_squarefree(d))
      throw std::domain_error("solve_c1: d > 1 with d = 1 (mod 4) squarefree required");
  }
  if (n <= 2 || power_of_two(n)) throw std::domain_error("solve_c1: n > 2 and not a power of 2 required");
  auto rep = quadforms::hypothesis_check(1, d, n);
  if (!relaxed && !rep.admissible) throw InadmissibleError(rep);
  EquationInstance inst{1, d, n, std::nullopt};
  return dispatch(inst, bounds, relaxed, nullptr);
}

ClassifyReport classify(const EquationInstance& inst, const SearchBounds& bounds, bool relaxed) {
  ClassifyReport report;
  report.hypothesis = quadforms::hypothesis_check(inst.c, inst.d, inst.n);
  if (inst.n < 3 || power_of_two(inst.n)) {
    report.clauses.push_back("uncovered-exponent");
    return report;
  }
  if (!report.hypothesis.admissible && !relaxed) {
    report.clauses.push_back("inadmissible:oracle-only");
    return report;
  }
  report.theorem_path = true;
  if (relaxed) report.clauses.push_back("relaxed");
  report.set = dispatch(inst, bounds, relaxed, &report.clauses);
  return report;
}

}  // namespace lrn::solver
