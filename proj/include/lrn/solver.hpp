#pragma once

#include "lrn/arith.hpp"
#include "lrn/quadforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrn::solver {

/// Inclusive ceilings for every enumeration in the solver and oracle.
struct SearchBounds {
  Int x_max = 10'000'000;
  Int y_max = 10'000;
  unsigned m_max = 3;
  unsigned n_max = 30;
  unsigned u_max = 99;
  unsigned k_max = 40;
  unsigned t_max = 40;
};

/// One equation c*x^2 + d^(2m+1) = 2*y^n of the family. When m is unset
/// the whole m range of the bounds is considered.
struct EquationInstance {
  Int c;
  Int d;
  unsigned n = 3;
  std::optional<unsigned> m;
};

/// Family coordinates recorded when a derivation fixes them.
struct FamilyCoords {
  std::optional<Int> u;
  std::optional<Int> v;
  std::optional<unsigned> k;
  std::optional<unsigned> t;
  std::optional<int> eps;
  std::optional<int> delta;
};

struct Solution {
  Int c;
  Int d;
  Int x;
  Int y;
  unsigned m = 0;
  unsigned n = 3;
  std::string provenance;
  FamilyCoords coords;
  bool trivial = false;
};

/// Solutions sorted by (n, m, y, x), no duplicates. `complete` is claimed
/// only for clauses the theory makes finite; family enumerations are
/// bounded and say so.
struct SolutionSet {
  std::vector<Solution> solutions;
  bool complete = false;

  void add(Solution s);
  void normalize();  // sort + dedupe by (n, m, y, x), keeping first provenance
};

/// Thrown when a theorem path is requested for an instance that fails the
/// solvability hypotheses; carries the full report.
struct InadmissibleError : std::runtime_error {
  quadforms::HypothesisReport report;
  explicit InadmissibleError(quadforms::HypothesisReport rep)
      : std::runtime_error("instance fails solvability hypotheses"), report(std::move(rep)) {}
};

/// Exact check of c*x^2 + d^(2m+1) = 2*y^n.
bool verify_solution(const Int& c, const Int& d, const Int& x, const Int& y, unsigned m, unsigned n);

/// Exact check of 2*y = u^2*c + v^2*d (the coordinate relation every
/// theorem-path solution satisfies).
bool representation_check(const Int& c, const Int& d, const Int& u, const Int& v, const Int& y);

/// Cubic-exponent family member for odd u and target power-height m.
/// sign = -1: d^(2m+1) = 3u^2c - 2, x = u(4u^2c - 3), y = 2u^2c - 1.
/// sign = +1: the sign-mirrored branch d^(2m+1) = 3u^2c + 2,
///            x = u(4u^2c + 3), y = 2u^2c + 1.
/// relaxed drops the squarefree/mod-4/coprimality gates. Every candidate
/// is verified by substitution before being emitted.
std::optional<Solution> p3_family(const Int& c, const Int& u, unsigned m, int sign = -1,
                                  bool relaxed = false);

/// All verified quintic-exponent family members within the index bounds
/// (Fibonacci branch y = F_k, Lucas branch y = L_t), across every (c, d)
/// the divisor structure admits.
SolutionSet p5_families(const SearchBounds& bounds, bool relaxed = false);

/// One row of the quintic Pell-form scan.
struct Pell5Report {
  unsigned k = 0;
  int eps = 0;
  bool pell_holds = false;   // (L_{k+e} - 5F_{k-2e})^2 - 20 F_{k-2e}^2 == -16
  bool integral = false;     // F_{k-2e} = 2u^2*l, L_{k+e} = 2q^(2m+1) with l, q odd primes
  Int u, ell, q;             // witnesses when integral
  unsigned m = 0;
};

std::vector<Pell5Report> pell5_scan(unsigned k_max);

/// Solutions of c*x^2 + d^(2m+1) = 2*y^p for odd prime p, complete under
/// the hypotheses (bounded for the u/k-indexed families). Throws
/// InadmissibleError unless hypothesis_check(c, d, p) passes.
SolutionSet solve_prime(const EquationInstance& inst, const SearchBounds& bounds,
                        bool relaxed = false);

/// Prime-coefficient composite-exponent solver (l, q distinct odd primes).
SolutionSet solve_composite(const Int& l, const Int& q, unsigned n, const SearchBounds& bounds,
                            bool relaxed = false);

/// c = 1 solver for d = 1 (mod 4) squarefree, d > 1.
SolutionSet solve_c1(const Int& d, unsigned n, const SearchBounds& bounds, bool relaxed = false);

struct ClassifyReport {
  quadforms::HypothesisReport hypothesis;
  SolutionSet set;
  std::vector<std::string> clauses;  // which solver clauses applied
  bool theorem_path = false;         // false: inadmissible or uncovered, oracle-only
};

/// Dispatch across the prime and composite solvers; inadmissible or
/// uncovered instances are reported for oracle-only handling instead of
/// being rejected.
ClassifyReport classify(const EquationInstance& inst, const SearchBounds& bounds,
                        bool relaxed = false);

}  // namespace lrn::solver
