#pragma once

#include "lrn/solver.hpp"

#include <optional>
#include <string>

namespace lrn::oracle {

using solver::EquationInstance;
using solver::SearchBounds;
using solver::Solution;
using solver::SolutionSet;

/// Optional hypothesis-style filters. All default OFF: the oracle's value
/// is that it sees everything, including solutions the theory excludes.
struct Filters {
  bool coprime = false;  // gcd(c*x, y) = 1
  bool odd_x = false;
  bool odd_y = false;
};

/// Exhaustive scan of c*x^2 + d^(2m+1) = 2*y^n over
/// 1 <= y <= y_max, 3 <= n <= n_max (or only_n), 0 <= m <= m_max,
/// with x recovered exactly (never scanned) and kept iff x <= x_max.
/// `checkpoint_path`, when set, records one line per finished
/// (y_lo, y_hi, n) chunk and lets an interrupted run resume.
SolutionSet brute_search(const Int& c, const Int& d, const SearchBounds& bounds,
                         const Filters& filters = {}, std::optional<unsigned> only_n = std::nullopt,
                         const std::string& checkpoint_path = {}, unsigned workers = 1);

/// Structural diff between the theorem path and the exhaustive scan,
/// both restricted to the same bounds. Empty diff is the pass condition.
struct EquivalenceDiff {
  std::vector<Solution> solver_only;
  std::vector<Solution> oracle_only;

  bool empty() const { return solver_only.empty() && oracle_only.empty(); }
};

/// Runs classify() and brute_search() for the instance and diffs them.
/// The oracle side runs with the coprime/odd filters on, matching the
/// coordinate hypotheses every theorem-path solution satisfies.
EquivalenceDiff equivalence_report(const EquationInstance& inst, const SearchBounds& bounds,
                                   bool relaxed = false, unsigned workers = 1);

}  // namespace lrn::oracle
