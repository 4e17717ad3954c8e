#pragma once

#include "lrn/arith.hpp"

#include <vector>

namespace lrn::quadforms {

/// Primitive reduced binary quadratic form A*X^2 + B*X*Y + C*Y^2 of
/// negative discriminant B^2 - 4*A*C.
struct QuadraticForm {
  Int a;
  Int b;
  Int c;

  Int discriminant() const { return b * b - 4 * a * c; }
  bool operator==(const QuadraticForm&) const = default;
};

/// Fundamental discriminant of Q(sqrt(-D)) for squarefree D >= 1:
/// -D when D = 3 (mod 4), else -4*D. Rejects non-squarefree D.
Int field_discriminant(const Int& d);

/// Every primitive reduced form of discriminant disc (< 0, = 0 or 1 mod 4)
/// exactly once, ordered lexicographically by (A, B).
std::vector<QuadraticForm> reduced_forms(const Int& disc);

/// Class number of Q(sqrt(-D)), D squarefree >= 1.
Int class_number(const Int& d);

struct HypothesisReport {
  Int cd;
  bool squarefree = false;
  int residue_mod4 = 0;
  Int class_number;  // 0 when not computed (inadmissible shape)
  Int gcd_with_n;
  bool admissible = false;
};

/// The solvability hypotheses for exponent n on coefficients (c, d):
/// cd squarefree, cd != 3 (mod 4), and h(-cd) coprime to the largest
/// prime divisor of the odd part of n (the whole of n when n <= 2 or a
/// power of 2).
HypothesisReport hypothesis_check(const Int& c, const Int& d, const Int& n);

}  // namespace lrn::quadforms
