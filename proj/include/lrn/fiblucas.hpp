#pragma once

#include "lrn/arith.hpp"

#include <utility>
#include <vector>

namespace lrn::fiblucas {

/// k-th Fibonacci number (F_0 = 0, F_1 = 1).
Int fib(unsigned k);

/// k-th Lucas number (L_0 = 2, L_1 = 1).
Int lucas(unsigned k);

enum class FlpIdentity {
  FourFib,   // 4*F_k - F_{k-2e} = L_{k+e}
  FourLucas  // 4*L_k - L_{k-2e} = 5*F_{k+e}
};

struct FlpSides {
  Int lhs;
  Int rhs;
};

/// Both sides of the requested identity, computed independently.
/// eps must be +1 or -1 and k - 2*eps >= 0, else std::domain_error.
FlpSides flp(unsigned k, int eps, FlpIdentity id);

/// Indices k <= k_max with L_k (resp. F_k) equal to twice a square.
std::vector<unsigned> cohn_lucas_2sq(unsigned k_max);
std::vector<unsigned> cohn_fib_2sq(unsigned k_max);

/// One solution of the negative Pell equation y^2 - 2u^2 = -1.
struct PellPair {
  Int u;
  Int y;
  unsigned t = 0;
};

/// Pairs for t = 0..t_max from the recurrence
/// (u_t, y_t) = (2*y_{t-1} + 3*u_{t-1}, 3*y_{t-1} + 4*u_{t-1}),
/// seeded at (1, 1). Every pair is checked against the Pell relation.
std::vector<PellPair> neg_pell_iter(unsigned t_max);

}  // namespace lrn::fiblucas
