#pragma once

#include "lrn/arith.hpp"

#include <string>
#include <vector>

namespace lrn::lehmer {

/// Parameter pair (a, b) of a Lehmer pair: a = (alpha+beta)^2,
/// b = a - 4*alpha*beta. Construct through validate_pair.
struct LehmerParams {
  Int a;
  Int b;

  Int q() const { return (a - b) / 4; }  // alpha * beta
  bool operator==(const LehmerParams&) const = default;
};

enum class PairError {
  Ok,
  NonPositiveA,  // a >= 1 required
  ZeroB,
  NonIntegralQ,  // a != b (mod 4)
  ZeroQ,         // a == b
  NotCoprime,    // gcd(a, Q) != 1
  RootOfUnity    // alpha/beta degenerate: b = -a, a = -3b or b = -3a
};

struct PairValidation {
  PairError error = PairError::Ok;
  LehmerParams params;

  bool ok() const { return error == PairError::Ok; }
};

PairValidation validate_pair(const Int& a, const Int& b);

/// ell-th Lehmer number of the pair, by the integer recurrence
///   L_1 = L_2 = 1, L_3 = (3a+b)/4, L_4 = (a+b)/2,
///   L_ell = ((a+b)/2) * L_{ell-2} - Q^2 * L_{ell-4}   (ell >= 5).
/// Rejects ell = 0.
Int lehmer_number(const LehmerParams& params, unsigned ell);

struct PrimitiveDivisor {
  enum class Status { Found, Absent };
  Status status = Status::Absent;
  Int prime;  // smallest identified prime when Found; 0 when existence is
              // proven but no prime could be named within the budget
};

/// Existence of a prime dividing L_ell but not a*b*L_1*...*L_{ell-1},
/// decided exactly: the non-primitive part is stripped by gcd, so any
/// remaining cofactor > 1 proves a primitive divisor exists even when the
/// cofactor resists factorization. Naming the smallest prime is
/// best-effort within the budget.
PrimitiveDivisor primitive_divisor(const LehmerParams& params, unsigned ell,
                                   std::uint64_t rho_budget = 10'000'000);

/// One entry of the no-primitive-divisor table for prime 3 <= ell <= 30.
struct DefectEntry {
  bool parametric = false;
  Int a;               // fixed pairs only
  Int b;
  std::string family;  // human-readable descriptor for parametric entries
};

/// Exact table of parameter pairs (up to sign equivalence) whose ell-th
/// Lehmer number has no primitive divisor. Empty for primes in [3, 30]
/// with no defective pair; rejects ell outside [3, 30] or composite.
std::vector<DefectEntry> defect_table(unsigned ell);

/// True iff (a, b) or (-a, -b) matches a defect_table entry. Parametric
/// families are decided by scanning parameters/indices up to the ceiling.
bool matches_defect(const LehmerParams& params, unsigned ell, unsigned index_ceiling = 60);

}  // namespace lrn::lehmer
