#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lrn {

// All arithmetic in this project is exact. Int is an unbounded
// sign-magnitude integer; there is no floating-point path anywhere.
using Int = boost::multiprecision::cpp_int;

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Ordered prime factorization: primes strictly increasing, product of
/// prime^exponent reconstructs the input. The empty list is 1.
struct Factorization {
  std::vector<PrimePower> factors;

  Int value() const;
  bool squarefree() const;
  Int largest_prime() const;  // 1 for the empty factorization
};

/// Raised when a factorization exceeds its work budget. Callers that can
/// tolerate partial knowledge (e.g. primitive-divisor search) catch this
/// and surface an explicit "undecided" instead of guessing.
struct FactorizationTimeout : std::runtime_error {
  FactorizationTimeout() : std::runtime_error("factorization budget exhausted") {}
};

Int gcd(const Int& a, const Int& b);

/// Floor square root. Rejects negative input.
Int isqrt(const Int& n);

bool is_square(const Int& n);

/// Exact e-th root: r with r^e == n, or nullopt. n >= 1, e >= 1.
std::optional<Int> perfect_root(const Int& n, unsigned e);

/// Deterministic for all n < 2^64 (fixed Miller-Rabin witness set).
/// Larger inputs use a strong BPSW test.
bool is_prime(const Int& n);

/// n >= 1. Trial division to 10^6, then Pollard-Brent rho on what
/// remains. Throws FactorizationTimeout past the iteration budget.
Factorization factorize(const Int& n, std::uint64_t rho_budget = 50'000'000);

bool is_squarefree(const Int& n);

struct TwoThreeSplit {
  unsigned r = 0;  // exponent of 2
  unsigned s = 0;  // exponent of 3
  Int w;           // cofactor, gcd(w, 6) = 1

  bool operator==(const TwoThreeSplit&) const = default;
};

/// n = 2^r * 3^s * w with gcd(w, 6) = 1. n >= 1.
TwoThreeSplit two_three_split(const Int& n);

/// All divisors in increasing order.
std::vector<Int> divisors(const Factorization& f);

Int pow_int(const Int& base, unsigned exp);

}  // namespace lrn
