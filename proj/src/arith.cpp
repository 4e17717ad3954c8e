#include "lrn/arith.hpp"

#include <algorithm>
#include <array>

namespace lrn {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::powm;

Int int_pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1u) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for n < 2^64 with the standard 12-witness set.
bool mr_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool mr_witness(const Int& n, const Int& a) {
  Int d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Int x = powm(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 0; i < s - 1; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

int jacobi(Int a, Int n) {
  // n odd positive
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      Int r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a % 4) == 3 && (n % 4) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas(const Int& n) {
  // Find D = 5, -7, 9, -11, ... with jacobi(D, n) == -1.
  Int d = 5;
  while (true) {
    int j = jacobi(d, n);
    if (j == 0) return abs(d) == n;  // proper factor found otherwise
    if (j == -1) break;
    d = d > 0 ? Int(-(d + 2)) : Int(-(d - 2));
  }
  Int p = 1, q = (1 - d) / 4;

  Int delta = n + 1;
  Int s = delta;
  int r = 0;
  while ((s & 1) == 0) {
    s >>= 1;
    ++r;
  }
  // Compute U_s, V_s by binary ladder.
  Int u = 1, v = p, qk = q % n;
  if (u < 0) u += n;
  if (qk < 0) qk += n;
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(s));
  for (int i = static_cast<int>(bits) - 1; i >= 0; --i) {
    // double
    u = (u * v) % n;
    v = (v * v - 2 * qk) % n;
    qk = (qk * qk) % n;
    if (boost::multiprecision::bit_test(s, static_cast<unsigned>(i))) {
      Int u2 = (p * u + v) % n;
      Int v2 = (d * u + p * v) % n;
      if ((u2 & 1) != 0) u2 += n;
      if ((v2 & 1) != 0) v2 += n;
      u = (u2 >> 1) % n;
      v = (v2 >> 1) % n;
      qk = (qk * q) % n;
    }
  }
  if (u < 0) u += n;
  if (v < 0) v += n;
  if (u == 0 || v == 0) return true;
  for (int i = 0; i < r - 1; ++i) {
    v = (v * v - 2 * qk) % n;
    qk = (qk * qk) % n;
    if (v == 0) return true;
  }
  return false;
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Pollard-Brent rho. Returns a non-trivial factor of n (composite, odd,
// not a prime power of a small prime). Decrements the shared budget.
Int rho_factor(const Int& n, std::uint64_t& budget) {
  std::uint64_t seed = 0x243f6a8885a308d3ull;
  while (true) {
    Int y = Int(splitmix(seed) % 1'000'000'007ull) % n;
    Int c = Int(splitmix(seed) % 1'000'000'007ull) % n;
    if (c == 0) c = 1;
    Int x = y, ys = y, q = 1, g = 1;
    const unsigned m = 128;
    unsigned r = 1;
    while (g == 1) {
      x = y;
      for (unsigned i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned k = 0; k < r && g == 1; k += m) {
        ys = y;
        unsigned lim = std::min(m, r - k);
        for (unsigned i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        if (budget < lim) throw FactorizationTimeout();
        budget -= lim;
      }
      r <<= 1;
    }
    if (g == n) {
      // backtrack
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
        if (budget == 0) throw FactorizationTimeout();
        --budget;
      }
    }
    if (g != n) return g;
    // cycle degenerated; retry with new parameters
  }
}

void factor_rec(const Int& n, std::vector<Int>& primes, std::uint64_t& budget) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  for (unsigned e = 2; e <= boost::multiprecision::msb(n) + 1; ++e) {
    if (auto r = perfect_root(n, e)) {
      if (is_prime(*r)) {
        for (unsigned i = 0; i < e; ++i) primes.push_back(*r);
        return;
      }
    }
  }
  Int g = rho_factor(n, budget);
  factor_rec(g, primes, budget);
  factor_rec(n / g, primes, budget);
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  for (const auto& pp : factors) v *= int_pow(pp.prime, pp.exponent);
  return v;
}

bool Factorization::squarefree() const {
  for (const auto& pp : factors)
    if (pp.exponent > 1) return false;
  return true;
}

Int Factorization::largest_prime() const {
  return factors.empty() ? Int(1) : factors.back().prime;
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(abs(a), abs(b)); }

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative input");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Int& n) {
  if (n < 0) return false;
  // quick residue filter mod 64
  unsigned low = static_cast<unsigned>(n & 63);
  static constexpr std::array<bool, 64> kSq64 = [] {
    std::array<bool, 64> t{};
    for (unsigned i = 0; i < 64; ++i) t[(i * i) & 63] = true;
    return t;
  }();
  if (!kSq64[low]) return false;
  Int r = isqrt(n);
  return r * r == n;
}

std::optional<Int> perfect_root(const Int& n, unsigned e) {
  if (n < 1 || e < 1) throw std::domain_error("perfect_root: n >= 1 and e >= 1 required");
  if (e == 1) return n;
  if (n == 1) return Int(1);
  if (e == 2) {
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
  }
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  if (bits <= e) {
    // root can only be 1, and n > 1
    return std::nullopt;
  }
  Int lo = 1, hi = Int(1) << (bits / e + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) >> 1;
    if (int_pow(mid, e) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  if (int_pow(lo, e) == n) return lo;
  return std::nullopt;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < (Int(1) << 64)) return mr_u64(static_cast<std::uint64_t>(n));
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
    if (n % p == 0) return false;
  }
  if (is_square(n)) return false;  // Lucas test requires non-square
  if (!mr_witness(n, 2)) return false;
  return strong_lucas(n);
}

Factorization factorize(const Int& n, std::uint64_t rho_budget) {
  if (n < 1) throw std::domain_error("factorize: n >= 1 required");
  Factorization f;
  Int rem = n;
  auto strip = [&](const Int& p) {
    if (rem % p == 0) {
      unsigned e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      f.factors.push_back({p, e});
    }
  };
  strip(2);
  strip(3);
  for (Int p = 5; p <= 1'000'000 && p * p <= rem; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rem > 1) {
    if (rem <= Int(1'000'006) * 1'000'006 || is_prime(rem)) {
      // trial division was exhaustive up to the square root, or rem is prime
      f.factors.push_back({rem, 1});
    } else {
      std::vector<Int> primes;
      factor_rec(rem, primes, rho_budget);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

bool is_squarefree(const Int& n) {
  if (n < 1) throw std::domain_error("is_squarefree: n >= 1 required");
  return factorize(n).squarefree();
}

TwoThreeSplit two_three_split(const Int& n) {
  if (n < 1) throw std::domain_error("two_three_split: n >= 1 required");
  TwoThreeSplit t;
  t.w = n;
  while (t.w % 2 == 0) {
    t.w /= 2;
    ++t.r;
  }
  while (t.w % 3 == 0) {
    t.w /= 3;
    ++t.s;
  }
  return t;
}

std::vector<Int> divisors(const Factorization& f) {
  std::vector<Int> ds{1};
  for (const auto& pp : f.factors) {
    std::size_t base = ds.size();
    Int pe = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      pe *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pe);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Int pow_int(const Int& base, unsigned exp) { return int_pow(base, exp); }

}  // namespace lrn
