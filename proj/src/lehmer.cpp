#include "lrn/lehmer.hpp"

#include "lrn/fiblucas.hpp"

namespace lrn::lehmer {

using boost::multiprecision::abs;

PairValidation validate_pair(const Int& a, const Int& b) {
  PairValidation v;
  v.params = {a, b};
  if (a < 1) {
    v.error = PairError::NonPositiveA;
  } else if (b == 0) {
    v.error = PairError::ZeroB;
  } else if (((a - b) % 4) != 0) {
    v.error = PairError::NonIntegralQ;
  } else if (a == b) {
    v.error = PairError::ZeroQ;
  } else if (gcd(a, (a - b) / 4) != 1) {
    v.error = PairError::NotCoprime;
  } else if (b == -a || a == -3 * b || b == -3 * a) {
    // 2(a+b)/(a-b) lands in {0, +-1, +-2}: alpha/beta is a root of unity
    v.error = PairError::RootOfUnity;
  }
  return v;
}

Int lehmer_number(const LehmerParams& params, unsigned ell) {
  if (ell == 0) throw std::domain_error("lehmer_number: ell >= 1 required");
  const Int s = (params.a + params.b) / 2;
  const Int q2 = params.q() * params.q();
  // interleaved 4-term recurrence, integer-only throughout
  Int l1 = 1, l2 = 1, l3 = (3 * params.a + params.b) / 4, l4 = s;
  switch (ell) {
    case 1: return l1;
    case 2: return l2;
    case 3: return l3;
    case 4: return l4;
    default: break;
  }
  Int odd_prev = l1, odd_cur = l3;    // indices ell-4, ell-2 within parity class
  Int even_prev = l2, even_cur = l4;
  for (unsigned i = 5; i <= ell; ++i) {
    if (i % 2 == 1) {
      Int next = s * odd_cur - q2 * odd_prev;
      odd_prev = odd_cur;
      odd_cur = next;
    } else {
      Int next = s * even_cur - q2 * even_prev;
      even_prev = even_cur;
      even_cur = next;
    }
  }
  return ell % 2 == 1 ? odd_cur : even_cur;
}

namespace {

// Smallest prime factor via trial division up to `bound`; 0 if none.
Int smallest_factor_below(const Int& n, Int bound) {
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  for (Int p = 5; p <= bound && p * p <= n; p += 6) {
    if (n % p == 0) return p;
    if (n % (p + 2) == 0) return p + 2;
  }
  return 0;
}

}  // namespace

PrimitiveDivisor primitive_divisor(const LehmerParams& params, unsigned ell,
                                   std::uint64_t rho_budget) {
  if (ell < 2) throw std::domain_error("primitive_divisor: ell >= 2 required");
  Int target = abs(lehmer_number(params, ell));
  PrimitiveDivisor result;
  if (target == 1) {
    result.status = PrimitiveDivisor::Status::Absent;
    return result;
  }
  // (alpha^2 - beta^2)^2 = a*b, so the non-primitive part is a*b*L_1*...*L_{ell-1}.
  // Stripping term by term keeps every gcd on operands no larger than L_ell.
  Int rem = target;
  auto strip = [&](const Int& term) {
    Int t = abs(term);
    if (t <= 1) return;
    for (Int g = gcd(rem, t); g > 1 && rem > 1; g = gcd(rem, t)) rem /= g;
  };
  strip(params.a * params.b);
  for (unsigned k = 1; k < ell && rem > 1; ++k) strip(lehmer_number(params, k));
  if (rem == 1) {
    result.status = PrimitiveDivisor::Status::Absent;
    return result;
  }
  // Every prime factor of rem is primitive, so existence is settled;
  // name the smallest one when that is affordable.
  result.status = PrimitiveDivisor::Status::Found;
  const Int kTrialBound = 1'000'000;
  if (Int p = smallest_factor_below(rem, kTrialBound); p != 0) {
    result.prime = p;
    return result;
  }
  if (rem <= kTrialBound * kTrialBound || is_prime(rem)) {
    result.prime = rem;
    return result;
  }
  try {
    result.prime = factorize(rem, rho_budget).factors.front().prime;
  } catch (const FactorizationTimeout&) {
    result.prime = 0;  // existence proven, smallest prime unidentified
  }
  return result;
}

std::vector<DefectEntry> defect_table(unsigned ell) {
  if (ell < 3 || ell > 30 || !is_prime(Int(ell)))
    throw std::domain_error("defect_table: ell must be a prime in [3, 30]");
  std::vector<DefectEntry> t;
  switch (ell) {
    case 3:
      t.push_back({true, 0, 0, "(1+t, 1-3t) with t != 0, 1"});
      t.push_back({true, 0, 0, "(3^k+t, 3^k-3t) with t != 0 (mod 3), (k,t) != (1,1)"});
      break;
    case 5:
      t.push_back({true, 0, 0, "(F(k-2e), F(k-2e)-4F(k)) with k >= 3, e = +-1"});
      t.push_back({true, 0, 0, "(L(k-2e), L(k-2e)-4L(k)) with k != 1, e = +-1"});
      break;
    case 7:
      for (auto [a, b] : {std::pair<int, int>{1, -7}, {1, -19}, {3, -5}, {5, -7}, {13, -3}, {14, -22}})
        t.push_back({false, a, b, ""});
      break;
    case 13:
      t.push_back({false, 1, -7, ""});
      break;
    default:
      break;  // 11, 17, 19, 23, 29: no defective pairs
  }
  return t;
}

namespace {

bool matches_ell3(const Int& a, const Int& b, unsigned ceiling) {
  // (1+t, 1-3t), t != 0, 1
  Int t = a - 1;
  if (t != 0 && t != 1 && b == 1 - 3 * t) return true;
  // (3^k+t, 3^k-3t), t != 0 (mod 3), (k,t) != (1,1)
  Int pk = 1;
  for (unsigned k = 0; k <= ceiling; ++k) {
    Int tk = a - pk;
    if (tk != 0 && tk % 3 != 0 && b == pk - 3 * tk && !(k == 1 && tk == 1)) return true;
    pk *= 3;
    if (pk > abs(a) + 3 * abs(b) + 3) break;
  }
  return false;
}

bool matches_ell5(const Int& a, const Int& b, unsigned ceiling) {
  using fiblucas::fib;
  using fiblucas::lucas;
  for (unsigned k = 0; k <= ceiling; ++k) {
    for (int eps : {1, -1}) {
      long lo = static_cast<long>(k) - 2 * eps;
      if (lo < 0) continue;
      unsigned km2e = static_cast<unsigned>(lo);
      if (k >= 3 && a == fib(km2e) && b == fib(km2e) - 4 * fib(k)) return true;
      if (k != 1 && a == lucas(km2e) && b == lucas(km2e) - 4 * lucas(k)) return true;
    }
  }
  return false;
}

}  // namespace

bool matches_defect(const LehmerParams& params, unsigned ell, unsigned index_ceiling) {
  auto table = defect_table(ell);  // validates ell
  for (int sign : {1, -1}) {
    Int a = sign * params.a, b = sign * params.b;
    if (ell == 3 && matches_ell3(a, b, index_ceiling)) return true;
    if (ell == 5 && matches_ell5(a, b, index_ceiling)) return true;
    for (const auto& e : table)
      if (!e.parametric && a == e.a && b == e.b) return true;
  }
  return false;
}

}  // namespace lrn::lehmer
