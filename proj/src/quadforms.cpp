#include "lrn/quadforms.hpp"

namespace lrn::quadforms {

Int field_discriminant(const Int& d) {
  if (d < 1 || !is_squarefree(d)) throw std::domain_error("field_discriminant: squarefree D >= 1 required");
  if (d % 4 == 3) return -d;
  return -4 * d;
}

std::vector<QuadraticForm> reduced_forms(const Int& disc) {
  if (disc >= 0) throw std::domain_error("reduced_forms: discriminant must be negative");
  Int r = disc % 4;
  if (r < 0) r += 4;
  if (r != 0 && r != 1) throw std::domain_error("reduced_forms: discriminant must be 0 or 1 mod 4");

  std::vector<QuadraticForm> forms;
  Int a_bound = isqrt(-disc / 3);
  for (Int a = 1; a <= a_bound; ++a) {
    // B = disc (mod 2), -A < B <= A; C = (B^2 - disc) / (4A) with C >= A.
    for (Int b = -a + 1; b <= a; ++b) {
      if (((b - disc) % 2) != 0) continue;
      Int num = b * b - disc;
      if (num % (4 * a) != 0) continue;
      Int c = num / (4 * a);
      if (c < a) continue;
      if (b < 0 && a == c) continue;  // keep only the B >= 0 representative
      if (gcd(gcd(a, boost::multiprecision::abs(b)), c) != 1) continue;
      forms.push_back({a, b, c});
    }
  }
  return forms;  // loops emit in lexicographic (A, B) order already
}

Int class_number(const Int& d) {
  return Int(reduced_forms(field_discriminant(d)).size());
}

HypothesisReport hypothesis_check(const Int& c, const Int& d, const Int& n) {
  if (c < 1 || d < 1 || n < 1) throw std::domain_error("hypothesis_check: c, d, n >= 1 required");
  HypothesisReport rep;
  rep.cd = c * d;
  rep.squarefree = is_squarefree(rep.cd);
  rep.residue_mod4 = static_cast<int>(rep.cd % 4);
  rep.class_number = 0;
  rep.gcd_with_n = 0;
  if (rep.squarefree) {
    rep.class_number = class_number(rep.cd);
    // Only the odd prime level matters for the class-group argument: an
    // exponent-n solution restricts to exponent P for the largest prime
    // divisor P of n, and the 2-part of n never touches the class group.
    Int p_level = n;
    if (n > 2) {
      Int odd = n;
      while (odd % 2 == 0) odd /= 2;
      p_level = odd > 1 ? factorize(odd).largest_prime() : n;
    }
    rep.gcd_with_n = gcd(p_level, rep.class_number);
  }
  rep.admissible = rep.squarefree && rep.residue_mod4 != 3 && rep.gcd_with_n == 1;
  return rep;
}

}  // namespace lrn::quadforms
