#pragma once

// Independent Lehmer-number oracle: exact arithmetic in the 4-dimensional
// algebra Q(sqrt(A), sqrt(B)) with elements w + x*sqrt(A) + y*sqrt(B) +
// z*sqrt(AB), where sqrt(A), sqrt(B) are formal square roots of the
// (possibly negative) integers A, B. alpha = (sqrt(A)+sqrt(B))/2 and its
// conjugate are multiplied out directly; no recurrence involved. Shared
// by the unit and acceptance suites; errors are thrown, not asserted.

#include "lrn/lehmer.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace lrn::testsupport {

using Rat = boost::multiprecision::cpp_rational;

struct Surd {
  Rat w, x, y, z;
};

inline Surd surd_mul(const Surd& p, const Surd& q, const Int& A, const Int& B) {
  Rat a(A), b(B);
  Surd r;
  r.w = p.w * q.w + a * p.x * q.x + b * p.y * q.y + a * b * p.z * q.z;
  r.x = p.w * q.x + p.x * q.w + b * (p.y * q.z + p.z * q.y);
  r.y = p.w * q.y + p.y * q.w + a * (p.x * q.z + p.z * q.x);
  r.z = p.w * q.z + p.z * q.w + p.x * q.y + p.y * q.x;
  return r;
}

inline Surd surd_pow(Surd base, unsigned e, const Int& A, const Int& B) {
  Surd r{1, 0, 0, 0};
  while (e) {
    if (e & 1) r = surd_mul(r, base, A, B);
    base = surd_mul(base, base, A, B);
    e >>= 1;
  }
  return r;
}

inline Int surd_lehmer(const lehmer::LehmerParams& params, unsigned ell) {
  const Int& A = params.a;
  const Int& B = params.b;
  Surd alpha{0, Rat(1, 2), Rat(1, 2), 0};
  Surd beta{0, Rat(1, 2), Rat(-1, 2), 0};
  Surd pa = surd_pow(alpha, ell, A, B);
  Surd pb = surd_pow(beta, ell, A, B);
  Surd diff{pa.w - pb.w, pa.x - pb.x, pa.y - pb.y, pa.z - pb.z};
  Surd quot;
  if (ell % 2 == 1) {
    // divide by alpha - beta = sqrt(B)
    quot = Surd{diff.y * Rat(B), diff.z * Rat(B), diff.w, diff.x};
    Rat bb(B);
    quot.w /= bb;
    quot.x /= bb;
    quot.y /= bb;
    quot.z /= bb;
  } else {
    // divide by alpha^2 - beta^2 = sqrt(A)*sqrt(B)
    Rat ab = Rat(A) * Rat(B);
    quot = Surd{diff.z * ab, diff.y * Rat(B), diff.x * Rat(A), diff.w};
    quot.w /= ab;
    quot.x /= ab;
    quot.y /= ab;
    quot.z /= ab;
  }
  if (quot.x != 0 || quot.y != 0 || quot.z != 0)
    throw std::logic_error("surd quotient has irrational components");
  if (denominator(quot.w) != 1) throw std::logic_error("surd quotient is not integral");
  return numerator(quot.w);
}

}  // namespace lrn::testsupport
