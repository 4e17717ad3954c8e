#include "lrn/fiblucas.hpp"

#include <cassert>
#include <mutex>

namespace lrn::fiblucas {

namespace {

// Append-only table; extension is serialized, reads of already-computed
// entries are safe because the vectors are only grown under the lock.
std::mutex g_mutex;
std::vector<Int> g_fib{0, 1};
std::vector<Int> g_lucas{2, 1};

void extend_to(unsigned k) {
  std::lock_guard lock(g_mutex);
  while (g_fib.size() <= k) {
    std::size_t i = g_fib.size();
    g_fib.push_back(g_fib[i - 1] + g_fib[i - 2]);
    g_lucas.push_back(g_lucas[i - 1] + g_lucas[i - 2]);
  }
}

}  // namespace

Int fib(unsigned k) {
  extend_to(k);
  std::lock_guard lock(g_mutex);
  return g_fib[k];
}

Int lucas(unsigned k) {
  extend_to(k);
  std::lock_guard lock(g_mutex);
  return g_lucas[k];
}

FlpSides flp(unsigned k, int eps, FlpIdentity id) {
  if (eps != 1 && eps != -1) throw std::domain_error("flp: eps must be +1 or -1");
  long lo = static_cast<long>(k) - 2 * eps;
  if (lo < 0) throw std::domain_error("flp: index underflow, need k - 2*eps >= 0");
  unsigned km2e = static_cast<unsigned>(lo);
  unsigned kpe = static_cast<unsigned>(static_cast<long>(k) + eps);
  FlpSides s;
  if (id == FlpIdentity::FourFib) {
    s.lhs = 4 * fib(k) - fib(km2e);
    s.rhs = lucas(kpe);
  } else {
    s.lhs = 4 * lucas(k) - lucas(km2e);
    s.rhs = 5 * fib(kpe);
  }
  return s;
}

namespace {

std::vector<unsigned> twice_square_scan(unsigned k_max, Int (*seq)(unsigned)) {
  std::vector<unsigned> hits;
  for (unsigned k = 0; k <= k_max; ++k) {
    Int v = seq(k);
    if (v % 2 == 0 && is_square(v / 2)) hits.push_back(k);
  }
  return hits;
}

}  // namespace

std::vector<unsigned> cohn_lucas_2sq(unsigned k_max) { return twice_square_scan(k_max, &lucas); }

std::vector<unsigned> cohn_fib_2sq(unsigned k_max) { return twice_square_scan(k_max, &fib); }

std::vector<PellPair> neg_pell_iter(unsigned t_max) {
  std::vector<PellPair> out;
  Int u = 1, y = 1;
  for (unsigned t = 0; t <= t_max; ++t) {
    assert(y * y - 2 * u * u == -1);
    out.push_back({u, y, t});
    Int u_next = 2 * y + 3 * u;
    Int y_next = 3 * y + 4 * u;
    u = u_next;
    y = y_next;
  }
  return out;
}

}  // namespace lrn::fiblucas
