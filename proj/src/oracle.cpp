#include "lrn/oracle.hpp"

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace lrn::oracle {

namespace {

using nlohmann::json;

struct ChunkKey {
  Int y_lo, y_hi;
  unsigned n;

  bool operator<(const ChunkKey& o) const {
    if (y_lo != o.y_lo) return y_lo < o.y_lo;
    if (y_hi != o.y_hi) return y_hi < o.y_hi;
    return n < o.n;
  }
};

std::string to_dec(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// One completed (y_lo, y_hi, n) record per line, JSON-structured.
class Checkpoint {
 public:
  explicit Checkpoint(std::string path) : path_(std::move(path)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.contains("y_lo")) continue;
      ChunkKey key{Int(j["y_lo"].get<std::string>()), Int(j["y_hi"].get<std::string>()),
                   j["n"].get<unsigned>()};
      std::vector<Solution> sols;
      for (const auto& t : j["tuples"]) {
        Solution s;
        s.c = Int(t["c"].get<std::string>());
        s.d = Int(t["d"].get<std::string>());
        s.x = Int(t["x"].get<std::string>());
        s.y = Int(t["y"].get<std::string>());
        s.m = t["m"].get<unsigned>();
        s.n = t["n"].get<unsigned>();
        s.provenance = "oracle";
        sols.push_back(std::move(s));
      }
      done_[key] = std::move(sols);
    }
  }

  const std::vector<Solution>* lookup(const ChunkKey& key) const {
    auto it = done_.find(key);
    return it == done_.end() ? nullptr : &it->second;
  }

  void record(const ChunkKey& key, const std::vector<Solution>& sols) {
    if (path_.empty()) return;
    std::lock_guard lock(mutex_);
    json tuples = json::array();
    for (const auto& s : sols) {
      tuples.push_back({{"c", to_dec(s.c)},
                        {"d", to_dec(s.d)},
                        {"x", to_dec(s.x)},
                        {"y", to_dec(s.y)},
                        {"m", s.m},
                        {"n", s.n}});
    }
    json j{{"y_lo", to_dec(key.y_lo)}, {"y_hi", to_dec(key.y_hi)}, {"n", key.n}, {"tuples", tuples}};
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << '\n';
  }

 private:
  std::string path_;
  std::mutex mutex_;
  std::map<ChunkKey, std::vector<Solution>> done_;
};

std::vector<Solution> scan_chunk(const Int& c, const Int& d, const ChunkKey& key,
                                 const SearchBounds& bounds, const Filters& filters) {
  std::vector<Solution> found;
  std::vector<Int> d_powers;  // d^(2m+1)
  for (unsigned m = 0; m <= bounds.m_max; ++m) d_powers.push_back(pow_int(d, 2 * m + 1));
  for (Int y = key.y_lo; y <= key.y_hi; ++y) {
    if (filters.odd_y && y % 2 == 0) continue;
    Int two_yn = 2 * pow_int(y, key.n);
    for (unsigned m = 0; m <= bounds.m_max; ++m) {
      Int t = two_yn - d_powers[m];
      if (t <= 0) break;  // larger m only shrinks t further
      if (t % c != 0) continue;
      Int x2 = t / c;
      if (!is_square(x2)) continue;
      Int x = isqrt(x2);
      if (x < 1 || x > bounds.x_max) continue;
      if (filters.odd_x && x % 2 == 0) continue;
      if (filters.coprime && gcd(c * x, y) != 1) continue;
      Solution s;
      s.c = c;
      s.d = d;
      s.x = x;
      s.y = y;
      s.m = m;
      s.n = key.n;
      s.provenance = "oracle";
      found.push_back(std::move(s));
    }
  }
  return found;
}

}  // namespace

SolutionSet brute_search(const Int& c, const Int& d, const SearchBounds& bounds,
                         const Filters& filters, std::optional<unsigned> only_n,
                         const std::string& checkpoint_path, unsigned workers) {
  if (c < 1 || d < 1) throw std::domain_error("brute_search: c, d >= 1 required");
  Checkpoint ckpt(checkpoint_path);

  const Int kChunk = 512;
  std::vector<ChunkKey> chunks;
  unsigned n_lo = only_n.value_or(3);
  unsigned n_hi = only_n.value_or(bounds.n_max);
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    for (Int y_lo = 1; y_lo <= bounds.y_max; y_lo += kChunk) {
      Int y_hi = y_lo + kChunk - 1;
      if (y_hi > bounds.y_max) y_hi = bounds.y_max;
      chunks.push_back({y_lo, y_hi, n});
    }
  }

  std::vector<std::vector<Solution>> results(chunks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= chunks.size()) return;
      if (const auto* cached = ckpt.lookup(chunks[i])) {
        results[i] = *cached;
        continue;
      }
      results[i] = scan_chunk(c, d, chunks[i], bounds, filters);
      ckpt.record(chunks[i], results[i]);
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SolutionSet out;
  for (auto& chunk : results)
    for (auto& s : chunk) out.add(std::move(s));
  out.complete = false;  // exhaustive only within the given bounds
  out.normalize();
  return out;
}

EquivalenceDiff equivalence_report(const EquationInstance& inst, const SearchBounds& bounds,
                                   bool relaxed, unsigned workers) {
  auto report = solver::classify(inst, bounds, relaxed);
  if (!report.theorem_path) throw solver::InadmissibleError(report.hypothesis);

  // The theorem coordinates force odd x, odd y and gcd(cx, y) = 1; the
  // oracle is filtered to the same population for a like-for-like diff.
  Filters filters{true, true, true};
  SolutionSet scan = brute_search(inst.c, inst.d, bounds, filters, inst.n, {}, workers);

  auto key = [](const Solution& s) { return std::tuple(s.n, s.m, s.y, s.x); };
  auto in_bounds = [&](const Solution& s) {
    return s.x <= bounds.x_max && s.y <= bounds.y_max && s.m <= bounds.m_max;
  };
  std::vector<Solution> lhs;
  for (const auto& s : report.set.solutions)
    if (in_bounds(s)) lhs.push_back(s);

  EquivalenceDiff diff;
  auto contains = [&](const std::vector<Solution>& v, const Solution& s) {
    for (const auto& t : v)
      if (key(t) == key(s)) return true;
    return false;
  };
  for (const auto& s : lhs)
    if (!contains(scan.solutions, s)) diff.solver_only.push_back(s);
  for (const auto& s : scan.solutions)
    if (!contains(lhs, s)) diff.oracle_only.push_back(s);
  return diff;
}

}  // namespace lrn::oracle
