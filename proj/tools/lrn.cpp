// lrn: exact solver and exhaustive-search front end for the equation
// family c*x^2 + d^(2m+1) = 2*y^n.
//
// Output is line-delimited JSON on stdout (one record per line, schema
// versioned, big integers as decimal strings); diagnostics go to stderr.
// Exit codes: 0 ok, 1 malformed input, 2 inadmissible hypotheses,
// 3 failed verification.

#include <CLI11.hpp>
#include <json.hpp>

#include "lrn/fiblucas.hpp"
#include "lrn/lehmer.hpp"
#include "lrn/oracle.hpp"
#include "lrn/quadforms.hpp"
#include "lrn/solver.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using lrn::Int;
using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string dec(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void emit(json j) {
  j["schema"] = kSchemaVersion;
  std::cout << j.dump() << '\n';
}

json solution_record(const lrn::solver::Solution& s) {
  json j{{"kind", "solution"}, {"c", dec(s.c)}, {"d", dec(s.d)}, {"x", dec(s.x)},
         {"y", dec(s.y)},      {"m", s.m},      {"n", s.n},      {"provenance", s.provenance},
         {"trivial", s.trivial}};
  if (s.coords.u) j["u"] = dec(*s.coords.u);
  if (s.coords.v) j["v"] = dec(*s.coords.v);
  if (s.coords.k) j["k"] = *s.coords.k;
  if (s.coords.t) j["t"] = *s.coords.t;
  if (s.coords.eps) j["eps"] = *s.coords.eps;
  if (s.coords.delta) j["delta"] = *s.coords.delta;
  return j;
}

json hypothesis_record(const lrn::quadforms::HypothesisReport& r) {
  return json{{"kind", "report"},
              {"report", "hypothesis"},
              {"cd", dec(r.cd)},
              {"squarefree", r.squarefree},
              {"residue_mod4", r.residue_mod4},
              {"class_number", dec(r.class_number)},
              {"gcd_with_n", dec(r.gcd_with_n)},
              {"admissible", r.admissible}};
}

struct BoundsFlags {
  std::string x_max, y_max;
  int m_max = -1, n_max = -1, u_max = -1, k_max = -1, t_max = -1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--x-max", x_max, "largest x kept");
    cmd->add_option("--y-max", y_max, "largest y scanned/generated");
    cmd->add_option("--m-max", m_max, "largest m");
    cmd->add_option("--n-max", n_max, "largest exponent scanned");
    cmd->add_option("--u-max", u_max, "family index ceiling u");
    cmd->add_option("--k-max", k_max, "family index ceiling k");
    cmd->add_option("--t-max", t_max, "family index ceiling t");
  }

  lrn::solver::SearchBounds resolve(const std::string& config_path) const {
    lrn::solver::SearchBounds b;  // desk-scale defaults
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw CLI::ValidationError("config", "cannot open " + config_path);
      json cfg = json::parse(in);
      if (cfg.contains("x_max")) b.x_max = Int(cfg["x_max"].get<std::string>());
      if (cfg.contains("y_max")) b.y_max = Int(cfg["y_max"].get<std::string>());
      if (cfg.contains("m_max")) b.m_max = cfg["m_max"].get<unsigned>();
      if (cfg.contains("n_max")) b.n_max = cfg["n_max"].get<unsigned>();
      if (cfg.contains("u_max")) b.u_max = cfg["u_max"].get<unsigned>();
      if (cfg.contains("k_max")) b.k_max = cfg["k_max"].get<unsigned>();
      if (cfg.contains("t_max")) b.t_max = cfg["t_max"].get<unsigned>();
    }
    if (!x_max.empty()) b.x_max = Int(x_max);
    if (!y_max.empty()) b.y_max = Int(y_max);
    if (m_max >= 0) b.m_max = static_cast<unsigned>(m_max);
    if (n_max >= 0) b.n_max = static_cast<unsigned>(n_max);
    if (u_max >= 0) b.u_max = static_cast<unsigned>(u_max);
    if (k_max >= 0) b.k_max = static_cast<unsigned>(k_max);
    if (t_max >= 0) b.t_max = static_cast<unsigned>(t_max);
    return b;
  }
};

Int parse_int(const std::string& s, const char* what) {
  try {
    Int v(s);
    if (v < 1) throw std::invalid_argument("non-positive");
    return v;
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected a positive integer, got '" + s + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solver for the family c*x^2 + d^(2m+1) = 2*y^n"};
  app.require_subcommand(1);

  std::string config_path;
  if (const char* env = std::getenv("LRN_CONFIG")) config_path = env;
  app.add_option("--config", config_path, "JSON file with bounds defaults (env LRN_CONFIG)");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "theorem-path solutions for one instance");
  std::string s_c, s_d;
  unsigned s_n = 0;
  int s_m = -1;
  bool s_relaxed = false;
  BoundsFlags s_bounds;
  solve->add_option("--c", s_c)->required();
  solve->add_option("--d", s_d)->required();
  solve->add_option("--n", s_n)->required();
  solve->add_option("--m", s_m, "fix m instead of scanning 0..m-max");
  solve->add_flag("--relaxed", s_relaxed, "drop the squarefree/mod-4 gates");
  s_bounds.attach(solve);

  // ---- search ----
  auto* search = app.add_subcommand("search", "exhaustive hypothesis-free scan");
  std::string q_c, q_d, q_checkpoint;
  int q_n = -1;
  unsigned q_workers = 1;
  bool q_coprime = false, q_odd_x = false, q_odd_y = false;
  BoundsFlags q_bounds;
  search->add_option("--c", q_c)->required();
  search->add_option("--d", q_d)->required();
  search->add_option("--n", q_n, "scan a single exponent instead of 3..n-max");
  search->add_option("--checkpoint", q_checkpoint, "resumable checkpoint file");
  search->add_option("--workers", q_workers, "worker threads over y-chunks");
  search->add_flag("--coprime", q_coprime, "require gcd(c*x, y) = 1");
  search->add_flag("--odd-x", q_odd_x);
  search->add_flag("--odd-y", q_odd_y);
  q_bounds.attach(search);

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "exact substitution check of one tuple");
  std::string v_c, v_d, v_x, v_y;
  unsigned v_m = 0, v_n = 0;
  verify->add_option("--c", v_c)->required();
  verify->add_option("--d", v_d)->required();
  verify->add_option("--x", v_x)->required();
  verify->add_option("--y", v_y)->required();
  verify->add_option("--m", v_m)->required();
  verify->add_option("--n", v_n)->required();

  // ---- classnumber ----
  auto* classnumber = app.add_subcommand("classnumber", "class number of Q(sqrt(-D))");
  std::string cn_d;
  classnumber->add_option("--d", cn_d)->required();

  // ---- lehmer ----
  auto* lehmer_cmd = app.add_subcommand("lehmer", "Lehmer number and primitive divisor");
  std::string lh_a, lh_b;
  unsigned lh_l = 0;
  lehmer_cmd->add_option("--a", lh_a)->required();
  lehmer_cmd->add_option("--b", lh_b)->required();
  lehmer_cmd->add_option("--l", lh_l)->required();

  // ---- family ----
  auto* family = app.add_subcommand("family", "enumerate a solution family");
  unsigned f_p = 3;
  std::string f_c = "1";
  int f_m = 0;
  bool f_relaxed = false;
  BoundsFlags f_bounds;
  family->add_option("--p", f_p, "family prime level (3 or 5)")->required();
  family->add_option("--c", f_c, "coefficient c (cubic family only)");
  family->add_option("--m", f_m, "power height m (cubic family only)");
  family->add_flag("--relaxed", f_relaxed);
  f_bounds.attach(family);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      auto bounds = s_bounds.resolve(config_path);
      lrn::solver::EquationInstance inst{parse_int(s_c, "c"), parse_int(s_d, "d"), s_n,
                                         s_m >= 0 ? std::optional<unsigned>(s_m) : std::nullopt};
      auto report = lrn::solver::classify(inst, bounds, s_relaxed);
      emit(hypothesis_record(report.hypothesis));
      for (const auto& sol : report.set.solutions) emit(solution_record(sol));
      emit(json{{"kind", "report"},
                {"report", "completeness"},
                {"complete", report.set.complete},
                {"theorem_path", report.theorem_path},
                {"clauses", report.clauses},
                {"count", report.set.solutions.size()}});
      return report.theorem_path || s_relaxed ? 0 : 2;
    }
    if (*search) {
      auto bounds = q_bounds.resolve(config_path);
      lrn::oracle::Filters filters{q_coprime, q_odd_x, q_odd_y};
      auto set = lrn::oracle::brute_search(
          parse_int(q_c, "c"), parse_int(q_d, "d"), bounds, filters,
          q_n >= 0 ? std::optional<unsigned>(q_n) : std::nullopt, q_checkpoint, q_workers);
      for (const auto& sol : set.solutions) emit(solution_record(sol));
      emit(json{{"kind", "report"}, {"report", "search"}, {"count", set.solutions.size()}});
      return 0;
    }
    if (*verify) {
      bool ok = lrn::solver::verify_solution(parse_int(v_c, "c"), parse_int(v_d, "d"),
                                             parse_int(v_x, "x"), parse_int(v_y, "y"), v_m, v_n);
      emit(json{{"kind", "value"}, {"name", "verified"}, {"value", ok}});
      return ok ? 0 : 3;
    }
    if (*classnumber) {
      Int h = lrn::quadforms::class_number(parse_int(cn_d, "d"));
      emit(json{{"kind", "value"}, {"name", "class_number"}, {"value", dec(h)}});
      return 0;
    }
    if (*lehmer_cmd) {
      auto validation = lrn::lehmer::validate_pair(Int(lh_a), Int(lh_b));
      if (!validation.ok()) {
        emit(json{{"kind", "report"},
                  {"report", "lehmer-pair"},
                  {"valid", false},
                  {"error", static_cast<int>(validation.error)}});
        return 2;
      }
      Int value = lrn::lehmer::lehmer_number(validation.params, lh_l);
      emit(json{{"kind", "value"}, {"name", "lehmer_number"}, {"l", lh_l}, {"value", dec(value)}});
      if (lh_l >= 2) {
        auto pd = lrn::lehmer::primitive_divisor(validation.params, lh_l);
        json j{{"kind", "value"}, {"name", "primitive_divisor"}, {"l", lh_l}};
        using Status = lrn::lehmer::PrimitiveDivisor::Status;
        j["status"] = pd.status == Status::Found ? "found" : "absent";
        if (pd.status == Status::Found && pd.prime != 0) j["value"] = dec(pd.prime);
        emit(j);
      }
      return 0;
    }
    if (*family) {
      auto bounds = f_bounds.resolve(config_path);
      if (f_p == 3) {
        Int c = parse_int(f_c, "c");
        for (Int u = 1; u <= bounds.u_max; u += 2) {
          for (int sign : {-1, 1}) {
            auto sol = lrn::solver::p3_family(c, u, static_cast<unsigned>(f_m), sign, f_relaxed);
            if (sol) emit(solution_record(*sol));
          }
        }
      } else if (f_p == 5) {
        auto set = lrn::solver::p5_families(bounds, f_relaxed);
        for (const auto& sol : set.solutions) emit(solution_record(sol));
      } else {
        std::cerr << "family: --p must be 3 or 5\n";
        return 1;
      }
      return 0;
    }
  } catch (const lrn::solver::InadmissibleError& e) {
    emit(hypothesis_record(e.report));
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
