#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqtriplets/error.hpp"
#include "sqtriplets/exact.hpp"
#include "sqtriplets/freecomplex.hpp"
#include "sqtriplets/functors.hpp"
#include "sqtriplets/io.hpp"
#include "sqtriplets/tensorranks.hpp"
#include "sqtriplets/triplets.hpp"
#include "verify.hpp"

namespace {

using namespace sqt;

DegreeTriplet triplet_from_flags(int n, const std::string& a,
                                 const std::string& b, const std::string& c) {
  return parse_triplet("n=" + std::to_string(n) + "; A=" + a + "; B=" + b +
                       "; C=" + c);
}

std::set<int> set_from_flag(const std::string& a) {
  // reuse the triplet parser on a degenerate triplet line
  return triplet_from_flags(0, a, a, a).a;
}

FreeSqComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  return read_complex(in);
}

void store_complex(const FreeSqComplex& f, const std::string& path) {
  if (path.empty()) {
    write_complex(f, std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw domain_error("cannot open " + path + " for writing");
  write_complex(f, out);
}

std::string join_ints(const IntVector& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

void print_solution_human(const DegreeTriplet& t, const BettiSolution& sol) {
  std::cout << triplet_to_string(t) << "\n";
  std::cout << "balanced: yes\n";
  std::cout << "nullity:  " << sol.nullity << "\n";
  if (sol.nullity == 1) {
    std::cout << "alpha:    " << join_ints(sol.alpha) << "\n";
    std::cout << "beta:     " << join_ints(sol.beta) << "\n";
    std::cout << "gamma:    " << join_ints(sol.gamma) << "\n";
    std::cout << "positive: " << (sol.positive ? "yes" : "no") << "\n";
  }
}

nlohmann::json solution_to_json(const BettiSolution& sol, bool balanced) {
  nlohmann::json doc;
  doc["nullity"] = sol.nullity;
  auto dump = [](const IntVector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& x : v) arr.push_back(x.get_str());
    return arr;
  };
  doc["alpha"] = dump(sol.alpha);
  doc["beta"] = dump(sol.beta);
  doc["gamma"] = dump(sol.gamma);
  doc["positive"] = sol.positive;
  doc["balanced"] = balanced;
  return doc;
}

void print_invariant_tables(const FreeSqComplex& f) {
  const InvariantTables t = invariants(f);
  std::cout << "B (generators of the minimal complex):\n"
            << t.b.to_string(f.n());
  std::cout << "H (homology dimensions):\n" << t.h.to_string(f.n());
  std::cout << "C (cohomology dimensions):\n" << t.c.to_string(f.n());
}

int cmd_matrix(int n, bool check_cube) {
  if (check_cube) {
    for (int k = 0; k <= n; ++k) {
      const RatMatrix a = transition_matrix(k);
      RatMatrix want = RatMatrix::identity(static_cast<std::size_t>(k) + 1);
      if (k % 2 == 1) want = want.negated();
      if (!(a * a * a == want)) {
        std::cout << "A^3 = (-1)^n I: FAILED at n = " << k << "\n";
        return 1;
      }
    }
    std::cout << "A^3 = (-1)^n I: OK (n = 0.." << n << ")\n";
    return 0;
  }
  const RatMatrix a = transition_matrix(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) std::cout << " ";
      std::cout << rat_to_string(a(i, j));
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_demo_example23() {
  FreeSqComplex f(3);
  f.set_term(0, {Generator{0}});
  f.set_term(-1, {Generator{0b011}, Generator{0b101}, Generator{0b110}});
  RatMatrix d(1, 3);
  d(0, 0) = 1;
  d(0, 1) = 1;
  d(0, 2) = 1;
  f.set_diff(-1, d);
  f.prune();

  const FreeSqComplex a1 = ad(f);
  const FreeSqComplex a2 = ad(a1);
  std::cout << "F        : " << singly_graded_summary(f) << "\n";
  std::cout << "ad(F)    : " << singly_graded_summary(a1) << "\n";
  std::cout << "ad^2(F)  : " << singly_graded_summary(a2) << "\n\n";

  auto degs = [](const FreeSqComplex& g) {
    return singly_graded_profile(g).degree_sequence;
  };
  DegreeTriplet t;
  t.n = 3;
  for (int x : degs(f)) t.a.insert(x);
  for (int x : degs(a1)) t.b.insert(x);
  for (int x : degs(a2)) t.c.insert(x);
  std::cout << "degree triangle of " << triplet_to_string(t) << "\n";
  std::cout << render_triangle(t) << "\n";
  print_solution_human(t, solve_betti(t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for squarefree complexes, duality iterates and "
               "Betti-number systems"};
  app.require_subcommand(1);

  // matrix
  int matrix_n = 0;
  bool check_cube = false;
  CLI::App* matrix = app.add_subcommand("matrix", "transition matrix tools");
  matrix->add_option("--n", matrix_n, "size parameter")->required();
  matrix->add_flag("--check-cube", check_cube,
                   "verify the cube identity for all sizes up to n");

  // triplet family
  CLI::App* triplet = app.add_subcommand("triplet", "degree triplet tools");
  triplet->require_subcommand(1);
  int tn = 0;
  std::string ta, tb, tc, format = "human";
  int threads = 1;
  bool stats = false;
  auto add_triplet_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", tn, "number of variables")->required();
    cmd->add_option("--A", ta, "degrees of the first complex")->required();
    cmd->add_option("--B", tb, "degrees of the second complex")->required();
    cmd->add_option("--C", tc, "degrees of the third complex")->required();
  };
  CLI::App* solve = triplet->add_subcommand("solve", "solve the Betti system");
  add_triplet_flags(solve);
  solve->add_option("--format", format, "human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  CLI::App* check = triplet->add_subcommand("check", "balance check");
  add_triplet_flags(check);
  CLI::App* reduce_cmd =
      triplet->add_subcommand("reduce", "remove nondegrees from side A");
  add_triplet_flags(reduce_cmd);
  CLI::App* enumerate =
      triplet->add_subcommand("enumerate", "all balanced triplets of type n");
  int en = 0;
  enumerate->add_option("--n", en, "number of variables")->required();
  enumerate->add_flag("--stats", stats, "solve each triplet and summarize");
  enumerate->add_option("--threads", threads, "worker threads");

  // complex family
  CLI::App* complex_cmd = app.add_subcommand("complex", "free complex tools");
  complex_cmd->require_subcommand(1);
  std::string in_path, out_path;
  auto add_io = [&](CLI::App* cmd, bool with_out) {
    cmd->add_option("--in", in_path, "input complex file")->required();
    if (with_out) cmd->add_option("--out", out_path, "output complex file");
  };
  CLI::App* c_validate = complex_cmd->add_subcommand("validate", "diagnostics");
  add_io(c_validate, false);
  CLI::App* c_min = complex_cmd->add_subcommand("minimalize", "cancel units");
  add_io(c_min, true);
  CLI::App* c_dual = complex_cmd->add_subcommand("dualize", "standard dual");
  add_io(c_dual, true);
  CLI::App* c_ad = complex_cmd->add_subcommand("ad", "duality composite");
  add_io(c_ad, true);
  CLI::App* c_ad3 = complex_cmd->add_subcommand("ad3", "third iterate");
  add_io(c_ad3, true);
  CLI::App* c_inv = complex_cmd->add_subcommand("invariants", "B, H, C tables");
  add_io(c_inv, false);

  // tensor family
  CLI::App* tensor = app.add_subcommand("tensor", "tensor-complex ranks");
  tensor->require_subcommand(1);
  CLI::App* ranks = tensor->add_subcommand("ranks", "term ranks over A");
  int rn = 0;
  std::string ra;
  ranks->add_option("--n", rn, "number of variables")->required();
  ranks->add_option("--A", ra, "one-sided degree set")->required();

  // demo
  CLI::App* demo = app.add_subcommand("demo", "worked demonstrations");
  demo->require_subcommand(1);
  demo->add_subcommand("example23", "the three-variable worked example");

  // verify
  CLI::App* verify = app.add_subcommand("verify", "verification suites");
  std::string suite = "all";
  int max_n = 4;
  verify->add_option("--suite", suite, "all, rotation, yanagawa or solver")
      ->check(CLI::IsMember({"all", "rotation", "yanagawa", "solver"}));
  verify->add_option("--max-n", max_n, "largest n to sweep");
  verify->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (matrix->parsed()) return cmd_matrix(matrix_n, check_cube);

    if (triplet->parsed()) {
      if (enumerate->parsed()) {
        const auto all = enumerate_balanced(en, threads);
        for (const DegreeTriplet& t : all)
          std::cout << triplet_to_string(t) << "\n";
        if (stats) {
          long positive = 0, nullity_one = 0;
          for (const DegreeTriplet& t : all) {
            const BettiSolution sol = solve_betti(t);
            if (sol.nullity == 1) ++nullity_one;
            if (sol.positive) ++positive;
          }
          std::cout << "count: " << all.size() << "  nullity=1: " << nullity_one
                    << "  positive: " << positive << "\n";
        }
        return 0;
      }
      const DegreeTriplet t = triplet_from_flags(tn, ta, tb, tc);
      if (solve->parsed()) {
        const BalanceReport rep = check_balanced(t);
        if (!rep.balanced) throw domain_error(rep.violation);
        const BettiSolution sol = solve_betti(t);
        if (format == "machine")
          std::cout << solution_to_json(sol, true).dump(2) << "\n";
        else
          print_solution_human(t, sol);
        return 0;
      }
      if (check->parsed()) {
        const BalanceReport rep = check_balanced(t);
        if (rep.balanced) {
          const TripletParams p = derive_params(t);
          std::cout << "balanced: yes (a=" << p.a << " b=" << p.b
                    << " c=" << p.c << " e=" << p.e() << ")\n";
          std::cout << render_triangle(t);
          return 0;
        }
        std::cout << "balanced: no -- " << rep.violation << "\n";
        return 1;
      }
      if (reduce_cmd->parsed()) {
        std::cout << triplet_to_string(reduce(t)) << "\n";
        return 0;
      }
    }

    if (complex_cmd->parsed()) {
      const FreeSqComplex f = load_complex(in_path);
      if (c_validate->parsed()) {
        const auto issues = validate(f);
        if (issues.empty()) {
          std::cout << "valid\n";
          return 0;
        }
        for (const std::string& s : issues) std::cout << s << "\n";
        return 1;
      }
      const auto diag = validate(f);
      if (!diag.empty()) throw domain_error("invalid complex: " + diag.front());
      if (c_min->parsed()) store_complex(minimalize(f), out_path);
      if (c_dual->parsed()) store_complex(dualize(f), out_path);
      if (c_ad->parsed()) store_complex(ad(f), out_path);
      if (c_ad3->parsed()) store_complex(ad_iterate(f, 3), out_path);
      if (c_inv->parsed()) print_invariant_tables(f);
      return 0;
    }

    if (tensor->parsed()) {
      const std::set<int> a = set_from_flag(ra);
      const PinchingWeights p = pinching_weights(a, rn);
      std::cout << "intervals:";
      for (std::size_t i = 0; i < p.u.size(); ++i)
        std::cout << " (u=" << p.u[i] << ", w=" << p.w[i] << ")";
      std::cout << "\n";
      const ConstructionBetti cb = construction_betti(a, rn);
      std::size_t i = 0;
      for (int d : a)
        std::cout << "rank at degree " << d << ": " << cb.ranks[i++] << "\n";
      std::cout << "concordant with solver and Herzog-Kuhl: "
                << (cb.concordant ? "yes" : "no") << "\n";
      return cb.concordant ? 0 : 1;
    }

    if (demo->parsed()) return cmd_demo_example23();

    if (verify->parsed()) return sqtcli::run_verify(suite, max_n, threads);
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
