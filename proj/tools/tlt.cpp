// Command line front end: enumeration, statistics, bijections, symmetric
// families, PASEP distributions, and the verification suites.
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlt/classes_paths.hpp"
#include "tlt/errors.hpp"
#include "tlt/insertion.hpp"
#include "tlt/json_io.hpp"
#include "tlt/numeric.hpp"
#include "tlt/pasep.hpp"
#include "tlt/permutation.hpp"
#include "tlt/polynomial.hpp"
#include "tlt/statistics.hpp"
#include "tlt/symmetric.hpp"
#include "tlt/tableau.hpp"
#include "tlt/verify.hpp"

namespace {

using nlohmann::json;

struct Options {
  int n = 0;
  std::string out;
  int threads = 0;
  unsigned long long seed = 1;
  std::string format = "table";
};

tlt::Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return tlt::Rat(tlt::Int(s));
    tlt::Int den(s.substr(slash + 1));
    if (den == 0) throw tlt::InvalidParams("zero denominator: " + s);
    return tlt::Rat(tlt::Int(s.substr(0, slash)), den);
  } catch (const std::runtime_error&) {
    throw tlt::InvalidParams("not a rational: " + s);
  }
}

std::vector<int> parse_code_list(const std::string& s) {
  std::vector<int> vals;
  std::string cur;
  for (char ch : s + ",") {
    if (ch == ',') {
      if (cur.empty()) throw tlt::InvalidParams("empty entry in code list");
      vals.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    } else {
      throw tlt::InvalidParams("bad character in code list");
    }
  }
  return vals;
}

void emit(const Options& opt, const json& j, const std::string& table) {
  if (opt.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << table;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) throw tlt::InvalidParams("cannot open " + opt.out);
    f << j.dump(2) << "\n";
  }
}

int effective_threads(const Options& opt) {
  if (opt.threads > 0) return opt.threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-like tableau toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--n", opt.n, "size parameter")->capture_default_str();
  app.add_option("--out", opt.out, "write the JSON result to this path");
  app.add_option("--threads", opt.threads, "worker threads (0 = autodetect)");
  app.add_option("--seed", opt.seed, "seed for simulation commands");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.fallthrough();

  auto* generate = app.add_subcommand("generate", "enumerate all tableaux of size n");
  std::string emit_mode;
  generate->add_option("--emit", emit_mode, "emit each tableau (jsonl)")
      ->check(CLI::IsMember({"jsonl"}));

  auto* stats = app.add_subcommand("stats", "occupied-corner statistics for size n");

  auto* poly = app.add_subcommand("poly", "statistic-generating polynomial");
  std::string family = "P";
  poly->add_option("--family", family, "P (all tableaux) or Q (symmetric)")
      ->check(CLI::IsMember({"P", "Q"}));

  auto* phi_cmd = app.add_subcommand("phi", "map an insertion code to its permutation");
  std::string code_arg;
  phi_cmd->add_option("--code", code_arg, "comma separated entries")->required();

  auto* pk = app.add_subcommand("pk-corners", "how often each point lands in a corner");

  auto* classes = app.add_subcommand("classes", "non-ambiguity classes of size n");

  auto* paths = app.add_subcommand("paths", "paths weakly below a lattice path");
  std::string path_arg;
  paths->add_option("--p", path_arg, "path over the E/N alphabet")->required();

  auto* sym = app.add_subcommand("sym", "symmetric tableaux of a given odd size");
  int sym_size = 0;
  std::string sym_check = "all";
  sym->add_option("--size", sym_size, "odd tableau size")->required();
  sym->add_option("--check", sym_check, "which cross-checks to run")
      ->check(CLI::IsMember({"all", "counts", "none"}));

  auto* pasep = app.add_subcommand("pasep", "stationary law of the boundary chain");
  std::string alpha = "1", beta = "1", qrate = "1";
  long long mc_steps = 0;
  pasep->add_option("--alpha", alpha, "entry rate");
  pasep->add_option("--beta", beta, "exit rate");
  pasep->add_option("--q", qrate, "backward hop rate");
  pasep->add_option("--mc", mc_steps, "also simulate this many steps");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  bool quiet = false;
  verify->add_option("--suite", suite, "theorems|conjectures|bijections|pasep|all");
  verify->add_flag("--quiet", quiet, "suppress the human readable table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; genuine parse problems map onto the
    // usage-error slot of the exit contract rather than CLI11's own codes.
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) {
      if (opt.n < 1 || opt.n > 9) throw tlt::InfeasibleN("generate needs --n in 1..9");
      tlt::Int count = 0;
      tlt::generate_all(opt.n, [&](const tlt::Tableau& t, const tlt::InsertionCode& c,
                                   const tlt::PointTrace&) {
        ++count;
        if (emit_mode == "jsonl") {
          json j = tlt::tableau_to_json(t);
          j["code"] = tlt::code_to_json(c)["code"];
          std::cout << j.dump() << "\n";
        }
      });
      json j{{"n", opt.n}, {"count", tlt::to_string(count)}};
      if (emit_mode != "jsonl") emit(opt, j, tlt::to_string(count) + "\n");
    } else if (*stats) {
      if (opt.n < 1 || opt.n > 9) throw tlt::InfeasibleN("stats needs --n in 1..9");
      tlt::StatReport r = tlt::stat_report(opt.n, effective_threads(opt));
      json j = tlt::stat_report_to_json(r);
      j["conjectured_corner_total"] = tlt::to_string(tlt::conjectured_corners_total(opt.n));
      j["corner_conjecture"] =
          tlt::Rat(r.total_corners) == tlt::conjectured_corners_total(opt.n)
              ? "match"
              : (opt.n == 1 ? "mismatch (n=1 outside apparent range)" : "mismatch");
      std::ostringstream t;
      t << "n " << r.n << "\n"
        << "tableaux " << r.total_tableaux << "\n"
        << "occupied corners " << r.total_oc << "\n"
        << "corners " << r.total_corners << " (conjectured "
        << tlt::to_string(tlt::conjectured_corners_total(opt.n)) << ", "
        << std::string(j["corner_conjecture"]) << ")\n"
        << "oc polynomial " << tlt::to_string(tlt::IntPolynomial{r.oc_histogram}) << "\n"
        << "variance " << tlt::to_string(r.variance) << "\n";
      emit(opt, j, t.str());
    } else if (*poly) {
      if (opt.n < 0) throw tlt::InvalidParams("poly needs --n >= 0");
      if (family == "P" && opt.n > 60) throw tlt::InfeasibleN("P recurrence capped at n=60");
      if (family == "Q" && opt.n > 60) throw tlt::InfeasibleN("Q recurrence capped at n=60");
      tlt::IntPolynomial p = family == "P" ? tlt::P_recurrence(opt.n) : tlt::Q_recurrence(opt.n);
      json coeffs = json::array();
      for (const tlt::Int& c : p.coeffs) coeffs.push_back(tlt::to_string(c));
      json j{{"family", family}, {"n", opt.n}, {"coeffs_low_to_high", coeffs}};
      emit(opt, j, tlt::to_string(p) + "\n");
    } else if (*phi_cmd) {
      std::vector<int> vals = parse_code_list(code_arg);
      // a leading 1 for the root's forced first entry is accepted
      if (!vals.empty() && vals.front() == 1 && vals.size() >= 2) {
        bool plausible_full = true;
        for (size_t i = 1; i < vals.size(); ++i)
          if (vals[i] > static_cast<int>(i) + 1) plausible_full = false;
        if (plausible_full) vals.erase(vals.begin());
      }
      tlt::InsertionCode code{vals};
      tlt::Permutation s = tlt::phi(code);
      json j{{"permutation", s.word}, {"code", vals}};
      json tbl = json::array();
      for (int v : tlt::non_inversion_table(s)) tbl.push_back(v);
      j["non_inversion_table"] = tbl;
      emit(opt, j, tlt::to_string(s) + "\n");
    } else if (*pk) {
      if (opt.n < 2 || opt.n > 9) throw tlt::InfeasibleN("pk-corners needs --n in 2..9");
      json rows = json::array();
      std::ostringstream t;
      tlt::Int sum = 0;
      for (int k = 2; k <= opt.n; ++k) {
        tlt::Int v = tlt::count_pk_in_corner(opt.n, k);
        sum += v;
        rows.push_back({{"k", k}, {"count", tlt::to_string(v)}});
        t << "k=" << k << "  " << v << "\n";
      }
      t << "total " << sum << "\n";
      emit(opt, {{"n", opt.n}, {"rows", rows}, {"total", tlt::to_string(sum)}}, t.str());
    } else if (*classes) {
      if (opt.n < 1 || opt.n > 8) throw tlt::InfeasibleN("classes needs --n in 1..8");
      auto parts = tlt::partition_classes(opt.n);
      json arr = json::array();
      std::ostringstream t;
      for (const auto& [key, cls] : parts) {
        const tlt::Tableau& canon = tlt::canonical_representative(cls);
        auto range = tlt::class_path_range(canon);
        tlt::LatticePath p = tlt::member_path(canon, range);
        json oc = json::array();
        for (const tlt::Tableau& m : cls) oc.push_back(tlt::occupied_corner_count(m));
        arr.push_back({{"size", cls.size()}, {"canonical_path", p}, {"oc", oc}});
        t << "class of " << cls.size() << "  path " << p << "\n";
      }
      t << parts.size() << " classes\n";
      emit(opt, {{"n", opt.n}, {"classes", arr}}, t.str());
    } else if (*paths) {
      for (char c : path_arg)
        if (c != 'E' && c != 'N') throw tlt::InvalidParams("path must use E and N only");
      if (path_arg.size() > 24) throw tlt::InfeasibleN("paths capped at 24 steps");
      auto below = tlt::paths_below(path_arg);
      json arr = json::array();
      std::ostringstream t;
      tlt::Int total = 0;
      for (const tlt::LatticePath& q : below) {
        tlt::Int c = tlt::cc(path_arg, q);
        total += c;
        arr.push_back({{"path", q}, {"common_corners", tlt::to_string(c)}});
        t << q << "  cc " << c << "\n";
      }
      t << below.size() << " paths below, common corners total " << total << "\n";
      emit(opt,
           {{"p", path_arg},
            {"below", arr},
            {"count", below.size()},
            {"cc_total", tlt::to_string(total)}},
           t.str());
    } else if (*sym) {
      if (sym_size < 1 || sym_size % 2 == 0 || sym_size > 11)
        throw tlt::InfeasibleN("sym needs an odd --size in 1..11");
      auto members = tlt::generate_symmetric_paired(sym_size);
      const int n = (sym_size - 1) / 2;
      json j{{"size", sym_size}, {"count", members.size()},
             {"expected_count", tlt::to_string(tlt::pow2(n) * tlt::factorial(n))}};
      std::ostringstream t;
      t << members.size() << " symmetric tableaux of size " << sym_size << "\n";
      if (sym_check != "none") {
        tlt::Int oc = 0, corners_sum = 0;
        for (const tlt::Tableau& m : members) {
          oc += tlt::occupied_corner_count(m);
          corners_sum += tlt::corner_count(m);
        }
        j["oc_total"] = tlt::to_string(oc);
        j["corner_total"] = tlt::to_string(corners_sum);
        t << "occupied corners " << oc << ", corners " << corners_sum << "\n";
        if (sym_check == "all" && sym_size <= 9) {
          bool agree = [&] {
            auto filtered = tlt::generate_symmetric(sym_size);
            return std::set<tlt::Tableau>(filtered.begin(), filtered.end()) ==
                   std::set<tlt::Tableau>(members.begin(), members.end());
          }();
          j["generators_agree"] = agree;
          t << "generator cross-check " << (agree ? "ok" : "FAILED") << "\n";
          if (!agree) throw tlt::TltError("symmetric generators disagree");
        }
      }
      emit(opt, j, t.str());
    } else if (*pasep) {
      if (opt.n < 1 || opt.n > 7) throw tlt::InfeasibleN("pasep needs --n in 1..7");
      tlt::PasepParams params{parse_rat(alpha), parse_rat(beta), parse_rat(qrate)};
      auto pi = tlt::stationary(tlt::transition_matrix(opt.n, params));
      json j{{"n", opt.n}, {"stationary", tlt::distribution_to_json(pi)}};
      std::ostringstream t;
      for (const auto& [s, p] : pi.probs) t << s << "  " << tlt::to_string(p) << "\n";
      if (params.alpha == 1 && params.beta == 1 && params.q == 1) {
        auto proj = tlt::tableau_distribution(opt.n);
        j["matches_tableau_projection"] = pi == proj;
        j["expected_X"] = tlt::to_string(tlt::expected_X(opt.n));
        t << "projection cross-check " << (pi == proj ? "ok" : "FAILED") << "\n";
        t << "mean X " << tlt::to_string(tlt::expected_X(opt.n)) << "\n";
      }
      if (mc_steps > 0) {
        auto emp = tlt::mc_sample(opt.n, params, mc_steps, opt.seed);
        j["empirical"] = tlt::distribution_to_json(emp);
        j["total_variation"] = tlt::to_string(tlt::total_variation(pi, emp));
        t << "simulated " << mc_steps << " steps, total variation "
          << tlt::to_string(tlt::total_variation(pi, emp)) << "\n";
      }
      emit(opt, j, t.str());
    } else if (*verify) {
      if (opt.n == 0) opt.n = 6;
      tlt::VerificationReport r = tlt::run_suite(suite, opt.n, effective_threads(opt));
      std::cout << r.to_jsonl();
      if (!quiet) std::cout << r.to_table();
      if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) throw tlt::InvalidParams("cannot open " + opt.out);
        f << r.to_jsonl();
      }
      return r.ok() ? 0 : 1;
    }
  } catch (const tlt::InfeasibleN& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 2;
  } catch (const tlt::InvalidParams& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const tlt::DomainError& e) {
    // bad argument values that survive CLI11 validation (unknown suite name,
    // malformed code list) are usage errors, not assertion failures
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const tlt::TltError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
