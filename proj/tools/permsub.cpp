#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permsub/asymptotics.hpp"
#include "permsub/enumerate.hpp"
#include "permsub/errors.hpp"
#include "permsub/io.hpp"
#include "permsub/montecarlo.hpp"
#include "permsub/oracle.hpp"
#include "permsub/probability.hpp"
#include "permsub/series.hpp"
#include "permsub/subperm.hpp"
#include "permsub/trees.hpp"
#include "permsub/twoline.hpp"

namespace {

using namespace permsub;

// Scientific formatting straight from the 256-bit value, so magnitudes far
// outside double range still print.
std::string real_sci(const Real& v, int digits) {
  if (v == 0) return "0";
  mp_exp_t expo = 0;
  std::string mant = v.get_str(expo, 10, static_cast<std::size_t>(digits));
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  while (mant.size() < static_cast<std::size_t>(digits)) mant += '0';
  std::string out = sign + mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e";
  const long e10 = static_cast<long>(expo) - 1;
  if (e10 >= 0) out += "+";
  out += std::to_string(e10);
  return out;
}

struct ConvertArgs {
  std::string to_tree, to_perm;
  std::string bijection = "phi";
};

void run_convert(const ConvertArgs& a) {
  const bool planar = a.bijection == "psi";
  if (!a.to_tree.empty()) {
    const Permutation p = Permutation::parse(a.to_tree);
    const Tree t = planar ? psi_inverse(p) : phi_inverse(p);
    std::cout << t.str() << '\n';
    return;
  }
  const Tree t = Tree::parse(
      a.to_perm, planar ? Tree::Role::planar : Tree::Role::increasing);
  std::cout << (planar ? psi(t) : phi(t)).str() << '\n';
}

struct SubpermArgs {
  std::string perm;
  int k = 0;
  bool gamma_u_mode = false;
  bool two_line_mode = false;
};

void run_subperm(const SubpermArgs& a) {
  const Permutation host = Permutation::parse(a.perm);
  if (a.gamma_u_mode) {
    CsvWriter csv(std::cout, {"n", "gamma_u"});
    csv.row({std::to_string(host.size()), std::to_string(gamma_u(host))});
    return;
  }
  if (a.two_line_mode) {
    const TwoLineRepr r = two_line(host);
    std::string lines;
    for (bool u : r.on_upper) lines += u ? 'U' : 'D';
    CsvWriter csv(std::cout, {"n", "l", "v", "rule_label", "lines"});
    csv.row({std::to_string(host.size()), std::to_string(r.l),
             std::to_string(r.v), std::to_string(r.rule_label), lines});
    return;
  }
  CsvWriter csv(std::cout, {"k", "lo", "hi", "size", "pattern"});
  const auto emit = [&](const SubPermutation& s) {
    csv.row({std::to_string(s.generator_value), std::to_string(s.lo),
             std::to_string(s.hi), std::to_string(s.pattern.size()),
             s.pattern.str()});
  };
  if (a.k > 0) emit(sub_permutation(host, a.k));
  else
    for (const SubPermutation& s : all_sub_permutations(host)) emit(s);
}

struct CountArgs {
  std::string family;
  int j = -1, m = -1;
  int n_max = -1;
  std::string path = "linear";
  std::string out = "bfile";
  bool split = false;
};

void require_flag(bool ok, const std::string& msg) {
  if (!ok) throw CLI::ValidationError("count", msg);
}

void run_count(const CountArgs& a) {
  require_flag(a.n_max >= 0, "--n-max is required and must be >= 0");
  std::vector<std::pair<long, std::string>> rows;
  const auto push_table = [&](const std::vector<Int>& coeff, int first = 0) {
    for (std::size_t i = static_cast<std::size_t>(first); i < coeff.size(); ++i)
      rows.emplace_back(static_cast<long>(i), coeff[i].get_str());
  };
  if (a.family == "catalan") {
    push_table(catalan_coefficients(a.n_max).coeff);
  } else if (a.family == "pj" || a.family == "caterpillar-free") {
    require_flag(a.j >= 0, "--j is required for this family");
    const auto make = [&](int j) {
      if (a.path == "serial") return pj_coefficients(j, a.n_max);
      if (a.path == "parallel") return pj_coefficients_parallel(j, a.n_max);
      return pj_coefficients_linear(j, a.n_max);
    };
    push_table(a.family == "pj" ? make(a.j).coeff : make(a.j - 1).coeff);
  } else if (a.family == "lj") {
    require_flag(a.m >= 0, "--m is required for this family");
    push_table(a.path == "parallel"
                   ? lj_coefficients_parallel(a.m, a.n_max).coeff
                   : lj_coefficients(a.m, a.n_max).coeff);
  } else if (a.family == "lj-complement") {
    require_flag(a.m >= 0, "--m is required for this family");
    push_table(lj_complement_linear(a.m, a.n_max));
  } else if (a.family == "m2") {
    for (int n = 3; n <= a.n_max; ++n) {
      if (a.split) {
        const auto [x, y] = increasing_split(n);
        rows.emplace_back(n, x.get_str() + (a.out == "csv" ? "" : " ") +
                                 (a.out == "csv" ? "," + y.get_str()
                                                 : y.get_str()));
      } else {
        rows.emplace_back(n, m2_count(n).get_str());
      }
    }
  } else if (a.family == "gamma-u") {
    require_flag(a.j >= 1, "--j is required for this family");
    for (int n = 0; n <= a.n_max; ++n)
      rows.emplace_back(n, gamma_u_bounded_count(n, a.j).get_str());
  } else if (a.family == "dyck") {
    require_flag(a.j >= 0, "--j is required for this family");
    for (int n = 0; n <= a.n_max; ++n)
      rows.emplace_back(n, dyck_avoiding_count(n, a.j).get_str());
  } else if (a.family == "egamma") {
    for (int n = 1; n <= a.n_max; ++n)
      rows.emplace_back(n, format_fixed(to_double(Rat(expected_gamma(n))), 12));
  } else {
    throw CLI::ValidationError("count", "unknown --family " + a.family);
  }
  if (a.out == "csv") {
    std::vector<std::string> header = {"n", "value"};
    if (a.family == "m2" && a.split) header = {"n", "a", "b"};
    CsvWriter csv(std::cout, header);
    for (const auto& [n, value] : rows) {
      if (a.family == "m2" && a.split) {
        const std::size_t comma = value.find(',');
        csv.row({std::to_string(n), value.substr(0, comma),
                 value.substr(comma + 1)});
      } else {
        csv.row({std::to_string(n), value});
      }
    }
  } else {
    for (const auto& [n, value] : rows)
      std::cout << n << ' ' << value << '\n';
  }
}

struct AsymArgs {
  std::string family = "pj";
  int index = 1;
  long n = 100;
  int m = 0;
  bool root_ratio_mode = false;
  bool avoider_ratio_mode = false;
};

void run_asym(const AsymArgs& a) {
  if (a.root_ratio_mode) {
    require_flag(a.m >= 1, "--m is required for --root-ratio");
    const Real ra = dominant_root(RadicandFamily::lj_complement, a.m).root;
    const Real rb = dominant_root(RadicandFamily::pj, 2 * a.m).root;
    CsvWriter csv(std::cout, {"m", "a", "b", "ratio"});
    csv.row({std::to_string(a.m), format_fixed(to_double(ra), 15),
             format_fixed(to_double(rb), 15),
             format_fixed(to_double(ra / rb), 12)});
    return;
  }
  if (a.avoider_ratio_mode) {
    require_flag(a.m >= 1, "--m is required for --avoider-ratio");
    CsvWriter csv(std::cout, {"m", "n", "exact", "asymptotic"});
    csv.row({std::to_string(a.m), std::to_string(a.n),
             format_general(to_double(avoider_ratio_exact(a.m, a.n)), 12),
             format_general(to_double(avoider_ratio_asymptotic(a.m, a.n)), 12)});
    return;
  }
  const RadicandFamily fam = a.family == "lj-complement"
                                 ? RadicandFamily::lj_complement
                                 : RadicandFamily::pj;
  if (a.family != "pj" && a.family != "lj-complement")
    throw CLI::ValidationError("asym", "unknown --family " + a.family);
  const AsymptoticParams p = dominant_root(fam, a.index);
  const Real estimate = asymptotic_coefficient(fam, a.index, a.n);
  CsvWriter csv(std::cout, {"family", "index", "root", "residual", "estimate"});
  csv.row({a.family, std::to_string(a.index),
           format_fixed(to_double(p.root), 15), real_sci(p.residual, 3),
           real_sci(estimate, 9)});
}

struct ProbArgs {
  std::string pattern;
  int n = 0;
  int k = 0;
  std::string k_sweep;
  std::string seq_file;
  int terms = 20;
  std::string method = "series";
  bool conditional = false;
};

void run_prob(const ProbArgs& a) {
  const Permutation sigma = Permutation::parse(a.pattern);
  require_flag(a.n >= 1, "--n is required and must be >= 1");
  std::vector<int> ks;
  if (!a.k_sweep.empty()) {
    const std::size_t colon = a.k_sweep.find(':');
    if (colon == std::string::npos)
      throw CLI::ValidationError("prob", "--k-sweep wants FROM:TO");
    const int from = std::stoi(a.k_sweep.substr(0, colon));
    const int to = std::stoi(a.k_sweep.substr(colon + 1));
    require_flag(from >= 1 && from <= to, "--k-sweep wants 1 <= FROM <= TO");
    for (int k = from; k <= to; ++k) ks.push_back(k);
  } else if (a.k >= 1) {
    ks.push_back(a.k);
  }
  CsvWriter csv(std::cout, {"n", "k", "method", "value", "truncation"});
  const auto emit = [&](int k, const std::string& method, double value,
                        int truncation) {
    csv.row({std::to_string(a.n), std::to_string(k), method,
             format_sci(value, 9), std::to_string(truncation)});
  };
  if (a.method == "exact") {
    if (standardize(sigma.entries()) != Permutation::parse("2 1 3"))
      throw unsupported_input("exact method covers the pattern 213 only");
    if (ks.empty()) ks.push_back(2);
    for (int k : ks) {
      if (k != 2) throw unsupported_input("exact method covers k = 2 only");
      emit(k, "exact", prob_not_213_2_exact(a.n).value, 0);
    }
    return;
  }
  const AvoidanceSequence seq =
      a.seq_file.empty()
          ? AvoidanceSequence::from_oracle(
                sigma,
                std::min({a.terms, a.n, default_oracle_ceiling()}),
                default_oracle_ceiling())
          : AvoidanceSequence::load_file(a.seq_file, sigma);
  if (a.method == "asym") {
    const ProbEstimate e = prob_not_avsk_asymptotic(
        seq, a.n, std::min(a.terms, seq.available()));
    if (ks.empty()) ks.push_back(0);
    for (int k : ks) emit(k, "asym", e.value, e.truncation);
    return;
  }
  if (a.method != "series")
    throw CLI::ValidationError("prob", "unknown --method " + a.method);
  require_flag(!ks.empty(), "--k or --k-sweep is required for series");
  for (int k : ks) {
    const ProbEstimate e = a.conditional
                               ? conditional_presence(seq, a.n, k, a.terms)
                               : prob_not_avsk(seq, a.n, k, a.terms);
    emit(k, a.conditional ? "conditional" : "series", e.value, e.truncation);
  }
}

struct SimulateArgs {
  std::string pattern;
  int n = 0;
  int k = 0;
  int k_from = 0, k_to = 0;
  long samples = 100000;
  std::uint64_t seed = 0;
  int workers = 1;
  long node_cap = 10000000;
  std::string out = "csv";
};

void run_simulate(const SimulateArgs& a) {
  McConfig cfg;
  cfg.pattern = Permutation::parse(a.pattern);
  cfg.n = a.n;
  cfg.samples = a.samples;
  cfg.seed = a.seed;
  cfg.workers = a.workers;
  cfg.node_cap = a.node_cap;
  std::vector<McEstimate> rows;
  if (a.k_from >= 1 || a.k_to >= 1) {
    require_flag(a.k == 0, "--k conflicts with --k-from/--k-to");
    rows = sweep_k(cfg, a.k_from, a.k_to);
  } else {
    require_flag(a.k >= 1, "--k or --k-from/--k-to is required");
    cfg.k = a.k;
    rows.push_back(estimate_not_avsk(cfg));
  }
  if (a.out == "json") {
    nlohmann::json obj;
    obj["pattern"] = cfg.pattern.str();
    obj["rows"] = nlohmann::json::array();
    for (const McEstimate& e : rows)
      obj["rows"].push_back({{"n", e.n},
                             {"k", e.k},
                             {"estimate", e.estimate},
                             {"stderr", e.std_error},
                             {"samples", e.samples},
                             {"capped", e.capped},
                             {"seed", e.seed}});
    emit_json(std::cout, obj);
    return;
  }
  CsvWriter csv(std::cout,
                {"n", "k", "estimate", "stderr", "samples", "capped", "seed"});
  for (const McEstimate& e : rows)
    csv.row({std::to_string(e.n), std::to_string(e.k),
             format_fixed(e.estimate, 6), format_sci(e.std_error, 6),
             std::to_string(e.samples), std::to_string(e.capped),
             std::to_string(e.seed)});
}

struct OracleArgs {
  std::string check = "all";
  int n_max = default_oracle_ceiling();
};

int run_oracle(const OracleArgs& a) {
  if (a.n_max > 12)
    throw resource_limit("oracle: ceiling above 12 is not supported");
  const OracleReport report = a.check == "counts" ? run_count_checks(a.n_max)
                                                  : run_oracle_suite(a.n_max);
  for (const CheckResult& c : report.checks)
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << " - " << c.detail
              << '\n';
  const int total = static_cast<int>(report.checks.size());
  std::cout << (report.all_passed() ? "OK " : "FAIL ") << report.passed_count()
            << "/" << total << " checks passed\n";
  return report.all_passed() ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation sub-permutation toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  ConvertArgs conv;
  CLI::App* convert = app.add_subcommand(
      "convert", "tree <-> permutation under the two bijections");
  convert->add_option("--to-tree", conv.to_tree,
                      "permutation to map to its tree");
  convert->add_option("--to-perm", conv.to_perm,
                      "tree text to map to its permutation");
  convert->add_option("--bijection", conv.bijection,
                      "phi (increasing trees) or psi (planar trees)")
      ->check(CLI::IsMember({"phi", "psi"}));
  convert->callback([&] {
    if (conv.to_tree.empty() == conv.to_perm.empty())
      throw CLI::ValidationError("convert",
                                 "exactly one of --to-tree/--to-perm");
    run_convert(conv);
  });

  SubpermArgs sub;
  CLI::App* subperm =
      app.add_subcommand("subperm", "sub-permutation windows and statistics");
  subperm->add_option("--perm", sub.perm, "host permutation")->required();
  subperm->add_option("--k", sub.k, "single rank; all ranks when omitted");
  subperm->add_flag("--gamma-u", sub.gamma_u_mode,
                    "largest non-prefix decreasing sub-permutation");
  subperm->add_flag("--two-line", sub.two_line_mode,
                    "two-line drawing and succession label");
  subperm->callback([&] { run_subperm(sub); });

  CountArgs cnt;
  CLI::App* count =
      app.add_subcommand("count", "exact coefficient tables by family");
  count->add_option("--family", cnt.family,
                    "catalan|pj|caterpillar-free|lj|lj-complement|m2|"
                    "gamma-u|dyck|egamma")
      ->required();
  count->add_option("--j", cnt.j, "pj/caterpillar-free/gamma-u/dyck index");
  count->add_option("--m", cnt.m, "lj family index");
  count->add_option("--n-max", cnt.n_max, "last size to emit")->required();
  count->add_option("--path", cnt.path, "serial|parallel|linear")
      ->check(CLI::IsMember({"serial", "parallel", "linear"}));
  count->add_option("--out", cnt.out, "bfile|csv")
      ->check(CLI::IsMember({"bfile", "csv"}));
  count->add_flag("--split", cnt.split, "m2: emit both split counts");
  count->callback([&] { run_count(cnt); });

  AsymArgs asym;
  CLI::App* asy =
      app.add_subcommand("asym", "dominant roots and growth estimates");
  asy->add_option("--family", asym.family, "pj|lj-complement");
  asy->add_option("--index", asym.index, "family index");
  asy->add_option("--n", asym.n, "size for the coefficient estimate");
  asy->add_option("--m", asym.m, "index for the ratio modes");
  asy->add_flag("--root-ratio", asym.root_ratio_mode,
                "emit the paired-root ratio for --m");
  asy->add_flag("--avoider-ratio", asym.avoider_ratio_mode,
                "emit exact vs asymptotic avoider ratio at (--m, --n)");
  asy->callback([&] { run_asym(asym); });

  ProbArgs prob;
  CLI::App* pr = app.add_subcommand("prob", "pattern presence probabilities");
  pr->add_option("--pattern", prob.pattern, "pattern sigma")->required();
  pr->add_option("--n", prob.n, "host size")->required();
  pr->add_option("--k", prob.k, "single rank");
  pr->add_option("--k-sweep", prob.k_sweep, "rank range FROM:TO");
  pr->add_option("--seq-file", prob.seq_file,
                 "avoidance sequence file (lines 'i count')");
  pr->add_option("--terms", prob.terms, "series truncation (default 20)");
  pr->add_option("--method", prob.method, "exact|asym|series")
      ->check(CLI::IsMember({"exact", "asym", "series"}));
  pr->add_flag("--conditional", prob.conditional,
               "condition on the sub-permutation avoiding sigma");
  pr->callback([&] { run_prob(prob); });

  SimulateArgs sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "seeded Monte Carlo estimates");
  simulate->add_option("--pattern", sim.pattern, "pattern sigma")->required();
  simulate->add_option("--n", sim.n, "host size")->required();
  simulate->add_option("--k", sim.k, "single rank");
  simulate->add_option("--k-from", sim.k_from, "sweep start");
  simulate->add_option("--k-to", sim.k_to, "sweep end");
  simulate->add_option("--samples", sim.samples, "samples per estimate");
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--workers", sim.workers, "worker threads");
  simulate->add_option("--node-cap", sim.node_cap,
                       "matcher work cap per sample");
  simulate->add_option("--out", sim.out, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  simulate->callback([&] { run_simulate(sim); });

  OracleArgs orc;
  CLI::App* oracle =
      app.add_subcommand("oracle", "cross-validation suite");
  oracle->add_option("--check", orc.check, "all|counts")
      ->check(CLI::IsMember({"all", "counts"}));
  oracle->add_option("--n-max", orc.n_max, "exhaustive ceiling (default 11)");
  oracle->callback([&] { exit_code = run_oracle(orc); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const resource_limit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const unsupported_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const numeric_failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const undefined_conditional& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}
