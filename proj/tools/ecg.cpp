#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ecg/generators.hpp"
#include "ecg/io.hpp"
#include "ecg/oracle.hpp"
#include "ecg/rotation.hpp"
#include "ecg/verify.hpp"
#include "ecg/yeo.hpp"

namespace {

// Exit codes: 0 ok/pass, 1 usage, 2 fail, 3 inconclusive, 4 counterexample
// found, 10 malformed file, 11 invalid tuple or positions, 12 bad
// parameters.
constexpr int kExitUsage = 1;
constexpr int kExitFail = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitCounterexample = 4;
constexpr int kExitMalformedFile = 10;
constexpr int kExitInvalidTuple = 11;
constexpr int kExitBadParameters = 12;

int exit_code_for(const ecg::error& e) {
  switch (e.code()) {
    case ecg::Errc::parse_error:
      return kExitMalformedFile;
    case ecg::Errc::bad_parameters:
    case ecg::Errc::empty_graph:
    case ecg::Errc::edgeless_graph:
      return kExitBadParameters;
    case ecg::Errc::contract_violation:
      return kExitFail;
    default:
      return kExitInvalidTuple;
  }
}

ecg::EdgeColouredGraph load(const std::string& file) {
  if (file.empty() || file == "-") return ecg::read_ecg(std::cin);
  return ecg::read_ecg_file(file);
}

void emit(const ecg::EdgeColouredGraph& g, const std::string& out) {
  if (out.empty() || out == "-")
    ecg::write_ecg(std::cout, g);
  else
    ecg::write_ecg_file(out, g);
}

ecg::Path parse_tuple(const std::string& s) {
  ecg::Path p;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      p.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ecg::error(ecg::Errc::invalid_path, "bad tuple entry '" + tok + "'");
    }
  }
  if (p.empty()) throw ecg::error(ecg::Errc::invalid_path, "empty tuple");
  return p;
}

std::string tuple_string(const std::vector<ecg::Vertex>& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

long long arg_int(const std::vector<std::string>& args, std::size_t i, const char* name) {
  if (i >= args.size())
    throw ecg::error(ecg::Errc::bad_parameters, std::string("missing parameter ") + name);
  try {
    return std::stoll(args[i]);
  } catch (const std::exception&) {
    throw ecg::error(ecg::Errc::bad_parameters,
                     std::string("parameter ") + name + " must be an integer");
  }
}

int run_gen(const std::string& family, const std::vector<std::string>& args,
            const std::string& out) {
  ecg::EdgeColouredGraph g;
  if (family == "tilde") {
    g = ecg::gen_tilde(static_cast<int>(arg_int(args, 0, "d")),
                       static_cast<int>(arg_int(args, 1, "p")));
  } else if (family == "hat") {
    g = ecg::gen_hat(static_cast<int>(arg_int(args, 0, "d")),
                     static_cast<int>(arg_int(args, 1, "n")));
  } else if (family == "recursive") {
    g = ecg::gen_recursive(static_cast<int>(arg_int(args, 0, "d")),
                           static_cast<int>(arg_int(args, 1, "k")),
                           static_cast<int>(arg_int(args, 2, "p")));
  } else if (family == "mono-counterexample") {
    g = ecg::gen_counterexample_mono(static_cast<int>(arg_int(args, 0, "k")),
                                     static_cast<int>(arg_int(args, 1, "delta")));
  } else if (family == "rainbow-complete") {
    g = ecg::gen_rainbow_complete(static_cast<int>(arg_int(args, 0, "n")));
  } else if (family == "proper-complete") {
    g = ecg::gen_proper_complete(static_cast<int>(arg_int(args, 0, "n"))).graph;
  } else if (family == "random") {
    double density = 0.25;
    if (args.size() > 4) density = std::stod(args[4]);
    g = ecg::gen_random_min_cdeg(static_cast<int>(arg_int(args, 0, "n")),
                                 static_cast<int>(arg_int(args, 1, "d")),
                                 static_cast<int>(arg_int(args, 2, "colours")),
                                 static_cast<std::uint64_t>(arg_int(args, 3, "seed")), density);
  } else {
    throw ecg::error(ecg::Errc::bad_parameters, "unknown family " + family);
  }
  emit(g, out);
  return 0;
}

int run_check(const std::string& what, const std::string& file, std::uint64_t budget) {
  ecg::SearchOptions opts;
  opts.budget = budget;
  ecg::VerificationReport r;
  if (what.rfind("prop4:", 0) == 0) {
    ecg::Path nums = parse_tuple(what.substr(6));
    if (nums.size() != 3)
      throw ecg::error(ecg::Errc::bad_parameters, "prop4 needs d,k,p");
    r = ecg::check_prop_upper(nums[0], nums[1], nums[2], opts);
  } else {
    ecg::EdgeColouredGraph g = load(file);
    std::string inst = file.empty() || file == "-" ? "stdin" : file;
    if (what == "thm2") {
      r = ecg::check_thm_2dplus1(g, opts);
    } else if (what.rfind("thm3:", 0) == 0) {
      r = ecg::check_thm_kd(g, std::stoi(what.substr(5)), opts);
    } else if (what == "cor3") {
      r = ecg::check_cor_k3(g, opts);
    } else if (what == "thm6") {
      r = ecg::check_thm_path(g, opts);
    } else if (what == "thm8") {
      r = ecg::check_thm_mono(g, opts);
    } else {
      throw ecg::error(ecg::Errc::bad_parameters, "unknown check " + what);
    }
    r.instance = inst;
  }
  std::cout << ecg::to_json_line(r) << "\n";
  if (r.verdict == ecg::Verdict::pass) return 0;
  if (r.verdict == ecg::Verdict::fail) return kExitFail;
  return kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge-coloured graph toolkit: generators, exact searches, rotations, "
               "structure certificates and theorem checks over the ECG v1 format"};
  app.require_subcommand(1);

  std::string out;
  std::string file;
  std::string path_arg;
  std::uint64_t budget = 0;
  std::size_t cap = 100000;
  bool prime = false;
  bool positional = false;
  std::vector<std::string> ops;

  auto* gen = app.add_subcommand("gen", "generate a graph family");
  std::string family;
  std::vector<std::string> gen_args;
  gen->add_option("family", family,
                  "tilde|hat|recursive|mono-counterexample|rainbow-complete|proper-complete|random")
      ->required();
  gen->add_option("params", gen_args, "family parameters");
  gen->add_option("-o,--output", out, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "exact longest path/cycle search");
  std::string oracle_kind;
  oracle->add_option("kind", oracle_kind, "path|cycle")->required();
  oracle->add_option("file", file, "input file (default stdin)");
  oracle->add_option("--budget", budget, "node expansion budget (0 = unlimited)");

  auto* rotate = app.add_subcommand("rotate", "apply rotations/reflection to a tuple");
  rotate->add_option("file", file, "input file (unused with --positional)");
  rotate->add_option("--path", path_arg, "comma-separated tuple")->required();
  rotate->add_option("--op", ops, "f:i | g:j | reflect (repeatable, applied in order)")
      ->required();
  rotate->add_flag("--positional", positional, "apply as pure permutations, ignore colours");

  auto* closure = app.add_subcommand("closure", "rotation/reflection closure of a tuple");
  closure->add_option("file", file, "input file (default stdin)");
  closure->add_option("--path", path_arg, "comma-separated tuple")->required();
  closure->add_option("--cap", cap, "member cap");
  closure->add_flag("--prime", prime, "rotations only, no reflection");

  auto* yeo = app.add_subcommand("yeo", "cycle-freeness certificate or cycle witness");
  yeo->add_option("file", file, "input file (default stdin)");

  auto* check = app.add_subcommand("check", "verify a theorem bound on an instance");
  std::string what;
  check->add_option("what", what, "thm2|thm3:k|cor3|thm6|thm8|prop4:d,k,p")->required();
  check->add_option("file", file, "input file (default stdin; unused for prop4)");
  check->add_option("--budget", budget, "node expansion budget");

  auto* hunt = app.add_subcommand("hunt", "bounded counterexample search");
  std::string conj;
  ecg::HuntParams hp;
  hunt->add_option("which", conj, "conj5|conj7")->required();
  hunt->add_option("--max-n", hp.max_n, "largest instance size");
  hunt->add_option("--max-d", hp.max_d, "largest minimum colour degree");
  hunt->add_option("--k", hp.k, "cycle parameter for conj5");
  hunt->add_option("--seed", hp.seed, "random stream seed");
  hunt->add_option("--budget", hp.budget, "per-instance search budget");
  hunt->add_option("--instances", hp.random_instances, "random instance count");
  hunt->add_option("--bound-offset", hp.bound_offset,
                   "added to the conjectured bound (for harness self-tests)");
  hunt->add_option("-o,--output", out, "where to write a counterexample");

  auto* dot = app.add_subcommand("export-dot", "write the graph in DOT format");
  dot->add_option("file", file, "input file (default stdin)");
  dot->add_option("-o,--output", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(family, gen_args, out);

    if (oracle->parsed()) {
      ecg::EdgeColouredGraph g = load(file);
      ecg::SearchOptions opts;
      opts.budget = budget;
      if (oracle_kind == "path") {
        ecg::PathSearchResult r = ecg::longest_pc_path(g, opts);
        std::cout << "length " << r.length() << ", " << (r.exact ? "exact" : "inexact")
                  << ", path " << tuple_string(r.path) << "\n";
      } else if (oracle_kind == "cycle") {
        ecg::CycleSearchResult r = ecg::longest_pc_cycle(g, opts);
        if (r.cycle)
          std::cout << "length " << r.length() << ", " << (r.exact ? "exact" : "inexact")
                    << ", cycle " << tuple_string(*r.cycle) << "\n";
        else
          std::cout << "no cycle, " << (r.exact ? "exact" : "inexact") << "\n";
      } else {
        throw ecg::error(ecg::Errc::bad_parameters, "oracle kind must be path or cycle");
      }
      return 0;
    }

    if (rotate->parsed()) {
      ecg::Path p = parse_tuple(path_arg);
      ecg::EdgeColouredGraph g;
      if (!positional) g = load(file);
      for (const std::string& op : ops) {
        if (op == "reflect") {
          p = ecg::reflect(p);
        } else if (op.rfind("f:", 0) == 0) {
          int i = std::stoi(op.substr(2));
          p = positional ? ecg::rotate_f_positional(p, i) : ecg::rotate_f(g, p, i);
        } else if (op.rfind("g:", 0) == 0) {
          int j = std::stoi(op.substr(2));
          p = positional ? ecg::rotate_g_positional(p, j) : ecg::rotate_g(g, p, j);
        } else {
          throw ecg::error(ecg::Errc::bad_parameters, "unknown op " + op);
        }
      }
      std::cout << tuple_string(p) << "\n";
      return 0;
    }

    if (closure->parsed()) {
      ecg::EdgeColouredGraph g = load(file);
      ecg::Path p = parse_tuple(path_arg);
      ecg::ClosureResult r =
          prime ? ecg::closure_Rprime(g, p, cap) : ecg::closure_R(g, p, cap);
      std::cout << (prime ? "|R'(P)| = " : "|R(P)| = ") << r.size
                << (r.truncated ? " (truncated)" : "") << "\n";
      std::cout << "X(P) = {" << tuple_string({r.first_endpoints.begin(), r.first_endpoints.end()})
                << "}\n";
      std::cout << "Y(P) = {" << tuple_string({r.last_endpoints.begin(), r.last_endpoints.end()})
                << "}\n";
      return 0;
    }

    if (yeo->parsed()) {
      ecg::EdgeColouredGraph g = load(file);
      ecg::AcyclicityCertificate cert = ecg::certify_acyclic(g);
      if (cert.acyclic) {
        std::cout << "acyclic: no properly coloured cycle\n";
        for (const auto& step : cert.chain) {
          std::cout << "peel z=" << step.z << ":";
          for (const auto& [comp, c] : step.components)
            std::cout << " {" << tuple_string(comp) << "}#" << c;
          std::cout << "\n";
        }
        return 0;
      }
      std::cout << "cycle " << tuple_string(*cert.cycle) << "\n";
      return 0;
    }

    if (check->parsed()) return run_check(what, file, budget);

    if (hunt->parsed()) {
      ecg::HuntResult r = ecg::conjecture_search(conj, hp);
      if (!r.found) {
        std::cout << "no counterexample in " << r.checked << " instances\n";
        return 0;
      }
      std::cout << ecg::to_json_line(r.report) << "\n";
      if (!out.empty()) ecg::write_ecg_file(out, r.counterexample);
      return kExitCounterexample;
    }

    if (dot->parsed()) {
      ecg::EdgeColouredGraph g = load(file);
      if (out.empty() || out == "-") {
        ecg::write_dot(std::cout, g);
      } else {
        std::ofstream os(out);
        if (!os) throw ecg::error(ecg::Errc::parse_error, "cannot open " + out);
        ecg::write_dot(os, g);
      }
      return 0;
    }
  } catch (const ecg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
