#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "arens/corpus.hpp"
#include "arens/derivation.hpp"
#include "arens/rewrite.hpp"
#include "arens/structures_io.hpp"
#include "arens/tensor_io.hpp"
#include "arens/word.hpp"

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (const char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

json make_report(const std::string& command) {
  return {{"schema", 1},
          {"command", command},
          {"checks", json::array()},
          {"pass", true}};
}

void add_check(json& rep, const std::string& name, bool ok, double residual) {
  rep["checks"].push_back(
      {{"name", name}, {"verdict", ok}, {"residual", residual}});
  rep["pass"] = rep["pass"].get<bool>() && ok;
}

int emit_report(const json& rep, bool json_mode) {
  if (json_mode) {
    std::cout << rep.dump(1) << "\n";
  } else {
    int failed = 0;
    for (const json& c : rep["checks"]) {
      const bool ok = c["verdict"].get<bool>();
      failed += ok ? 0 : 1;
      std::cout << (ok ? "[ ok ] " : "[FAIL] ") << c["name"].get<std::string>()
                << " (residual " << fmt(c["residual"].get<double>()) << ")\n";
    }
    const auto total = rep["checks"].size();
    if (failed == 0)
      std::cout << total << " check(s), all passed\n";
    else
      std::cout << failed << " of " << total << " check(s) failed\n";
  }
  return rep["pass"].get<bool>() ? 0 : 1;
}

struct Options {
  bool json_mode = false;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  int depth = 12;
};

int run_sig(const std::string& expr, const std::string& spaces_arg,
            const Options& opt) {
  int dims[4] = {2, 2, 2, 2};  // X, Y, Z, W
  static const std::string names[4] = {"X", "Y", "Z", "W"};
  if (!spaces_arg.empty()) {
    for (const std::string& part : split_commas(spaces_arg)) {
      const std::size_t eq = part.find('=');
      if (eq == std::string::npos)
        throw arens::core::InputError("--spaces entry '" + part +
                                      "' is not of the form name=dim");
      const std::string name = part.substr(0, eq);
      int* slot = nullptr;
      for (int i = 0; i < 4; ++i)
        if (name == names[i]) slot = &dims[i];
      if (slot == nullptr)
        throw arens::core::InputError("--spaces name '" + name +
                                      "' is not one of X, Y, Z, W");
      try {
        *slot = std::stoi(part.substr(eq + 1));
      } catch (const std::exception&) {
        throw arens::core::InputError("--spaces entry '" + part +
                                      "' has a non-integer dim");
      }
      if (*slot < 1)
        throw arens::core::InputError("--spaces dim for " + name +
                                      " must be positive");
    }
  }
  const arens::words::Signature base{
      {{"X", 0, dims[0]}, {"Y", 0, dims[1]}, {"Z", 0, dims[2]}},
      {"W", 0, dims[3]}};
  const std::string shown = arens::words::show(
      arens::words::infer_signature(base, arens::words::parse(expr)));
  if (opt.json_mode) {
    const json rep = {{"schema", 1}, {"command", "sig"}, {"signature", shown}};
    std::cout << rep.dump(1) << "\n";
  } else {
    std::cout << shown << "\n";
  }
  return 0;
}

int run_equiv(const std::string& w1, const std::string& w2, bool has_assume,
              const std::string& assume, const Options& opt) {
  arens::words::RegularityAssumptions as;
  if (has_assume) as = arens::words::RegularityAssumptions::of(split_commas(assume));
  const arens::words::Equivalence verdict = arens::words::equivalent(
      arens::words::parse(w1), arens::words::parse(w2), as, opt.depth);
  const bool eq = verdict == arens::words::Equivalence::equivalent;
  const std::string text = eq ? "EQUIVALENT" : "NOT_SHOWN";
  if (opt.json_mode) {
    const json rep = {{"schema", 1},
                      {"command", "equiv"},
                      {"verdict", text},
                      {"pass", eq}};
    std::cout << rep.dump(1) << "\n";
  } else {
    std::cout << text << "\n";
  }
  return eq ? 0 : 1;
}

int run_check(const std::string& kind, const std::string& file, int case_id,
              const Options& opt) {
  json rep = make_report("check " + kind);
  if (kind == "regular") {
    const arens::core::MultiTensor t = arens::core::load_tensor_file(file);
    const arens::core::RegularityReport r = arens::core::is_regular(t, opt.tol);
    add_check(rep, "regular", r.regular, r.residual);
  } else if (kind == "compose") {
    const arens::core::ComposePair p = arens::core::load_compose_pair(file);
    const arens::core::MultiTensor h2 = arens::core::adjoint_n(p.lin, 2);
    const arens::core::MultiTensor hf =
        arens::core::compose_linear_after(p.lin, p.tri);
    const auto word = [](const char* w, const arens::core::MultiTensor& t) {
      return arens::words::tensor_semantics(arens::words::parse_letters(w), t);
    };
    const double r1 = arens::core::max_abs_difference(
        arens::core::compose_linear_after(h2, arens::core::adjoint_n(p.tri, 4)),
        arens::core::adjoint_n(hf, 4));
    add_check(rep, "h** o f**** == (h o f)****", r1 <= opt.tol, r1);
    const double r2 = arens::core::max_abs_difference(
        arens::core::compose_linear_after(h2, word("r****r", p.tri)),
        word("r****r", hf));
    add_check(rep, "h** o f^r****r == (h o f)^r****r", r2 <= opt.tol, r2);
    const arens::core::RegularityReport rf = arens::core::is_regular(p.tri, opt.tol);
    add_check(rep, "f regular", rf.regular, rf.residual);
    const arens::core::RegularityReport rh = arens::core::is_regular(hf, opt.tol);
    add_check(rep, "h o f regular", rh.regular, rh.residual);
  } else if (kind == "triderivation") {
    const arens::structures::DerivationFile df =
        arens::structures::load_derivation_file(file);
    const arens::structures::DerivationReport r =
        arens::structures::is_tri_derivation(df.candidate, df.module, opt.tol);
    for (int i = 0; i < 3; ++i)
      add_check(rep, "leibniz identity " + std::to_string(i + 1),
                r.residuals[static_cast<std::size_t>(i)] <= opt.tol,
                r.residuals[static_cast<std::size_t>(i)]);
    const arens::structures::ArensCase ac =
        arens::structures::ArensCase::of(case_id);
    const arens::structures::DerivationReport r4 =
        arens::structures::fourth_adjoint_check(df.candidate, df.module, ac,
                                                opt.tol);
    for (int i = 0; i < 3; ++i)
      add_check(rep,
                "fourth adjoint leibniz identity " + std::to_string(i + 1) +
                    " (" + ac.show() + ")",
                r4.residuals[static_cast<std::size_t>(i)] <= opt.tol,
                r4.residuals[static_cast<std::size_t>(i)]);
    for (const arens::structures::ConditionReport& c :
         arens::structures::fourth_adjoint_conditions(ac, df.candidate,
                                                      df.module, opt.tol))
      add_check(rep, c.label, c.ok, c.residual);
  } else if (kind == "group-suite") {
    const arens::corpus::CayleyTable t = arens::corpus::load_cayley(file);
    try {
      arens::corpus::validate_cayley(t);
      add_check(rep, "cayley axioms", true, 0.0);
    } catch (const arens::core::InputError& e) {
      std::cerr << "cayley axioms: " << e.what() << "\n";
      add_check(rep, "cayley axioms", false, 1.0);
      return emit_report(rep, opt.json_mode);
    }
    const arens::structures::AlgebraStruct alg = arens::corpus::group_algebra(t);
    const double ra = arens::structures::associativity_residual(alg.product);
    add_check(rep, "product associativity", ra <= opt.tol, ra);
    const arens::core::RegularityReport rc =
        arens::core::is_regular(arens::corpus::conv_trilinear(t), opt.tol);
    add_check(rep, "convolution regular", rc.regular, rc.residual);
    const double d1 = arens::core::max_abs_difference(
        arens::structures::first_arens(alg.product), alg.product);
    add_check(rep, "first arens product equals product", d1 <= opt.tol, d1);
    const double d2 = arens::core::max_abs_difference(
        arens::structures::second_arens(alg.product), alg.product);
    add_check(rep, "second arens product equals product", d2 <= opt.tol, d2);
  } else {
    throw arens::core::InputError("unknown check kind " + kind);
  }
  return emit_report(rep, opt.json_mode);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculus for iterated adjoints of bounded multilinear maps"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_mode, "emit a machine-readable JSON report");
  app.add_option("--tol", opt.tol, "numeric tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "seed for randomized operations");
  app.add_option("--depth", opt.depth,
                 "rewrite search depth bound (default 12)")
      ->check(CLI::Range(1, 1000000));

  CLI::App* sig = app.add_subcommand(
      "sig", "print the full signature of an iterated-adjoint word");
  std::string expr;
  std::string spaces_arg;
  sig->add_option("expr", expr, "word over a trilinear base, e.g. f***r*")
      ->required();
  sig->add_option("--spaces", spaces_arg,
                  "base dims as name=dim pairs, e.g. X=2,Y=3,Z=2,W=2");

  CLI::App* eqc = app.add_subcommand(
      "equiv", "decide word equivalence under regularity assumptions");
  std::string w1, w2, assume;
  eqc->add_option("w1", w1, "first word")->required();
  eqc->add_option("w2", w2, "second word")->required();
  CLI::Option* assume_opt = eqc->add_option(
      "--assume", assume,
      "comma list of assumed-regular prefix words; an empty entry is the "
      "base map itself, \"all\" assumes every prefix");

  CLI::App* chk =
      app.add_subcommand("check", "run a check suite against a file");
  std::string kind, file;
  int case_id = 1;
  chk->add_option("kind", kind, "one of regular, compose, triderivation, group-suite")
      ->required()
      ->check(CLI::IsMember({"regular", "compose", "triderivation", "group-suite"}));
  chk->add_option("file", file, "input file (JSON tensor formats or Cayley text)")
      ->required();
  chk->add_option("--case", case_id, "bidual product case 1..8 (default 1)")
      ->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sig->parsed()) return run_sig(expr, spaces_arg, opt);
    if (eqc->parsed())
      return run_equiv(w1, w2, assume_opt->count() > 0, assume, opt);
    return run_check(kind, file, case_id, opt);
  } catch (const arens::core::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const arens::core::StructuralError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
