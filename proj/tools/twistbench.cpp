#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twistbench/congruence.hpp"
#include "twistbench/corpus.hpp"
#include "twistbench/error.hpp"
#include "twistbench/search.hpp"
#include "twistbench/spec_io.hpp"
#include "twistbench/suites.hpp"
#include "twistbench/twist.hpp"

using namespace twistbench;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out.good()) throw Error("cannot write '" + path + "'");
  out << text;
}

Algebra load(const std::string& path, bool lenient) {
  return load_algebra(read_file(path), lenient);
}

// Env-provided default for every size cap; flags still win.
int env_max_size(int fallback) {
  if (const char* s = std::getenv("TWISTBENCH_MAX_SIZE")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return fallback;
}

void print_report(std::ostream& os, const Algebra& a, const CheckReport& rep) {
  if (rep.pass) {
    os << "pass";
    if (!rep.note.empty()) os << " (" << rep.note << ")";
    os << "\n";
    return;
  }
  os << "fail";
  if (rep.witness) {
    os << ": ";
    if (!rep.witness->clause.empty()) os << "(" << rep.witness->clause << ") ";
    os << describe_witness(a, *rep.witness);
  }
  if (!rep.note.empty()) os << " [" << rep.note << "]";
  os << "\n";
  for (const Witness& w : rep.all_witnesses) {
    os << "  witness";
    if (!w.clause.empty()) os << " (" << w.clause << ")";
    os << ": " << describe_witness(a, w) << "\n";
  }
}

// How the twist/center result is written to -o files: fully explicit tables,
// no kind claim, so any later subcommand can run any suite on it.
std::string result_spec_text(const Algebra& a) {
  return write_spec(spec_from_algebra(a, "raw"));
}

struct Options {
  std::string file;
  std::string out;
  std::string suite_id;
  std::string mode = "subalgebra";
  std::string filter;
  std::string formula;
  bool all_witnesses = false;
  bool lenient = false;
  bool json = false;
  bool oracle = false;
  int max_size = 0;
};

int do_check(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  suite(o.suite_id);  // validate the id before running anything
  CheckReport rep = check_suite(a, o.suite_id, o.all_witnesses);
  if (o.json) {
    std::cout << export_json(rep, &a);
  } else {
    std::cout << "suite '" << o.suite_id << "' on '" << a.name << "': ";
    print_report(std::cout, a, rep);
  }
  return rep.pass ? 0 : 1;
}

int do_twist(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  TwistAlgebra tw = build_twist(a);
  if (!o.out.empty()) write_file(o.out, result_spec_text(tw.result));
  if (o.json) {
    std::cout << export_json(tw);
  } else {
    std::cout << tw.result.name << " has " << tw.pairs.size() << " pairs:\n";
    for (int i = 0; i < tw.result.size(); ++i)
      std::cout << tw.result.label(i) << "\n";
  }
  return 0;
}

int do_center(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  CenterAlgebra c = center_algebra(a);
  if (!o.out.empty()) write_file(o.out, result_spec_text(c.result));
  if (o.json) {
    std::cout << export_json(c.result);
  } else {
    std::cout << c.result.name << " has " << c.result.size()
              << " elements:\n";
    for (int i = 0; i < c.result.size(); ++i)
      std::cout << c.result.label(i) << "\n";
  }
  return 0;
}

int do_equiv(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  nlohmann::json j;
  std::ostringstream human;
  if (a.himp) {
    Homomorphism al = alpha(a);
    human << "alpha: '" << a.name << "' is isomorphic to '"
          << al.target.name << "'\n";
    TwistAlgebra tw = build_twist(a);
    Homomorphism be = beta(tw.result);
    human << "beta: '" << tw.result.name << "' is isomorphic to '"
          << be.target.name << "'\n";
    j["alpha"] = {{"source", a.name}, {"target", al.target.name}};
    j["beta"] = {{"source", tw.result.name}, {"target", be.target.name}};
  } else {
    Homomorphism be = beta(a);
    human << "beta: '" << a.name << "' is isomorphic to '"
          << be.target.name << "'\n";
    CenterAlgebra c = center_algebra(a);
    Homomorphism al = alpha(c.result);
    human << "alpha: '" << c.result.name << "' is isomorphic to '"
          << al.target.name << "'\n";
    j["beta"] = {{"source", a.name}, {"target", be.target.name}};
    j["alpha"] = {{"source", c.result.name}, {"target", al.target.name}};
  }
  j["verdict"] = "pass";
  if (o.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human.str() << "both isomorphisms verified\n";
  return 0;
}

int do_congruences(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  ConLattice con = enumerate_congruences(a, o.oracle);
  if (o.json) {
    std::cout << export_json(con);
  } else {
    std::cout << "Con(" << a.name << ") has " << con.congruences.size()
              << " congruences:\n";
    for (const Congruence& th : con.congruences)
      std::cout << th.to_string() << "\n";
  }
  return 0;
}

int do_con_iso(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  CheckReport rep = check_con_iso(a);
  if (o.json) {
    std::cout << export_json(rep);
  } else {
    std::cout << "congruence transfer for '" << a.name << "': ";
    print_report(std::cout, a, rep);
  }
  return rep.pass ? 0 : 1;
}

int do_search_quantifiers(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  SearchMode mode = search_mode_from_name(o.mode);
  int cap = o.max_size > 0 ? o.max_size : env_max_size(6);
  auto found = enumerate_quantifier_pairs(a, mode, o.filter, cap);
  if (o.json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const QuantifierAssignment& qa : found) {
      nlohmann::json e;
      nlohmann::json ex = nlohmann::json::array();
      nlohmann::json fa = nlohmann::json::array();
      for (int v : qa.exists) ex.push_back(a.label(v));
      for (int v : qa.forall) fa.push_back(a.label(v));
      e["exists"] = std::move(ex);
      e["forall"] = std::move(fa);
      e["provenance"] = qa.provenance;
      arr.push_back(std::move(e));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << found.size() << " quantifier assignments on '" << a.name
              << "' pass '" << o.filter << "':\n";
    for (const QuantifierAssignment& qa : found) {
      std::cout << "E:";
      for (int v : qa.exists) std::cout << " " << a.label(v);
      std::cout << "  A:";
      for (int v : qa.forall) std::cout << " " << a.label(v);
      std::cout << "  (" << qa.provenance << ")\n";
    }
  }
  return 0;
}

int do_search_counterexample(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  Formula f = parse_formula(o.formula);
  auto w = find_counterexample(a, f);
  CheckReport rep = w ? CheckReport::fail(*w) : CheckReport::ok();
  if (o.json) {
    std::cout << export_json(rep, &a);
  } else if (w) {
    std::cout << "counterexample: " << describe_witness(a, *w) << "\n";
  } else {
    std::cout << "no counterexample on '" << a.name << "'\n";
  }
  return w ? 1 : 0;
}

int do_corpus(const Options& o) {
  suite(o.suite_id);
  int max_size = o.max_size > 0 ? o.max_size : env_max_size(5);
  auto members = monadic_godel_corpus(max_size);
  nlohmann::json arr = nlohmann::json::array();
  bool all_pass = true;
  for (const Algebra& g : members) {
    TwistAlgebra tw = build_twist(g);
    CheckReport rep = check_suite(tw.result, o.suite_id);
    all_pass = all_pass && rep.pass;
    if (o.json) {
      nlohmann::json e;
      e["algebra"] = g.name;
      e["twist"] = tw.result.name;
      e["verdict"] = rep.pass ? "pass" : "fail";
      if (rep.witness)
        e["witness"] = describe_witness(tw.result, *rep.witness);
      arr.push_back(std::move(e));
    } else {
      std::cout << g.name << " -> " << tw.result.name << ": "
                << (rep.pass ? "pass" : "fail");
      if (!rep.pass && rep.witness)
        std::cout << " at (" << rep.witness->clause << ") "
                  << describe_witness(tw.result, *rep.witness);
      std::cout << "\n";
    }
  }
  if (o.json) {
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << members.size() << " twists checked against '" << o.suite_id
              << "': " << (all_pass ? "all pass" : "failures found") << "\n";
  }
  return all_pass ? 0 : 1;
}

int do_export(const Options& o) {
  Algebra a = load(o.file, o.lenient);
  std::cout << export_json(a);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra workbench: suites, twists, centers, "
               "congruences and quantifier search"};
  app.require_subcommand(1);
  Options o;
  int rc = 0;
  auto act = [&rc](int (*fn)(const Options&), const Options& opts) {
    return [&rc, fn, &opts] { rc = fn(opts); };
  };

  auto add_common = [&o](CLI::App* sub, bool with_file = true) {
    if (with_file)
      sub->add_option("file", o.file, "input .alg file")->required();
    sub->add_flag("--json", o.json, "emit canonical JSON");
    sub->add_flag("--lenient", o.lenient,
                  "keep going when the file's declared kind fails");
  };

  CLI::App* check = app.add_subcommand("check", "run an axiom suite");
  add_common(check);
  check->add_option("--suite", o.suite_id, "suite id")->required();
  check->add_flag("--all-witnesses", o.all_witnesses,
                  "report every witness, not just the first");
  check->callback(act(do_check, o));

  CLI::App* twist = app.add_subcommand("twist", "build the twist algebra");
  add_common(twist);
  twist->add_option("-o,--out", o.out, "write the result as a .alg file");
  twist->callback(act(do_twist, o));

  CLI::App* center = app.add_subcommand("center", "extract the center");
  add_common(center);
  center->add_option("-o,--out", o.out, "write the result as a .alg file");
  center->callback(act(do_center, o));

  CLI::App* equiv = app.add_subcommand(
      "equiv", "verify the twist/center equivalence both ways");
  add_common(equiv);
  equiv->callback(act(do_equiv, o));

  CLI::App* congr = app.add_subcommand("congruences",
                                       "enumerate the congruence lattice");
  add_common(congr);
  congr->add_flag("--oracle", o.oracle,
                  "cross-check against brute-force partition filtering");
  congr->callback(act(do_congruences, o));

  CLI::App* coniso = app.add_subcommand(
      "con-iso", "verify the congruence transfer to the twist");
  add_common(coniso);
  coniso->callback(act(do_con_iso, o));

  CLI::App* search = app.add_subcommand("search", "enumeration searches");
  search->require_subcommand(1);
  CLI::App* sq = search->add_subcommand("quantifiers",
                                        "enumerate quantifier assignments");
  add_common(sq);
  sq->add_option("--mode", o.mode, "subalgebra or raw")->required();
  sq->add_option("--filter", o.filter, "suite every assignment must pass")
      ->required();
  sq->add_option("--max-size", o.max_size, "raw-mode carrier cap");
  sq->callback(act(do_search_quantifiers, o));
  CLI::App* sc = search->add_subcommand("counterexample",
                                        "refute a formula by enumeration");
  add_common(sc);
  sc->add_option("--formula", o.formula, "formula text")->required();
  sc->callback(act(do_search_counterexample, o));

  CLI::App* corpus = app.add_subcommand(
      "corpus", "assert a suite on every monadic twist up to a size");
  add_common(corpus, /*with_file=*/false);
  corpus->add_option("--max-size", o.max_size, "largest carrier size");
  corpus->add_option("--assert", o.suite_id, "suite to assert on each twist")
      ->required();
  corpus->callback(act(do_corpus, o));

  CLI::App* exp = app.add_subcommand("export", "print the canonical JSON");
  add_common(exp);
  exp->callback(act(do_export, o));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems are input errors
  } catch (const SuiteFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
