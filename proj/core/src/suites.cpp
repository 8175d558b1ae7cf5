#include "twistbench/suites.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace twistbench {

namespace {

// Terse term builders; the catalog below stays close to textbook notation.
Term V(const char* n) { return tvar(n); }
Term J(Term a, Term b) { return tapp(Op::join, {std::move(a), std::move(b)}); }
Term M(Term a, Term b) { return tapp(Op::meet, {std::move(a), std::move(b)}); }
Term H(Term a, Term b) { return tapp(Op::himp, {std::move(a), std::move(b)}); }
Term N(Term a, Term b) { return tapp(Op::nimp, {std::move(a), std::move(b)}); }
Term Sim(Term a) { return tapp(Op::neg, {std::move(a)}); }
Term Hneg(Term a) { return tapp(Op::hneg, {std::move(a)}); }
Term Ex(Term a) { return tapp(Op::exists, {std::move(a)}); }
Term All(Term a) { return tapp(Op::forall, {std::move(a)}); }
Term Bot() { return tconst(ConstName::bot); }
Term Top() { return tconst(ConstName::top); }
Term Cen() { return tconst(ConstName::center); }

Formula and_all(std::vector<Formula> fs) {
  Formula acc = std::move(fs.front());
  for (size_t i = 1; i < fs.size(); ++i) acc = f_and(std::move(acc), std::move(fs[i]));
  return acc;
}

Formula all1(const char* v, Formula m) { return f_forall(v, std::move(m)); }
Formula all2(const char* v1, const char* v2, Formula m) {
  return f_forall(v1, f_forall(v2, std::move(m)));
}
Formula all3(const char* v1, const char* v2, const char* v3, Formula m) {
  return f_forall(v1, f_forall(v2, f_forall(v3, std::move(m))));
}

Formula iff(Formula a, Formula b) {
  Formula a2 = a, b2 = b;
  return f_and(f_implies(std::move(a), std::move(b)),
               f_implies(std::move(b2), std::move(a2)));
}

// Bounded-lattice identities bundled as one clause; they hold by construction
// for derived tables but keep imported tables honest.
Formula lattice_identities() {
  return all3("x", "y", "z",
              and_all({f_eq(J(V("x"), V("y")), J(V("y"), V("x"))),
                       f_eq(M(V("x"), V("y")), M(V("y"), V("x"))),
                       f_eq(J(J(V("x"), V("y")), V("z")), J(V("x"), J(V("y"), V("z")))),
                       f_eq(M(M(V("x"), V("y")), V("z")), M(V("x"), M(V("y"), V("z")))),
                       f_eq(J(V("x"), M(V("x"), V("y"))), V("x")),
                       f_eq(M(V("x"), J(V("x"), V("y"))), V("x")),
                       f_eq(J(V("x"), Bot()), V("x")),
                       f_eq(M(V("x"), Top()), V("x"))}));
}

Formula distributivity(const char* a, const char* b, const char* c) {
  return all3(a, b, c,
              f_eq(M(V(a), J(V(b), V(c))),
                   J(M(V(a), V(b)), M(V(a), V(c)))));
}

std::vector<Clause> heyting_clauses() {
  return {
      {"h1", lattice_identities()},
      {"h2", all2("x", "y", f_eq(M(V("x"), H(V("x"), V("y"))), M(V("x"), V("y"))))},
      {"h3", all3("x", "y", "z",
                  f_eq(M(V("x"), H(V("y"), V("z"))),
                       M(V("x"), H(M(V("x"), V("y")), M(V("x"), V("z"))))))},
      {"h4", all2("x", "y", f_eq(H(M(V("x"), V("y")), V("x")), Top()))},
  };
}

Clause himp_prelinearity() {
  return {"prelinearity",
          all2("x", "y", f_eq(J(H(V("x"), V("y")), H(V("y"), V("x"))), Top()))};
}

std::vector<Clause> monadic_heyting_clauses() {
  return {
      {"m1", all1("x", f_and(f_le(All(V("x")), V("x")), f_le(V("x"), Ex(V("x")))))},
      {"m2", all2("x", "y",
                  f_and(f_eq(All(M(V("x"), V("y"))), M(All(V("x")), All(V("y")))),
                        f_eq(Ex(J(V("x"), V("y"))), J(Ex(V("x")), Ex(V("y"))))))},
      {"m3", f_and(f_eq(All(Top()), Top()), f_eq(Ex(Bot()), Bot()))},
      {"m4", all1("x", f_and(f_eq(All(Ex(V("x"))), Ex(V("x"))),
                             f_eq(Ex(All(V("x"))), All(V("x")))))},
      {"m5", all2("x", "y",
                  f_le(All(H(V("x"), V("y"))), H(Ex(V("x")), Ex(V("y")))))},
  };
}

Clause quantifier_shift() {
  return {"quantifier-shift",
          all2("x", "y", f_eq(All(J(Ex(V("x")), V("y"))),
                              J(Ex(V("x")), All(V("y")))))};
}

std::vector<Clause> kleene_clauses() {
  return {
      {"involution", all1("p", f_eq(Sim(Sim(V("p"))), V("p")))},
      {"de-morgan",
       all2("p", "q",
            f_and(f_eq(Sim(J(V("p"), V("q"))), M(Sim(V("p")), Sim(V("q")))),
                  f_eq(Sim(M(V("p"), V("q"))), J(Sim(V("p")), Sim(V("q"))))))},
      {"kleene", all2("p", "q",
                      f_le(M(V("p"), Sim(V("p"))), J(V("q"), Sim(V("q")))))},
  };
}

Clause center_clause() { return {"center", f_eq(Sim(Cen()), Cen())}; }

Clause nelson_n2() { return {"N2", all1("p", f_eq(N(V("p"), V("p")), Top()))}; }
Clause nelson_n3() {
  return {"N3", all3("p", "q", "r",
                     f_eq(N(V("p"), N(V("q"), V("r"))),
                          N(M(V("p"), V("q")), V("r"))))};
}
Clause nelson_n4() {
  return {"N4", all2("p", "q",
                     f_eq(M(V("p"), N(V("p"), V("q"))),
                          M(V("p"), J(Sim(V("p")), V("q")))))};
}

Clause residuation_clause() {
  return {"residuation",
          all3("p", "q", "r",
               iff(f_le(M(V("p"), V("r")), J(Sim(V("p")), V("q"))),
                   f_le(V("r"), N(V("p"), V("q")))))};
}

Clause nimp_prelinearity() {
  return {"prelinearity",
          all2("p", "q", f_eq(J(N(V("p"), V("q")), N(V("q"), V("p"))), Top()))};
}

Formula fix_guard(const char* v) { return f_eq(Ex(V(v)), V(v)); }

Suite make_suite(std::string id, std::vector<Clause> clauses,
                 std::vector<Op> ops, std::vector<ConstName> consts = {}) {
  Suite s;
  s.id = std::move(id);
  s.clauses = std::move(clauses);
  s.required_ops = std::move(ops);
  s.required_consts = std::move(consts);
  return s;
}

std::map<std::string, Suite> build_catalog() {
  std::map<std::string, Suite> cat;
  auto add = [&](Suite s) { cat.emplace(s.id, std::move(s)); };

  add(make_suite("heyting", heyting_clauses(), {Op::himp}));

  {
    auto cl = heyting_clauses();
    cl.push_back(himp_prelinearity());
    add(make_suite("godel", std::move(cl), {Op::himp}));
  }

  add(make_suite("monadic-heyting", monadic_heyting_clauses(),
                 {Op::himp, Op::exists, Op::forall}));

  {
    auto cl = heyting_clauses();
    cl.push_back(himp_prelinearity());
    for (auto& c : monadic_heyting_clauses()) cl.push_back(std::move(c));
    cl.push_back(quantifier_shift());
    add(make_suite("monadic-godel", std::move(cl),
                   {Op::himp, Op::exists, Op::forall}));
  }

  {
    auto cl = kleene_clauses();
    cl.push_back(center_clause());
    add(make_suite("kleene-centered", std::move(cl), {Op::neg},
                   {ConstName::center}));
  }

  {
    // N1 bundles the Kleene-reduct conditions, distributivity included.
    std::vector<Formula> n1 = {
        f_eq(M(V("p"), J(V("q"), V("r"))), J(M(V("p"), V("q")), M(V("p"), V("r")))),
        f_eq(Sim(Sim(V("p"))), V("p")),
        f_eq(Sim(J(V("p"), V("q"))), M(Sim(V("p")), Sim(V("q")))),
        f_eq(Sim(M(V("p"), V("q"))), J(Sim(V("p")), Sim(V("q")))),
        f_le(M(V("p"), Sim(V("p"))), J(V("q"), Sim(V("q"))))};
    add(make_suite("nelson",
                   {{"N1", all3("p", "q", "r", and_all(std::move(n1)))},
                    nelson_n2(), nelson_n3(), nelson_n4()},
                   {Op::neg, Op::nimp}));
  }

  add(make_suite("rn-residuation", {residuation_clause()}, {Op::neg, Op::nimp}));
  add(make_suite("nelson-prelinear", {nimp_prelinearity()}, {Op::nimp}));

  {
    std::vector<Clause> cl;
    cl.push_back({"distributive", distributivity("p", "q", "r")});
    for (auto& c : kleene_clauses()) cl.push_back(std::move(c));
    cl.push_back(center_clause());
    cl.push_back(nelson_n2());
    cl.push_back(nelson_n3());
    cl.push_back(nelson_n4());
    cl.push_back(residuation_clause());
    cl.push_back(nimp_prelinearity());
    cl.push_back({"center-exists", f_eq(Ex(Cen()), Cen())});
    cl.push_back({"n1", f_eq(Ex(Bot()), Bot())});
    cl.push_back({"n2", all1("p", f_le(V("p"), Ex(V("p"))))});
    cl.push_back({"n3", all2("p", "q", f_eq(Ex(M(V("p"), Ex(V("q")))),
                                            M(Ex(V("p")), Ex(V("q")))))});
    cl.push_back({"n4", all2("p", "q", f_eq(Ex(J(V("p"), V("q"))),
                                            J(Ex(V("p")), Ex(V("q")))))});
    cl.push_back({"n5", all1("p", f_eq(All(Ex(V("p"))), Ex(V("p"))))});
    cl.push_back({"n6", all2("p", "q", f_le(All(N(V("p"), V("q"))),
                                            N(Ex(V("p")), Ex(V("q")))))});
    cl.push_back({"n7", all2("p", "q", f_le(All(N(V("p"), V("q"))),
                                            N(All(V("p")), All(V("q")))))});
    add(make_suite("monadic-nelson", std::move(cl),
                   {Op::neg, Op::nimp, Op::exists, Op::forall},
                   {ConstName::center}));
  }

  {
    std::vector<Clause> cl;
    cl.push_back(
        {"item1", all1("x", f_and(f_exists("y", f_eq(Ex(V("x")), All(V("y")))),
                                  f_exists("y", f_eq(All(V("x")), Ex(V("y"))))))});
    cl.push_back(
        {"item2",
         f_forall("x", fix_guard("x"),
                  f_forall("y", fix_guard("y"),
                           and_all({f_eq(Ex(J(V("x"), V("y"))), J(V("x"), V("y"))),
                                    f_eq(Ex(M(V("x"), V("y"))), M(V("x"), V("y"))),
                                    f_eq(Ex(H(V("x"), V("y"))), H(V("x"), V("y"))),
                                    f_eq(Ex(Bot()), Bot()),
                                    f_eq(Ex(Top()), Top())})))});
    cl.push_back(
        {"item3",
         all1("x",
              and_all({f_le(V("x"), Ex(V("x"))),
                       f_eq(Ex(Ex(V("x"))), Ex(V("x"))),
                       f_forall("y", fix_guard("y"),
                                f_implies(f_le(V("x"), V("y")),
                                          f_le(Ex(V("x")), V("y")))),
                       f_le(All(V("x")), V("x")),
                       f_eq(Ex(All(V("x"))), All(V("x"))),
                       f_forall("y", fix_guard("y"),
                                f_implies(f_le(V("y"), V("x")),
                                          f_le(V("y"), All(V("x")))))}))});
    add(make_suite("lemma23-basic", std::move(cl),
                   {Op::himp, Op::exists, Op::forall}));
  }

  {
    auto guarded = [&](Formula body) {
      return all1("a", f_forall("u", fix_guard("u"), std::move(body)));
    };
    std::vector<Clause> cl;
    cl.push_back({"item1", f_and(f_eq(Ex(Top()), Top()), f_eq(All(Bot()), Bot()))});
    cl.push_back({"item2", f_forall("u", fix_guard("u"),
                                    f_and(f_eq(All(V("u")), V("u")),
                                          f_eq(Ex(V("u")), V("u"))))});
    cl.push_back({"item3", all1("a", f_and(f_le(All(V("a")), V("a")),
                                           f_le(V("a"), Ex(V("a")))))});
    cl.push_back({"item4", all2("a", "b",
                                f_implies(f_le(V("a"), V("b")),
                                          f_and(f_le(All(V("a")), All(V("b"))),
                                                f_le(Ex(V("a")), Ex(V("b"))))))});
    cl.push_back({"item5", guarded(f_eq(All(J(V("a"), V("u"))),
                                        J(All(V("a")), V("u"))))});
    cl.push_back({"item6", guarded(f_eq(Ex(M(V("a"), V("u"))),
                                        M(Ex(V("a")), V("u"))))});
    cl.push_back({"item7", guarded(f_eq(All(H(V("a"), V("u"))),
                                        H(Ex(V("a")), V("u"))))});
    cl.push_back({"item8", guarded(f_le(Ex(H(V("a"), V("u"))),
                                        H(All(V("a")), V("u"))))});
    cl.push_back({"item9", guarded(f_eq(All(H(V("u"), V("a"))),
                                        H(V("u"), All(V("a")))))});
    cl.push_back({"item10", guarded(f_le(Ex(H(V("u"), V("a"))),
                                         H(V("u"), Ex(V("a")))))});
    cl.push_back({"item11", all2("a", "b", f_le(M(Ex(V("a")), All(V("b"))),
                                                Ex(M(V("a"), V("b")))))});
    cl.push_back({"item12", all2("a", "b", f_le(All(H(V("a"), V("b"))),
                                                H(All(V("a")), All(V("b")))))});
    cl.push_back({"item13", all1("a", f_eq(All(Hneg(V("a"))), Hneg(Ex(V("a")))))});
    cl.push_back({"item14", all1("a", f_le(Ex(Hneg(V("a"))), Hneg(All(V("a")))))});
    add(make_suite("lemma24", std::move(cl),
                   {Op::himp, Op::hneg, Op::exists, Op::forall}));
  }

  add(make_suite(
      "lemma33",
      {{"item1", f_eq(All(Top()), Top())},
       {"item2", all1("p", f_le(All(V("p")), V("p")))},
       {"item3", all2("p", "q", f_eq(All(J(V("p"), All(V("q")))),
                                     J(All(V("p")), All(V("q")))))},
       {"item4", all2("p", "q", f_eq(All(M(V("p"), V("q"))),
                                     M(All(V("p")), All(V("q")))))},
       {"item5", all1("p", f_eq(Ex(All(V("p"))), All(V("p"))))},
       {"item6", all1("p", f_eq(All(Ex(V("p"))), Ex(V("p"))))}},
      {Op::exists, Op::forall}));

  add(make_suite(
      "ck",
      {{"ck", f_forall(
            "p", f_le(Cen(), V("p")),
            f_forall("q", f_le(Cen(), V("q")),
                     f_implies(f_eq(M(V("p"), V("q")), Cen()),
                               f_exists("r", f_and(f_eq(J(V("r"), Cen()), V("p")),
                                                   f_eq(J(Sim(V("r")), Cen()),
                                                        V("q")))))))}},
      {Op::neg}, {ConstName::center}));

  add(make_suite("n3-as-printed",
                 {{"n3-as-printed",
                   all3("p", "q", "r",
                        f_eq(N(V("p"), N(V("p"), V("r"))),
                             N(M(V("p"), V("q")), V("r"))))}},
                 {Op::nimp}));

  return cat;
}

const std::map<std::string, Suite>& catalog() {
  static const std::map<std::string, Suite> cat = build_catalog();
  return cat;
}

}  // namespace

SuiteFailure::SuiteFailure(std::string suite_id_, CheckReport report_,
                           std::string detail)
    : Error("suite '" + suite_id_ + "' failed: " + detail),
      suite_id(std::move(suite_id_)),
      report(std::move(report_)) {}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "heyting",        "godel",           "monadic-heyting", "monadic-godel",
      "kleene-centered", "nelson",          "rn-residuation",  "nelson-prelinear",
      "monadic-nelson", "lemma23-basic",   "lemma24",         "lemma33",
      "ck"};
  return ids;
}

const Suite& suite(const std::string& id) {
  auto it = catalog().find(id);
  if (it == catalog().end()) throw Error("unknown suite '" + id + "'");
  return it->second;
}

std::string describe_witness(const Algebra& a, const Witness& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.assignment.size(); ++i) {
    if (i) os << ", ";
    os << w.assignment[i].first << "↦" << a.label(w.assignment[i].second);
  }
  if (w.lhs && w.rhs) {
    if (!w.assignment.empty()) os << " ";
    os << "(lhs=" << a.label(*w.lhs) << ", rhs=" << a.label(*w.rhs) << ")";
  }
  if (w.assignment.empty() && !(w.lhs && w.rhs)) os << "(no bindings)";
  return os.str();
}

CheckReport check_suite(const Algebra& a, const std::string& id,
                        bool report_all) {
  const Suite& s = suite(id);
  for (Op op : s.required_ops)
    if (!a.has_op(op))
      throw Error("suite '" + id + "' requires operation " +
                  std::string(op_name(op)) + ", absent from algebra '" +
                  a.name + "'");
  for (ConstName c : s.required_consts)
    if (!a.has_const(c))
      throw Error("suite '" + id + "' requires constant " +
                  std::string(const_name(c)) + ", absent from algebra '" +
                  a.name + "'");

  CheckReport out;
  for (const Clause& cl : s.clauses) {
    CheckReport r = check_formula(a, cl.formula, report_all);
    if (r.pass) continue;
    for (Witness& w : r.all_witnesses) w.clause = cl.label;
    r.witness->clause = cl.label;
    if (!out.witness) out.witness = r.witness;
    out.pass = false;
    if (!report_all) return out;
    out.all_witnesses.insert(out.all_witnesses.end(),
                             std::make_move_iterator(r.all_witnesses.begin()),
                             std::make_move_iterator(r.all_witnesses.end()));
  }
  return out;
}

CheckReport require_suite(const Algebra& a, const std::string& id) {
  CheckReport r = check_suite(a, id);
  if (!r.pass)
    throw SuiteFailure(id, r,
                       "clause '" + r.witness->clause + "' at " +
                           describe_witness(a, *r.witness) +
                           (a.name.empty() ? "" : " in algebra '" + a.name + "'"));
  return r;
}

namespace {

bool contains(const std::vector<int>& v, int e) {
  return std::find(v.begin(), v.end(), e) != v.end();
}

void push_failure(CheckReport& rep, Witness w) {
  if (!rep.witness) rep.witness = w;
  rep.pass = false;
  rep.all_witnesses.push_back(std::move(w));
}

}  // namespace

QuantifierRange quantifier_range(const Algebra& a) {
  if (!a.exists || !a.forall)
    throw Error("quantifier_range needs both exists and forall on algebra '" +
                a.name + "'");
  QuantifierRange qr;
  for (int e = 0; e < a.size(); ++e) {
    int ex = (*a.exists)[e];
    int fa = (*a.forall)[e];
    if (!contains(qr.exists_image, ex)) qr.exists_image.push_back(ex);
    if (!contains(qr.forall_image, fa)) qr.forall_image.push_back(fa);
  }
  std::sort(qr.exists_image.begin(), qr.exists_image.end());
  std::sort(qr.forall_image.begin(), qr.forall_image.end());

  if (qr.exists_image != qr.forall_image) {
    Witness w;
    w.clause = "range-equal";
    push_failure(qr.report, std::move(w));
  }

  // Closure of the image under every present operation and constant.
  const auto& img = qr.exists_image;
  for (Op op : a.present_ops()) {
    if (op_is_binary(op)) {
      for (int x : img)
        for (int y : img) {
          int r = a.apply2(op, x, y);
          if (!contains(img, r)) {
            Witness w;
            w.clause = "range-closed:" + std::string(op_name(op));
            w.assignment = {{"x", x}, {"y", y}};
            w.lhs = r;
            push_failure(qr.report, std::move(w));
          }
        }
    } else {
      for (int x : img) {
        int r = a.apply1(op, x);
        if (!contains(img, r)) {
          Witness w;
          w.clause = "range-closed:" + std::string(op_name(op));
          w.assignment = {{"x", x}};
          w.lhs = r;
          push_failure(qr.report, std::move(w));
        }
      }
    }
  }
  for (ConstName c : {ConstName::bot, ConstName::top, ConstName::center}) {
    if (!a.has_const(c)) continue;
    int e = a.constant(c);
    if (!contains(img, e)) {
      Witness w;
      w.clause = "range-closed:" + std::string(const_name(c));
      w.lhs = e;
      push_failure(qr.report, std::move(w));
    }
  }

  // exists a = least image element above a; forall a = greatest below.
  for (int e = 0; e < a.size(); ++e) {
    std::vector<int> above, below;
    for (int b : img) {
      if (a.le(e, b)) above.push_back(b);
      if (a.le(b, e)) below.push_back(b);
    }
    int least = -1, greatest = -1;
    for (int b : above)
      if (std::all_of(above.begin(), above.end(),
                      [&](int d) { return a.le(b, d); }))
        least = b;
    for (int b : below)
      if (std::all_of(below.begin(), below.end(),
                      [&](int d) { return a.le(d, b); }))
        greatest = b;
    if (least != (*a.exists)[e]) {
      Witness w;
      w.clause = "range-min";
      w.assignment = {{"x", e}};
      w.lhs = (*a.exists)[e];
      if (least >= 0) w.rhs = least;
      push_failure(qr.report, std::move(w));
    }
    if (greatest != (*a.forall)[e]) {
      Witness w;
      w.clause = "range-max";
      w.assignment = {{"x", e}};
      w.lhs = (*a.forall)[e];
      if (greatest >= 0) w.rhs = greatest;
      push_failure(qr.report, std::move(w));
    }
  }
  return qr;
}

std::string_view si_status_name(SiStatus s) {
  switch (s) {
    case SiStatus::NotFsi: return "not-fsi";
    case SiStatus::FsiNotSi: return "fsi-not-si";
    case SiStatus::Si: return "si";
  }
  return "?";
}

SiStatus check_si_status(const Algebra& a) {
  require_suite(a, "monadic-godel");
  QuantifierRange qr = quantifier_range(a);
  const auto& img = qr.exists_image;
  for (size_t i = 0; i < img.size(); ++i)
    for (size_t j = i + 1; j < img.size(); ++j)
      if (!a.le(img[i], img[j]) && !a.le(img[j], img[i]))
        return SiStatus::NotFsi;
  // The image is a chain; subdirect irreducibility needs a greatest element
  // strictly below the top.
  int u = -1;
  for (int b : img)
    if (b != a.top() && (u < 0 || a.le(u, b))) u = b;
  return u >= 0 ? SiStatus::Si : SiStatus::FsiNotSi;
}

}  // namespace twistbench
