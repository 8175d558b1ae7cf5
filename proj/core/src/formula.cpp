#include "twistbench/formula.hpp"

#include <algorithm>

#include "twistbench/error.hpp"

namespace twistbench {

Term tvar(std::string name) {
  Term t;
  t.kind = Term::Kind::Var;
  t.var = std::move(name);
  return t;
}

Term tconst(ConstName c) {
  Term t;
  t.kind = Term::Kind::Const;
  t.cname = c;
  return t;
}

Term tapp(Op op, std::vector<Term> args) {
  const size_t arity = op_is_binary(op) ? 2 : 1;
  if (args.size() != arity)
    throw Error("arity mismatch for op " + std::string(op_name(op)));
  Term t;
  t.kind = Term::Kind::App;
  t.op = op;
  t.args = std::move(args);
  return t;
}

namespace {

Formula atom(Formula::Kind k, Term l, Term r) {
  Formula f;
  f.kind = k;
  f.lhs = std::move(l);
  f.rhs = std::move(r);
  return f;
}

Formula connective(Formula::Kind k, std::vector<Formula> sub) {
  Formula f;
  f.kind = k;
  f.sub = std::move(sub);
  return f;
}

Formula quantifier(Formula::Kind k, std::string var,
                   std::optional<Formula> guard, Formula body) {
  Formula f;
  f.kind = k;
  f.var = std::move(var);
  if (guard) {
    f.has_guard = true;
    f.sub.push_back(std::move(*guard));
  }
  f.sub.push_back(std::move(body));
  return f;
}

}  // namespace

Formula f_eq(Term l, Term r) { return atom(Formula::Kind::Eq, std::move(l), std::move(r)); }
Formula f_le(Term l, Term r) { return atom(Formula::Kind::Le, std::move(l), std::move(r)); }
Formula f_not(Formula f) { return connective(Formula::Kind::Not, {std::move(f)}); }
Formula f_and(Formula a, Formula b) {
  return connective(Formula::Kind::And, {std::move(a), std::move(b)});
}
Formula f_or(Formula a, Formula b) {
  return connective(Formula::Kind::Or, {std::move(a), std::move(b)});
}
Formula f_implies(Formula a, Formula b) {
  return connective(Formula::Kind::Implies, {std::move(a), std::move(b)});
}
Formula f_forall(std::string var, Formula body) {
  return quantifier(Formula::Kind::ForAll, std::move(var), std::nullopt, std::move(body));
}
Formula f_forall(std::string var, Formula guard, Formula body) {
  return quantifier(Formula::Kind::ForAll, std::move(var), std::move(guard), std::move(body));
}
Formula f_exists(std::string var, Formula body) {
  return quantifier(Formula::Kind::Exists, std::move(var), std::nullopt, std::move(body));
}
Formula f_exists(std::string var, Formula guard, Formula body) {
  return quantifier(Formula::Kind::Exists, std::move(var), std::move(guard), std::move(body));
}

std::optional<int> Env::lookup(std::string_view var) const {
  for (auto it = bindings.rbegin(); it != bindings.rend(); ++it)
    if (it->first == var) return it->second;
  return std::nullopt;
}

namespace {

void collect_free(const Term& t, const std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (!bound.count(t.var)) out.insert(t.var);
      break;
    case Term::Kind::Const:
      break;
    case Term::Kind::App:
      for (const Term& s : t.args) collect_free(s, bound, out);
      break;
  }
}

void collect_free(const Formula& f, std::set<std::string> bound,
                  std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Le:
      collect_free(f.lhs, bound, out);
      collect_free(f.rhs, bound, out);
      break;
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies:
      for (const Formula& g : f.sub) collect_free(g, bound, out);
      break;
    case Formula::Kind::ForAll:
    case Formula::Kind::Exists:
      bound.insert(f.var);
      for (const Formula& g : f.sub) collect_free(g, bound, out);
      break;
  }
}

}  // namespace

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_free(t, {}, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  collect_free(f, {}, out);
  return out;
}

int eval_term(const Algebra& a, const Term& t, const Env& env) {
  switch (t.kind) {
    case Term::Kind::Var: {
      auto v = env.lookup(t.var);
      if (!v) throw Error("unbound variable '" + t.var + "'");
      return *v;
    }
    case Term::Kind::Const:
      return a.constant(t.cname);
    case Term::Kind::App:
      if (op_is_binary(t.op))
        return a.apply2(t.op, eval_term(a, t.args[0], env),
                        eval_term(a, t.args[1], env));
      return a.apply1(t.op, eval_term(a, t.args[0], env));
  }
  throw Error("bad term");
}

bool eval_formula(const Algebra& a, const Formula& f, Env& env) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      return eval_term(a, f.lhs, env) == eval_term(a, f.rhs, env);
    case Formula::Kind::Le:
      return a.le(eval_term(a, f.lhs, env), eval_term(a, f.rhs, env));
    case Formula::Kind::Not:
      return !eval_formula(a, f.sub[0], env);
    case Formula::Kind::And:
      return eval_formula(a, f.sub[0], env) && eval_formula(a, f.sub[1], env);
    case Formula::Kind::Or:
      return eval_formula(a, f.sub[0], env) || eval_formula(a, f.sub[1], env);
    case Formula::Kind::Implies:
      return !eval_formula(a, f.sub[0], env) || eval_formula(a, f.sub[1], env);
    case Formula::Kind::ForAll:
      for (int e = 0; e < a.size(); ++e) {
        env.push(f.var, e);
        bool in_range = !f.has_guard || eval_formula(a, f.guard(), env);
        bool ok = !in_range || eval_formula(a, f.body(), env);
        env.pop();
        if (!ok) return false;
      }
      return true;
    case Formula::Kind::Exists:
      for (int e = 0; e < a.size(); ++e) {
        env.push(f.var, e);
        bool in_range = !f.has_guard || eval_formula(a, f.guard(), env);
        bool ok = in_range && eval_formula(a, f.body(), env);
        env.pop();
        if (ok) return true;
      }
      return false;
  }
  throw Error("bad formula");
}

bool eval_closed(const Algebra& a, const Formula& f) {
  Env env;
  return eval_formula(a, f, env);
}

namespace {

// Records the evaluated sides of the first failing equation or inequation
// reachable through conjunctions.
void annotate_sides(const Algebra& a, const Formula& f, Env& env, Witness& w) {
  switch (f.kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Le:
      w.lhs = eval_term(a, f.lhs, env);
      w.rhs = eval_term(a, f.rhs, env);
      return;
    case Formula::Kind::And:
      for (const Formula& g : f.sub)
        if (!eval_formula(a, g, env)) {
          annotate_sides(a, g, env, w);
          return;
        }
      return;
    default:
      return;
  }
}

// Enumerates the leading universal prefix; on a refutation of the matrix,
// records the prefix assignment as a witness.
bool scan_prefix(const Algebra& a, const Formula& f, Env& env, bool report_all,
                 std::vector<Witness>& out) {
  if (f.kind == Formula::Kind::ForAll) {
    bool pass = true;
    for (int e = 0; e < a.size(); ++e) {
      env.push(f.var, e);
      bool in_range = !f.has_guard || eval_formula(a, f.guard(), env);
      if (in_range) {
        if (!scan_prefix(a, f.body(), env, report_all, out)) {
          pass = false;
          if (!report_all) {
            env.pop();
            return false;
          }
        }
      }
      env.pop();
    }
    return pass;
  }
  if (eval_formula(a, f, env)) return true;
  Witness w;
  w.assignment = env.bindings;
  annotate_sides(a, f, env, w);
  out.push_back(std::move(w));
  return false;
}

}  // namespace

CheckReport check_formula(const Algebra& a, const Formula& f, bool report_all) {
  if (!free_vars(f).empty())
    throw Error("formula is not closed; free variables remain");
  Env env;
  std::vector<Witness> witnesses;
  bool pass = scan_prefix(a, f, env, report_all, witnesses);
  if (pass) return CheckReport::ok();
  CheckReport r;
  r.pass = false;
  r.witness = witnesses.front();
  if (report_all) r.all_witnesses = std::move(witnesses);
  return r;
}

bool witness_refutes(const Algebra& a, const Formula& f, const Witness& w) {
  Env env;
  const Formula* g = &f;
  for (const auto& [var, value] : w.assignment) {
    if (g->kind != Formula::Kind::ForAll || g->var != var) return false;
    env.push(var, value);
    if (g->has_guard) {
      Env genv = env;
      if (!eval_formula(a, g->guard(), genv)) return false;
    }
    g = &g->body();
  }
  return !eval_formula(a, *g, env);
}

}  // namespace twistbench
