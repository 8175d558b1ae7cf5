#include "twistbench/twist.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twistbench/error.hpp"
#include "twistbench/suites.hpp"

namespace twistbench {

Homomorphism identity_hom(const Algebra& a) {
  Homomorphism h;
  h.source = a;
  h.target = a;
  h.map.resize(a.size());
  std::iota(h.map.begin(), h.map.end(), 0);
  return h;
}

namespace {

void hom_failure(CheckReport& rep, std::string clause,
                 std::vector<std::pair<std::string, int>> assignment, int lhs,
                 int rhs) {
  Witness w;
  w.clause = std::move(clause);
  w.assignment = std::move(assignment);
  w.lhs = lhs;
  w.rhs = rhs;
  if (!rep.witness) rep.witness = w;
  rep.pass = false;
  rep.all_witnesses.push_back(std::move(w));
}

CheckReport verify_hom_impl(const Homomorphism& h, bool include_binary) {
  const Algebra& s = h.source;
  const Algebra& t = h.target;
  if (static_cast<int>(h.map.size()) != s.size())
    throw Error("homomorphism map has " + std::to_string(h.map.size()) +
                " entries for a carrier of " + std::to_string(s.size()));
  for (int v : h.map)
    if (v < 0 || v >= t.size())
      throw Error("homomorphism map entry out of range");

  CheckReport rep;
  for (Op op : s.present_ops()) {
    if (!t.has_op(op)) continue;
    std::string clause = "hom:" + std::string(op_name(op));
    if (op_is_binary(op)) {
      if (!include_binary) continue;
      for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y) {
          int lhs = h.map[s.apply2(op, x, y)];
          int rhs = t.apply2(op, h.map[x], h.map[y]);
          if (lhs != rhs)
            hom_failure(rep, clause, {{"x", x}, {"y", y}}, lhs, rhs);
        }
    } else {
      for (int x = 0; x < s.size(); ++x) {
        int lhs = h.map[s.apply1(op, x)];
        int rhs = t.apply1(op, h.map[x]);
        if (lhs != rhs) hom_failure(rep, clause, {{"x", x}}, lhs, rhs);
      }
    }
  }
  for (ConstName c : {ConstName::bot, ConstName::top, ConstName::center}) {
    if (!s.has_const(c) || !t.has_const(c)) continue;
    int lhs = h.map[s.constant(c)];
    int rhs = t.constant(c);
    if (lhs != rhs)
      hom_failure(rep, "hom:" + std::string(const_name(c)), {}, lhs, rhs);
  }
  return rep;
}

void verify_natural(const Homomorphism& h, VerifyLevel level,
                    const std::string& what) {
  if (!is_bijective(h))
    throw Error(what + " is not a bijection between '" + h.source.name +
                "' (" + std::to_string(h.source.size()) + " elements) and '" +
                h.target.name + "' (" + std::to_string(h.target.size()) +
                " elements)");
  CheckReport r = verify_hom_impl(h, level == VerifyLevel::Full);
  if (!r.pass)
    throw Error(what + " fails preservation at '" + r.witness->clause +
                "', " + describe_witness(h.source, *r.witness));
}

}  // namespace

CheckReport verify_homomorphism(const Homomorphism& h) {
  return verify_hom_impl(h, /*include_binary=*/true);
}

bool is_bijective(const Homomorphism& h) {
  if (h.source.size() != h.target.size()) return false;
  std::vector<bool> seen(h.target.size(), false);
  for (int v : h.map) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.target.size() != g.source.size() ||
      f.target.lat.poset.names != g.source.lat.poset.names)
    throw Error("cannot compose: inner algebras differ ('" + f.target.name +
                "' vs '" + g.source.name + "')");
  Homomorphism out;
  out.source = f.source;
  out.target = g.target;
  out.map.reserve(f.map.size());
  for (int v : f.map) out.map.push_back(g.map[v]);
  return out;
}

int TwistAlgebra::index_of(int a, int b) const {
  auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b));
  return it == pairs.end() ? -1 : static_cast<int>(it - pairs.begin());
}

TwistAlgebra build_twist(const Algebra& g) {
  const bool monadic = g.exists.has_value() || g.forall.has_value();
  if (monadic && (!g.exists || !g.forall))
    throw Error("twist base '" + g.name +
                "' must carry both quantifiers or neither");
  require_suite(g, monadic ? "monadic-heyting" : "heyting");

  TwistAlgebra tw;
  tw.base = g;
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.lat.meet[a][b] == g.bot()) tw.pairs.emplace_back(a, b);
  const int m = static_cast<int>(tw.pairs.size());

  std::vector<std::vector<int>> pidx(n, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) pidx[tw.pairs[i].first][tw.pairs[i].second] = i;
  auto pair_label = [&](int a, int b) {
    return "(" + g.label(a) + "," + g.label(b) + ")";
  };
  auto member = [&](int a, int b, const char* what) {
    int i = pidx[a][b];
    if (i < 0)
      throw Error(std::string(what) + " leaves the twist carrier at " +
                  pair_label(a, b));
    return i;
  };

  Poset p;
  p.names.reserve(m);
  for (auto [a, b] : tw.pairs) p.names.push_back(pair_label(a, b));
  p.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      p.leq[i][j] = g.le(tw.pairs[i].first, tw.pairs[j].first) &&
                    g.le(tw.pairs[j].second, tw.pairs[i].second);
  Lattice lat = derive_lattice(p);

  // The order-derived tables must agree with the componentwise formulas.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto [a, b] = tw.pairs[i];
      auto [d, e] = tw.pairs[j];
      int want_meet = member(g.lat.meet[a][d], g.lat.join[b][e], "meet");
      int want_join = member(g.lat.join[a][d], g.lat.meet[b][e], "join");
      if (lat.meet[i][j] != want_meet || lat.join[i][j] != want_join)
        throw Error("twist tables disagree with the pair formulas at " +
                    p.names[i] + ", " + p.names[j]);
    }
  if (lat.bot != pidx[g.bot()][g.top()] || lat.top != pidx[g.top()][g.bot()])
    throw Error("twist bounds are not (0,1) and (1,0)");

  AlgebraInput in;
  UnaryTable neg(m);
  BinaryTable nimp(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    auto [a, b] = tw.pairs[i];
    neg[i] = member(b, a, "negation");
    for (int j = 0; j < m; ++j) {
      auto [d, e] = tw.pairs[j];
      nimp[i][j] = member((*g.himp)[a][d], g.lat.meet[a][e], "implication");
    }
  }
  in.unary["neg"] = std::move(neg);
  in.binary["nimp"] = std::move(nimp);
  in.consts["center"] = pidx[g.bot()][g.bot()];
  if (monadic) {
    UnaryTable ex(m);
    for (int i = 0; i < m; ++i) {
      auto [a, b] = tw.pairs[i];
      ex[i] = member((*g.exists)[a], (*g.forall)[b], "exists");
    }
    in.unary["exists"] = std::move(ex);
  }
  tw.result = make_algebra(std::move(lat), in, "K(" + g.name + ")");

  if (monadic) {
    // The derived interior operator must match (Aa, Eb) pointwise.
    for (int i = 0; i < m; ++i) {
      auto [a, b] = tw.pairs[i];
      int want = member((*g.forall)[a], (*g.exists)[b], "forall");
      if ((*tw.result.forall)[i] != want)
        throw Error("twist forall disagrees with the pair formula at " +
                    p.names[i]);
    }
  }
  return tw;
}

int CenterAlgebra::index_of(int source_elem) const {
  auto it = std::find(carrier.begin(), carrier.end(), source_elem);
  return it == carrier.end() ? -1 : static_cast<int>(it - carrier.begin());
}

CenterAlgebra center_algebra(const Algebra& t) {
  if (!t.center)
    throw Error("center_algebra needs a centered algebra; '" + t.name +
                "' has no center");
  const bool monadic = t.exists.has_value();
  if (monadic) {
    require_suite(t, "monadic-nelson");
  } else {
    require_suite(t, "nelson");
    require_suite(t, "kleene-centered");
  }

  const int c = *t.center;
  CenterAlgebra ca;
  for (int e = 0; e < t.size(); ++e)
    if (t.le(c, e)) ca.carrier.push_back(e);
  const int m = static_cast<int>(ca.carrier.size());
  std::vector<int> inv(t.size(), -1);
  for (int i = 0; i < m; ++i) inv[ca.carrier[i]] = i;
  auto member = [&](int e, const char* what) {
    if (inv[e] < 0)
      throw Error("center restriction is not closed under " +
                  std::string(what) + ": " + t.label(e) +
                  " is below the center");
    return inv[e];
  };

  Poset p;
  for (int e : ca.carrier) p.names.push_back(t.label(e));
  p.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      p.leq[i][j] = t.le(ca.carrier[i], ca.carrier[j]);
  Lattice lat = derive_lattice(p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (lat.meet[i][j] != member(t.lat.meet[ca.carrier[i]][ca.carrier[j]], "meet") ||
          lat.join[i][j] != member(t.lat.join[ca.carrier[i]][ca.carrier[j]], "join"))
        throw Error("center tables disagree with the restriction at " +
                    p.names[i] + ", " + p.names[j]);
    }
  if (lat.bot != inv[c] || lat.top != inv[t.top()])
    throw Error("center bounds are not c and 1");

  AlgebraInput in;
  BinaryTable himp(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      himp[i][j] = member(t.apply2(Op::nimp, ca.carrier[i], ca.carrier[j]),
                          "implication");
  in.binary["himp"] = std::move(himp);
  if (monadic) {
    UnaryTable ex(m), fa(m);
    for (int i = 0; i < m; ++i) {
      ex[i] = member(t.apply1(Op::exists, ca.carrier[i]), "exists");
      fa[i] = member(t.apply1(Op::forall, ca.carrier[i]), "forall");
    }
    in.unary["exists"] = std::move(ex);
    in.unary["forall"] = std::move(fa);
  }
  ca.result = make_algebra(std::move(lat), in, "C(" + t.name + ")");

  // The restricted implication must be the relative pseudocomplement of the
  // restricted order.
  try {
    if (*ca.result.himp != derive_himp(ca.result.lat))
      throw Error("restricted implication differs from the derived one");
  } catch (const Error& e) {
    throw Error("center of '" + t.name + "' is not a Heyting algebra: " +
                e.what());
  }
  return ca;
}

Homomorphism alpha(const Algebra& g, VerifyLevel level) {
  const bool monadic = g.exists.has_value();
  require_suite(g, monadic ? "monadic-godel" : "godel");
  TwistAlgebra tw = build_twist(g);
  CenterAlgebra ca = center_algebra(tw.result);

  Homomorphism h;
  h.source = g;
  h.target = ca.result;
  for (int a = 0; a < g.size(); ++a) {
    int ti = tw.index_of(a, g.bot());
    int ci = ti < 0 ? -1 : ca.index_of(ti);
    if (ci < 0)
      throw Error("alpha image of " + g.label(a) + " is missing from the center");
    h.map.push_back(ci);
  }
  verify_natural(h, level, "alpha");
  return h;
}

Homomorphism beta(const Algebra& t, VerifyLevel level) {
  const bool monadic = t.exists.has_value();
  if (monadic) {
    require_suite(t, "monadic-nelson");
  } else {
    require_suite(t, "nelson");
    require_suite(t, "kleene-centered");
  }
  CenterAlgebra ca = center_algebra(t);
  TwistAlgebra tw = build_twist(ca.result);

  Homomorphism h;
  h.source = t;
  h.target = tw.result;
  const int c = *t.center;
  for (int x = 0; x < t.size(); ++x) {
    int u = ca.index_of(t.lat.join[x][c]);
    int v = ca.index_of(t.lat.join[t.apply1(Op::neg, x)][c]);
    int pi = (u < 0 || v < 0) ? -1 : tw.index_of(u, v);
    if (pi < 0)
      throw Error("beta image of " + t.label(x) + " escapes the twist carrier");
    h.map.push_back(pi);
  }
  verify_natural(h, level, "beta");
  return h;
}

CheckReport check_ck(const Algebra& t) {
  require_suite(t, "kleene-centered");
  return check_suite(t, "ck");
}

namespace {

void require_verified(const Homomorphism& f, const char* what) {
  CheckReport r = verify_homomorphism(f);
  if (!r.pass)
    throw Error(std::string(what) + ": input fails preservation at '" +
                r.witness->clause + "', " +
                describe_witness(f.source, *r.witness));
}

void require_family(const Algebra& a, bool nelson_side) {
  if (nelson_side) {
    if (a.exists) {
      require_suite(a, "monadic-nelson");
    } else {
      require_suite(a, "nelson");
      require_suite(a, "kleene-centered");
    }
  } else {
    require_suite(a, a.exists ? "monadic-godel" : "godel");
  }
}

}  // namespace

Homomorphism lift_hom(const Homomorphism& f) {
  require_family(f.source, /*nelson_side=*/false);
  require_family(f.target, /*nelson_side=*/false);
  require_verified(f, "lift_hom");

  TwistAlgebra ts = build_twist(f.source);
  TwistAlgebra tt = build_twist(f.target);
  Homomorphism out;
  out.source = ts.result;
  out.target = tt.result;
  for (auto [a, b] : ts.pairs) {
    int j = tt.index_of(f.map[a], f.map[b]);
    if (j < 0)
      throw Error("lifted pair (" + f.source.label(a) + "," +
                  f.source.label(b) + ") escapes the target carrier");
    out.map.push_back(j);
  }
  CheckReport r = verify_homomorphism(out);
  if (!r.pass)
    throw Error("lift_hom output fails preservation at '" +
                r.witness->clause + "'");
  return out;
}

Homomorphism drop_hom(const Homomorphism& f) {
  require_family(f.source, /*nelson_side=*/true);
  require_family(f.target, /*nelson_side=*/true);
  require_verified(f, "drop_hom");

  CenterAlgebra cs = center_algebra(f.source);
  CenterAlgebra ct = center_algebra(f.target);
  Homomorphism out;
  out.source = cs.result;
  out.target = ct.result;
  for (int e : cs.carrier) {
    int j = ct.index_of(f.map[e]);
    if (j < 0)
      throw Error("restriction of " + f.source.label(e) +
                  " falls below the target center");
    out.map.push_back(j);
  }
  CheckReport r = verify_homomorphism(out);
  if (!r.pass)
    throw Error("drop_hom output fails preservation at '" +
                r.witness->clause + "'");
  return out;
}

}  // namespace twistbench
