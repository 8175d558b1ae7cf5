#include "twistbench/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "twistbench/error.hpp"
#include "twistbench/order.hpp"
#include "twistbench/suites.hpp"

namespace twistbench {

int Congruence::block_count() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

std::string Congruence::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < block.size(); ++i) {
    if (i) out << ',';
    out << block[i];
  }
  out << ']';
  return out.str();
}

Congruence identity_congruence(int n) {
  Congruence c;
  c.block.resize(n);
  std::iota(c.block.begin(), c.block.end(), 0);
  return c;
}

Congruence total_congruence(int n) {
  Congruence c;
  c.block.assign(n, 0);
  return c;
}

Congruence canonicalize(std::vector<int> raw) {
  std::map<int, int> relabel;
  for (int& b : raw) {
    auto [it, fresh] = relabel.emplace(b, static_cast<int>(relabel.size()));
    b = it->second;
    (void)fresh;
  }
  return Congruence{std::move(raw)};
}

namespace {

void con_failure(CheckReport& rep, std::string clause, int x, int xp, int y,
                 int yp, int lhs, int rhs, bool binary) {
  Witness w;
  w.clause = std::move(clause);
  if (binary)
    w.assignment = {{"x", x}, {"x'", xp}, {"y", y}, {"y'", yp}};
  else
    w.assignment = {{"x", x}, {"x'", xp}};
  w.lhs = lhs;
  w.rhs = rhs;
  rep = CheckReport::fail(std::move(w));
}

}  // namespace

CheckReport verify_congruence(const Algebra& a, const Congruence& c) {
  if (c.size() != a.size())
    throw Error("congruence has " + std::to_string(c.size()) +
                " entries for a carrier of " + std::to_string(a.size()));
  for (int b : c.block)
    if (b < 0 || b >= a.size()) throw Error("block id out of range");

  CheckReport rep;
  const int n = a.size();
  for (Op op : a.present_ops()) {
    std::string clause = "con:" + std::string(op_name(op));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!c.same(u, v)) continue;
        if (op_is_binary(op)) {
          for (int z = 0; z < n; ++z) {
            int lhs = a.apply2(op, u, z), rhs = a.apply2(op, v, z);
            if (!c.same(lhs, rhs)) {
              con_failure(rep, clause, u, v, z, z, lhs, rhs, true);
              return rep;
            }
            lhs = a.apply2(op, z, u);
            rhs = a.apply2(op, z, v);
            if (!c.same(lhs, rhs)) {
              con_failure(rep, clause, z, z, u, v, lhs, rhs, true);
              return rep;
            }
          }
        } else {
          int lhs = a.apply1(op, u), rhs = a.apply1(op, v);
          if (!c.same(lhs, rhs)) {
            con_failure(rep, clause, u, v, 0, 0, lhs, rhs, false);
            return rep;
          }
        }
      }
  }
  return rep;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

Congruence from_union_find(UnionFind& uf) {
  std::vector<int> raw(uf.parent.size());
  for (size_t i = 0; i < raw.size(); ++i) raw[i] = uf.find(static_cast<int>(i));
  return canonicalize(std::move(raw));
}

}  // namespace

Congruence principal_congruence(const Algebra& a, int x, int y) {
  const int n = a.size();
  if (x < 0 || x >= n || y < 0 || y >= n)
    throw Error("element index out of range");
  UnionFind uf(n);
  uf.unite(x, y);
  // Merge operation images of related tuples until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Op op : a.present_ops())
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (uf.find(u) != uf.find(v)) continue;
          if (op_is_binary(op)) {
            for (int z = 0; z < n; ++z) {
              changed |= uf.unite(a.apply2(op, u, z), a.apply2(op, v, z));
              changed |= uf.unite(a.apply2(op, z, u), a.apply2(op, z, v));
            }
          } else {
            changed |= uf.unite(a.apply1(op, u), a.apply1(op, v));
          }
        }
  }
  return from_union_find(uf);
}

bool refines(const Congruence& fine, const Congruence& coarse) {
  if (fine.size() != coarse.size())
    throw Error("congruences live on different carriers");
  std::map<int, int> to_coarse;
  for (int i = 0; i < fine.size(); ++i) {
    auto [it, fresh] = to_coarse.emplace(fine.block[i], coarse.block[i]);
    if (!fresh && it->second != coarse.block[i]) return false;
  }
  return true;
}

Congruence meet_congruence(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size())
    throw Error("congruences live on different carriers");
  std::map<std::pair<int, int>, int> relabel;
  std::vector<int> raw(a.size());
  for (int i = 0; i < a.size(); ++i) {
    auto key = std::make_pair(a.block[i], b.block[i]);
    auto [it, fresh] = relabel.emplace(key, static_cast<int>(relabel.size()));
    raw[i] = it->second;
    (void)fresh;
  }
  return Congruence{std::move(raw)};
}

Congruence join_congruence(const Congruence& a, const Congruence& b) {
  if (a.size() != b.size())
    throw Error("congruences live on different carriers");
  UnionFind uf(a.size());
  std::map<int, int> first_a, first_b;
  for (int i = 0; i < a.size(); ++i) {
    auto [ita, fa] = first_a.emplace(a.block[i], i);
    if (!fa) uf.unite(i, ita->second);
    auto [itb, fb] = first_b.emplace(b.block[i], i);
    if (!fb) uf.unite(i, itb->second);
  }
  return from_union_find(uf);
}

int ConLattice::index_of(const Congruence& c) const {
  auto it = std::find(congruences.begin(), congruences.end(), c);
  return it == congruences.end() ? -1
                                 : static_cast<int>(it - congruences.begin());
}

std::vector<Congruence> brute_force_congruences(const Algebra& a) {
  const int n = a.size();
  if (n > 10)
    throw Error("partition enumeration capped at 10 elements; '" + a.name +
                "' has " + std::to_string(n));
  std::vector<Congruence> out;
  // Restricted growth strings are exactly the canonical block vectors.
  std::vector<int> rgs(n, 0), maxv(n, 0);
  while (true) {
    Congruence c{rgs};
    if (verify_congruence(a, c).pass) out.push_back(std::move(c));
    int j = n - 1;
    while (j > 0 && rgs[j] == maxv[j - 1] + 1) --j;
    if (j == 0) break;
    ++rgs[j];
    maxv[j] = std::max(maxv[j - 1], rgs[j]);
    for (int k = j + 1; k < n; ++k) {
      rgs[k] = 0;
      maxv[k] = maxv[k - 1];
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Congruence& x, const Congruence& y) {
              return x.block < y.block;
            });
  return out;
}

ConLattice enumerate_congruences(const Algebra& a, bool force_oracle) {
  const int n = a.size();
  std::set<std::vector<int>> seen;
  std::vector<Congruence> found;
  auto add = [&](Congruence c) {
    if (seen.insert(c.block).second) found.push_back(std::move(c));
  };
  add(identity_congruence(n));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) add(principal_congruence(a, x, y));
  // Close under joins; every congruence is a join of principal ones.
  for (size_t i = 0; i < found.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(join_congruence(found[i], found[j]));

  for (const Congruence& c : found) {
    CheckReport r = verify_congruence(a, c);
    if (!r.pass)
      throw Error("enumerated relation " + c.to_string() +
                  " fails compatibility on '" + a.name + "' at '" +
                  r.witness->clause + "'");
  }
  std::sort(found.begin(), found.end(),
            [](const Congruence& x, const Congruence& y) {
              return x.block < y.block;
            });
  if (n <= 6 || force_oracle) {
    if (found != brute_force_congruences(a))
      throw Error("principal enumeration disagrees with the partition filter "
                  "for '" + a.name + "'");
  }

  ConLattice cl;
  cl.congruences = std::move(found);
  const int m = static_cast<int>(cl.congruences.size());
  Poset p;
  p.names.reserve(m);
  for (const Congruence& c : cl.congruences) p.names.push_back(c.to_string());
  p.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      p.leq[i][j] = refines(cl.congruences[i], cl.congruences[j]);
  cl.lat = derive_lattice(p);
  return cl;
}

Congruence gamma_theta(const Congruence& theta, const TwistAlgebra& tw) {
  CheckReport pre = verify_congruence(tw.base, theta);
  if (!pre.pass)
    throw Error("theta " + theta.to_string() + " is not a congruence of '" +
                tw.base.name + "': fails at '" + pre.witness->clause + "'");
  std::map<std::pair<int, int>, int> relabel;
  std::vector<int> raw;
  raw.reserve(tw.pairs.size());
  for (auto [a, b] : tw.pairs) {
    auto key = std::make_pair(theta.block[a], theta.block[b]);
    auto [it, fresh] = relabel.emplace(key, static_cast<int>(relabel.size()));
    raw.push_back(it->second);
    (void)fresh;
  }
  Congruence gamma{std::move(raw)};
  CheckReport post = verify_congruence(tw.result, gamma);
  if (!post.pass)
    throw Error("induced relation " + gamma.to_string() +
                " is not a congruence of '" + tw.result.name + "': fails at '" +
                post.witness->clause + "'");
  return gamma;
}

Congruence theta_gamma(const Congruence& gamma, const TwistAlgebra& tw) {
  CheckReport pre = verify_congruence(tw.result, gamma);
  if (!pre.pass)
    throw Error("gamma " + gamma.to_string() + " is not a congruence of '" +
                tw.result.name + "': fails at '" + pre.witness->clause + "'");
  std::vector<int> raw;
  raw.reserve(tw.base.size());
  for (int a = 0; a < tw.base.size(); ++a) {
    int i = tw.index_of(a, tw.base.bot());
    if (i < 0) throw Error("pair (a,0) missing from the twist carrier");
    raw.push_back(gamma.block[i]);
  }
  Congruence theta = canonicalize(std::move(raw));
  CheckReport post = verify_congruence(tw.base, theta);
  if (!post.pass)
    throw Error("induced relation " + theta.to_string() +
                " is not a congruence of '" + tw.base.name + "': fails at '" +
                post.witness->clause + "'");
  return theta;
}

namespace {

CheckReport iso_failure(const std::string& step, std::string note) {
  Witness w;
  w.clause = step;
  CheckReport rep = CheckReport::fail(std::move(w));
  rep.note = std::move(note);
  return rep;
}

}  // namespace

CheckReport check_con_iso(const Algebra& g) {
  require_suite(g, "monadic-godel");
  TwistAlgebra tw = build_twist(g);
  ConLattice cg = enumerate_congruences(g);
  ConLattice ck = enumerate_congruences(tw.result);
  const int n = static_cast<int>(cg.congruences.size());
  const int m = static_cast<int>(ck.congruences.size());
  if (n != m)
    return iso_failure("con-iso:size",
                       std::to_string(n) + " congruences of '" + g.name +
                           "' vs " + std::to_string(m) + " of '" +
                           tw.result.name + "'");
  std::vector<int> image;
  std::vector<bool> hit(m, false);
  for (const Congruence& theta : cg.congruences) {
    Congruence gamma = gamma_theta(theta, tw);
    int idx = ck.index_of(gamma);
    if (idx < 0)
      return iso_failure("con-iso:membership",
                         "image of " + theta.to_string() +
                             " missing from the twist congruences");
    if (hit[idx])
      return iso_failure("con-iso:bijection",
                         "two congruences map onto " + gamma.to_string());
    hit[idx] = true;
    image.push_back(idx);
    if (theta_gamma(gamma, tw) != theta)
      return iso_failure("con-iso:round-trip",
                         theta.to_string() + " is not recovered from its image");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      bool base = refines(cg.congruences[i], cg.congruences[j]);
      bool twisted =
          refines(ck.congruences[image[i]], ck.congruences[image[j]]);
      if (base != twisted)
        return iso_failure("con-iso:order",
                           "order of " + cg.congruences[i].to_string() +
                               " and " + cg.congruences[j].to_string() +
                               " is not preserved");
    }
  for (const Congruence& gamma : ck.congruences) {
    if (gamma_theta(theta_gamma(gamma, tw), tw) != gamma)
      return iso_failure("con-iso:round-trip",
                         gamma.to_string() + " is not recovered from its drop");
  }
  CheckReport rep;
  rep.note = std::to_string(n) + " congruences on each side";
  return rep;
}

namespace {

// Quantifier-image subalgebra: the fixpoints of the closure operator with the
// restricted implication.
Algebra image_subalgebra(const Algebra& g) {
  const UnaryTable& ex = *g.exists;
  std::vector<int> carrier;
  for (int u = 0; u < g.size(); ++u)
    if (ex[u] == u) carrier.push_back(u);
  const int m = static_cast<int>(carrier.size());
  std::vector<int> inv(g.size(), -1);
  for (int i = 0; i < m; ++i) inv[carrier[i]] = i;

  Poset p;
  for (int e : carrier) p.names.push_back(g.label(e));
  p.leq.assign(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) p.leq[i][j] = g.le(carrier[i], carrier[j]);
  Lattice lat = derive_lattice(p);

  AlgebraInput in;
  BinaryTable himp(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int e = g.apply2(Op::himp, carrier[i], carrier[j]);
      if (inv[e] < 0)
        throw Error("quantifier image of '" + g.name +
                    "' is not closed under the implication at " +
                    g.label(carrier[i]) + ", " + g.label(carrier[j]));
      himp[i][j] = inv[e];
    }
  in.binary["himp"] = std::move(himp);
  return make_algebra(std::move(lat), in, "E(" + g.name + ")");
}

}  // namespace

CheckReport check_lemma23_con(const Algebra& g) {
  require_suite(g, "monadic-godel");
  Algebra s = image_subalgebra(g);
  std::vector<int> carrier;
  for (int u = 0; u < g.size(); ++u)
    if ((*g.exists)[u] == u) carrier.push_back(u);
  ConLattice cg = enumerate_congruences(g);
  ConLattice cs = enumerate_congruences(s);
  const int n = static_cast<int>(cg.congruences.size());
  if (n == static_cast<int>(cs.congruences.size())) {
    // Candidate: restrict each congruence to the image.
    std::vector<int> image;
    std::vector<bool> hit(n, false);
    bool ok = true;
    for (const Congruence& theta : cg.congruences) {
      std::vector<int> raw;
      for (int e : carrier) raw.push_back(theta.block[e]);
      int idx = cs.index_of(canonicalize(std::move(raw)));
      if (idx < 0 || hit[idx]) {
        ok = false;
        break;
      }
      hit[idx] = true;
      image.push_back(idx);
    }
    if (ok)
      for (int i = 0; ok && i < n; ++i)
        for (int j = 0; ok && j < n; ++j)
          if (refines(cg.congruences[i], cg.congruences[j]) !=
              refines(cs.congruences[image[i]], cs.congruences[image[j]]))
            ok = false;
    if (ok) {
      CheckReport rep;
      rep.note = "restriction map is an order isomorphism (" +
                 std::to_string(n) + " congruences)";
      return rep;
    }
  }
  if (order_isomorphic(cg.lat.poset, cs.lat.poset)) {
    CheckReport rep;
    rep.note = "order-isomorphic by search; the restriction map is not the "
               "isomorphism";
    return rep;
  }
  return iso_failure("lemma23-con",
                     std::to_string(n) + " congruences of '" + g.name +
                         "' vs " +
                         std::to_string(cs.congruences.size()) + " of '" +
                         s.name + "', not order-isomorphic");
}

bool order_isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  const int n = p.size();
  if (n > 10)
    throw Error("order isomorphism search capped at 10 elements");
  auto signature = [](const Poset& x, int i) {
    int below = 0, above = 0;
    for (int j = 0; j < x.size(); ++j) {
      if (x.leq[j][i]) ++below;
      if (x.leq[i][j]) ++above;
    }
    return std::make_pair(below, above);
  };
  std::vector<std::pair<int, int>> sp(n), sq(n);
  for (int i = 0; i < n; ++i) {
    sp[i] = signature(p, i);
    sq[i] = signature(q, i);
  }
  {
    auto mp = sp, mq = sq;
    std::sort(mp.begin(), mp.end());
    std::sort(mq.begin(), mq.end());
    if (mp != mq) return false;
  }
  std::vector<int> assign(n, -1);
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int cand = 0; cand < n; ++cand) {
      if (used[cand] || sp[i] != sq[cand]) continue;
      bool fits = true;
      for (int j = 0; j < i && fits; ++j)
        fits = (p.leq[i][j] == q.leq[cand][assign[j]]) &&
               (p.leq[j][i] == q.leq[assign[j]][cand]);
      if (!fits) continue;
      assign[i] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      assign[i] = -1;
    }
    return false;
  };
  return dfs(dfs, 0);
}

}  // namespace twistbench
