#include "twistbench/order.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "twistbench/error.hpp"

namespace twistbench {

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name) return i;
  return -1;
}

Poset build_poset(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(names.size());
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(names[i], i).second)
      throw Error("duplicate label '" + names[i] + "'");
  }

  Poset p;
  p.names = names;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq[i][i] = true;

  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw Error("unknown label '" + lo + "' in cover");
    if (b == index.end()) throw Error("unknown label '" + hi + "' in cover");
    if (a->second == b->second)
      throw Error("cycle detected: cover " + lo + "<" + hi);
    p.leq[a->second][b->second] = true;
  }

  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = true;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq[i][j] && p.leq[j][i])
        throw Error("cycle detected: " + names[i] + " and " + names[j] +
                    " order each other");
  return p;
}

namespace {

std::string bound_set_message(const Poset& p, const std::vector<int>& elems) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < elems.size(); ++i)
    os << (i ? ", " : "") << p.label(elems[i]);
  os << "}";
  return os.str();
}

// Unique greatest element of `candidates`, or -1.
int greatest_of(const Poset& p, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool all = true;
    for (int d : candidates)
      if (!p.le(d, c)) {
        all = false;
        break;
      }
    if (all) return c;
  }
  return -1;
}

int least_of(const Poset& p, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool all = true;
    for (int d : candidates)
      if (!p.le(c, d)) {
        all = false;
        break;
      }
    if (all) return c;
  }
  return -1;
}

std::vector<int> maximal_of(const Poset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int c : s) {
    bool dominated = false;
    for (int d : s)
      if (d != c && p.le(c, d)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(c);
  }
  return out;
}

std::vector<int> minimal_of(const Poset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int c : s) {
    bool dominated = false;
    for (int d : s)
      if (d != c && p.le(d, c)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(c);
  }
  return out;
}

}  // namespace

Lattice derive_lattice(const Poset& p) {
  const int n = p.size();
  if (n == 0) throw Error("empty carrier is not a lattice");

  Lattice l;
  l.poset = p;
  l.meet.assign(n, std::vector<int>(n, -1));
  l.join.assign(n, std::vector<int>(n, -1));

  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      std::vector<int> lower, upper;
      for (int c = 0; c < n; ++c) {
        if (p.le(c, a) && p.le(c, b)) lower.push_back(c);
        if (p.le(a, c) && p.le(b, c)) upper.push_back(c);
      }
      int glb = greatest_of(p, lower);
      if (glb < 0)
        throw Error("not a lattice: pair (" + p.label(a) + ", " + p.label(b) +
                    ") has maximal lower bounds " +
                    bound_set_message(p, maximal_of(p, lower)) +
                    " but no greatest one");
      int lub = least_of(p, upper);
      if (lub < 0)
        throw Error("not a lattice: pair (" + p.label(a) + ", " + p.label(b) +
                    ") has minimal upper bounds " +
                    bound_set_message(p, minimal_of(p, upper)) +
                    " but no least one");
      l.meet[a][b] = l.meet[b][a] = glb;
      l.join[a][b] = l.join[b][a] = lub;
    }
  }

  for (int c = 0; c < n; ++c) {
    bool is_bot = true, is_top = true;
    for (int a = 0; a < n; ++a) {
      is_bot = is_bot && p.le(c, a);
      is_top = is_top && p.le(a, c);
    }
    if (is_bot) l.bot = c;
    if (is_top) l.top = c;
  }
  if (l.bot < 0) throw Error("not a bounded lattice: no global bottom");
  if (l.top < 0) throw Error("not a bounded lattice: no global top");
  return l;
}

CheckReport check_distributive(const Lattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = l.meet[a][l.join[b][c]];
        int rhs = l.join[l.meet[a][b]][l.meet[a][c]];
        if (lhs != rhs) {
          Witness w;
          w.assignment = {{"a", a}, {"b", b}, {"c", c}};
          w.lhs = lhs;
          w.rhs = rhs;
          return CheckReport::fail(std::move(w));
        }
      }
  return CheckReport::ok();
}

int relative_pseudocomplement(const Lattice& l, int a, int b) {
  std::vector<int> candidates;
  for (int c = 0; c < l.size(); ++c)
    if (l.le(l.meet[a][c], b)) candidates.push_back(c);
  int m = greatest_of(l.poset, candidates);
  if (m < 0)
    throw Error("no relative pseudocomplement for pair (" + l.label(a) + ", " +
                l.label(b) + "): candidates " +
                bound_set_message(l.poset, maximal_of(l.poset, candidates)) +
                " have no greatest element");
  return m;
}

BinaryTable derive_himp(const Lattice& l) {
  const int n = l.size();
  BinaryTable t(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = relative_pseudocomplement(l, a, b);
  return t;
}

}  // namespace twistbench
