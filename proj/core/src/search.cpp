#include "twistbench/search.hpp"

#include <algorithm>

#include "twistbench/error.hpp"
#include "twistbench/suites.hpp"

namespace twistbench {

SearchMode search_mode_from_name(const std::string& name) {
  if (name == "subalgebra") return SearchMode::Subalgebra;
  if (name == "raw") return SearchMode::Raw;
  throw Error("unknown search mode '" + name + "' (try subalgebra or raw)");
}

Algebra with_quantifiers(const Algebra& g, const QuantifierAssignment& qa) {
  if (!g.himp)
    throw Error("'" + g.name + "' has no implication to carry quantifiers");
  AlgebraInput in;
  in.binary["himp"] = *g.himp;
  in.unary["exists"] = qa.exists;
  in.unary["forall"] = qa.forall;
  return make_algebra(g.lat, in, g.name);
}

namespace {

struct PairCollector {
  const Algebra& g;
  const std::string& filter;
  std::vector<QuantifierAssignment> out;

  void emit(UnaryTable ex, UnaryTable fa, const char* provenance) {
    QuantifierAssignment qa{std::move(ex), std::move(fa), provenance};
    Algebra m = with_quantifiers(g, qa);
    if (!check_suite(m, "monadic-heyting").pass) return;
    if (filter != "monadic-heyting" && !check_suite(m, filter).pass) return;
    out.push_back(std::move(qa));
  }
};

void subalgebra_search(const Algebra& g, PairCollector& pc) {
  const int n = g.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << g.bot())) || !(mask & (1u << g.top()))) continue;
    UnaryTable ex(n), fa(n);
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      int least = -1, greatest = -1;
      for (int b = 0; b < n; ++b) {
        if (!(mask & (1u << b))) continue;
        if (g.le(a, b) && (least < 0 || g.le(b, least))) least = b;
        if (g.le(b, a) && (greatest < 0 || g.le(greatest, b))) greatest = b;
      }
      // The picked candidates must actually bound every other candidate.
      for (int b = 0; b < n && least >= 0 && greatest >= 0; ++b) {
        if (!(mask & (1u << b))) continue;
        if (g.le(a, b) && !g.le(least, b)) least = -1;
        if (g.le(b, a) && !g.le(b, greatest)) greatest = -1;
      }
      if (least < 0 || greatest < 0) {
        ok = false;
        break;
      }
      ex[a] = least;
      fa[a] = greatest;
    }
    if (ok) pc.emit(std::move(ex), std::move(fa), "subalgebra-driven");
  }
}

struct RawSearch {
  const Algebra& g;
  PairCollector& pc;
  int n;
  UnaryTable ex, fa;

  explicit RawSearch(const Algebra& a, PairCollector& c)
      : g(a), pc(c), n(a.size()), ex(n, -1), fa(n, -1) {}

  bool exists_row_fits(int x, int v) {
    if (!g.le(x, v)) return false;  // x <= Ex
    for (int y = 0; y < n; ++y) {
      if (ex[y] < 0 || y == x) continue;
      if (g.le(x, y) && !g.le(v, ex[y])) return false;
      if (g.le(y, x) && !g.le(ex[y], v)) return false;
    }
    // Idempotence, as far as it is already decided.
    if (ex[v] >= 0 && ex[v] != v) return false;
    return true;
  }

  bool exists_table_closes() {
    for (int x = 0; x < n; ++x) {
      if (ex[ex[x]] != ex[x]) return false;
      for (int y = 0; y < x; ++y)
        if (ex[g.lat.join[x][y]] != g.lat.join[ex[x]][ex[y]]) return false;
    }
    return true;
  }

  bool forall_row_fits(int x, int v) {
    if (!g.le(v, x)) return false;  // Ax <= x
    if (ex[v] != v) return false;   // EAx = Ax
    if (ex[x] == x && v != x) return false;  // identity on the image
    for (int y = 0; y < n; ++y) {
      if (fa[y] < 0 || y == x) continue;
      if (g.le(x, y) && !g.le(v, fa[y])) return false;
      if (g.le(y, x) && !g.le(fa[y], v)) return false;
    }
    return true;
  }

  void forall_at(int x) {
    if (x == n) {
      pc.emit(ex, fa, "raw");
      return;
    }
    if (x == g.top()) {
      fa[x] = x;
      forall_at(x + 1);
      fa[x] = -1;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!forall_row_fits(x, v)) continue;
      fa[x] = v;
      forall_at(x + 1);
      fa[x] = -1;
    }
  }

  void exists_at(int x) {
    if (x == n) {
      if (exists_table_closes()) forall_at(0);
      return;
    }
    if (x == g.bot()) {
      ex[x] = x;
      exists_at(x + 1);
      ex[x] = -1;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!exists_row_fits(x, v)) continue;
      ex[x] = v;
      exists_at(x + 1);
      ex[x] = -1;
    }
  }
};

}  // namespace

std::vector<QuantifierAssignment> enumerate_quantifier_pairs(
    const Algebra& g, SearchMode mode, const std::string& filter_suite,
    int raw_cap) {
  suite(filter_suite);  // validate the id before any work
  PairCollector pc{g, filter_suite, {}};
  if (mode == SearchMode::Subalgebra) {
    require_suite(g, "godel");
    subalgebra_search(g, pc);
  } else {
    require_suite(g, "heyting");
    if (g.size() > raw_cap)
      throw Error("raw mode capped at " + std::to_string(raw_cap) +
                  " elements; '" + g.name + "' has " +
                  std::to_string(g.size()) + " (raise the cap to override)");
    RawSearch rs(g, pc);
    rs.exists_at(0);
  }
  return std::move(pc.out);
}

std::optional<Witness> find_counterexample(const Algebra& a, const Formula& f) {
  // Free variables are read as universally quantified, bound in sorted name
  // order so the reported witness is deterministic.
  Formula closed = f;
  std::set<std::string> free = free_vars(f);
  for (auto it = free.rbegin(); it != free.rend(); ++it)
    closed = f_forall(*it, std::move(closed));
  CheckReport r = check_formula(a, closed);
  if (r.pass) return std::nullopt;
  return r.witness;
}

}  // namespace twistbench
