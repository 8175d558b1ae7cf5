#include "twistbench/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "twistbench/error.hpp"
#include "twistbench/search.hpp"
#include "twistbench/suites.hpp"

namespace twistbench {

namespace {

using Flat = std::vector<char>;  // row-major order matrix

Flat flatten(const BoolMatrix& leq) {
  Flat f;
  f.reserve(leq.size() * leq.size());
  for (const auto& row : leq)
    for (bool b : row) f.push_back(b ? 1 : 0);
  return f;
}

// Least relabeling of the order matrix across all permutations.
Flat canonical_form(const BoolMatrix& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Flat best;
  do {
    Flat cur(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][j]) cur[perm[i] * n + perm[j]] = 1;
    if (best.empty() || cur < best) best = std::move(cur);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_transitive(const BoolMatrix& leq) {
  const int n = static_cast<int>(leq.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!leq[i][j]) continue;
      for (int k = 0; k < n; ++k)
        if (leq[j][k] && !leq[i][k]) return false;
    }
  return true;
}

std::vector<std::string> element_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace

std::vector<Lattice> all_lattices(int max_size) {
  if (max_size > 5)
    throw Error("lattice enumeration capped at 5 elements, got " +
                std::to_string(max_size));
  std::vector<Lattice> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    long long total = 1;
    for (size_t s = 0; s < slots.size(); ++s) total *= 3;

    std::vector<Flat> keys;
    for (long long code = 0; code < total; ++code) {
      BoolMatrix leq(n, std::vector<bool>(n, false));
      for (int i = 0; i < n; ++i) leq[i][i] = true;
      long long c = code;
      for (auto [i, j] : slots) {
        int digit = static_cast<int>(c % 3);
        c /= 3;
        if (digit == 1) leq[i][j] = true;
        if (digit == 2) leq[j][i] = true;
      }
      if (!is_transitive(leq)) continue;
      // Keep each isomorphism class once, via its canonical labeling.
      if (canonical_form(leq) != flatten(leq)) continue;
      Poset p;
      p.names = element_names(n);
      p.leq = leq;
      try {
        Lattice l = derive_lattice(p);
        keys.push_back(flatten(leq));
        out.push_back(std::move(l));
      } catch (const Error&) {
        // not a (bounded) lattice
      }
    }
    // Enumeration emits canonical forms in code order; normalize to
    // matrix-lexicographic order within each size.
    std::vector<int> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0);
    size_t base = out.size() - keys.size();
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return keys[a] < keys[b]; });
    std::vector<Lattice> sorted;
    sorted.reserve(keys.size());
    for (int i : idx) sorted.push_back(std::move(out[base + i]));
    std::move(sorted.begin(), sorted.end(), out.begin() + base);
  }
  return out;
}

std::vector<Lattice> distributive_lattices(int max_size) {
  std::vector<Lattice> out;
  for (Lattice& l : all_lattices(max_size))
    if (check_distributive(l).pass) out.push_back(std::move(l));
  return out;
}

std::vector<Algebra> godel_corpus(int max_size) {
  std::vector<Algebra> out;
  int size_seen = 0, counter = 0;
  for (Lattice& l : distributive_lattices(max_size)) {
    AlgebraInput in;
    in.binary["himp"] = derive_himp(l);
    int n = l.poset.size();
    if (n != size_seen) {
      size_seen = n;
      counter = 0;
    }
    Algebra a = make_algebra(std::move(l), in, "");
    if (!check_suite(a, "godel").pass) continue;
    ++counter;
    a.name = "g" + std::to_string(n) + "_" + std::to_string(counter);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<Algebra> monadic_godel_corpus(int max_size) {
  std::vector<Algebra> out;
  for (const Algebra& base : godel_corpus(max_size)) {
    auto assignments = enumerate_quantifier_pairs(
        base, SearchMode::Subalgebra, "monadic-godel");
    int j = 0;
    for (const QuantifierAssignment& qa : assignments) {
      Algebra m = with_quantifiers(base, qa);
      m.name = base.name + "_q" + std::to_string(++j);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<Homomorphism> all_homomorphisms(const Algebra& s,
                                            const Algebra& t) {
  std::vector<Homomorphism> out;
  const int m = s.size(), n = t.size();
  std::vector<int> map(m, 0);
  std::vector<bool> pinned(m, false);
  map[s.bot()] = t.bot();
  map[s.top()] = t.top();
  pinned[s.bot()] = pinned[s.top()] = true;
  if (s.has_const(ConstName::center) && t.has_const(ConstName::center)) {
    map[s.constant(ConstName::center)] = t.constant(ConstName::center);
    pinned[s.constant(ConstName::center)] = true;
  }
  while (true) {
    Homomorphism h{s, t, map};
    if (verify_homomorphism(h).pass) out.push_back(std::move(h));
    int i = m - 1;
    while (i >= 0 && (pinned[i] || map[i] == n - 1)) {
      if (!pinned[i]) map[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++map[i];
  }
  return out;
}

}  // namespace twistbench
