// Microbenchmarks for the hot paths: order derivation, twist construction,
// suite checking, congruence enumeration and the raw quantifier search.
// Inputs come from the deterministic corpus so the numbers are comparable
// across runs and machines.

#include <benchmark/benchmark.h>

#include "twistbench/algebra.hpp"
#include "twistbench/error.hpp"
#include "twistbench/congruence.hpp"
#include "twistbench/corpus.hpp"
#include "twistbench/order.hpp"
#include "twistbench/search.hpp"
#include "twistbench/suites.hpp"
#include "twistbench/twist.hpp"

namespace {

using namespace twistbench;

// Largest corpus member: a 5-element carrier with a nontrivial quantifier
// pair, whose twist has 9 elements.
const Algebra& corpus_top() {
  static const std::vector<Algebra> corpus = monadic_godel_corpus(5);
  return corpus.back();
}

void BM_derive_lattice(benchmark::State& state) {
  Poset p = build_poset({"0", "x", "y", "z", "1"},
                        {{"0", "x"}, {"x", "y"}, {"x", "z"}, {"y", "1"}, {"z", "1"}});
  for (auto _ : state) {
    Lattice l = derive_lattice(p);
    benchmark::DoNotOptimize(l);
  }
}
BENCHMARK(BM_derive_lattice);

void BM_build_twist(benchmark::State& state) {
  const Algebra& g = corpus_top();
  for (auto _ : state) {
    TwistAlgebra tw = build_twist(g);
    benchmark::DoNotOptimize(tw);
  }
}
BENCHMARK(BM_build_twist);

void BM_check_monadic_nelson(benchmark::State& state) {
  const Algebra t = build_twist(corpus_top()).result;
  for (auto _ : state) {
    CheckReport r = check_suite(t, "monadic-nelson");
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_check_monadic_nelson);

void BM_enumerate_congruences(benchmark::State& state) {
  const Algebra t = build_twist(corpus_top()).result;
  for (auto _ : state) {
    ConLattice c = enumerate_congruences(t);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_enumerate_congruences);

void BM_check_con_iso(benchmark::State& state) {
  const Algebra& g = corpus_top();
  for (auto _ : state) {
    CheckReport r = check_con_iso(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_check_con_iso);

void BM_raw_quantifier_search(benchmark::State& state) {
  static const Algebra g = []() {
    for (const Algebra& a : godel_corpus(4))
      if (a.size() == 4) return a;
    throw Error("no 4-element member in the corpus");
  }();
  for (auto _ : state) {
    auto found = enumerate_quantifier_pairs(g, SearchMode::Raw, "monadic-godel");
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_raw_quantifier_search);

}  // namespace

BENCHMARK_MAIN();
