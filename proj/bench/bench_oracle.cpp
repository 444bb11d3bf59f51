// Serial vs OpenMP membership of enumerated ground terms in a pattern set.

#include <benchmark/benchmark.h>

#include "strictpat/algebra.hpp"
#include "strictpat/complement.hpp"
#include "strictpat/io.hpp"
#include "strictpat/oracle.hpp"
#include "strictpat/selftest.hpp"
#include "strictpat/text.hpp"

using namespace strictpat;

namespace {

struct Fixture {
  Signature sig = parse_signature(bundled::kLamSig);
  Type exp = Type::atom("exp");
  PatternSet set;
  std::vector<Term> terms;

  explicit Fixture(std::size_t size)
      : set(complement(sig, parse_pattern(sig, {}, exp, "lam @1 (\\x^u:exp. app @1 E[x^0] @1 x)"))),
        terms(enumerate_ground(sig, {}, exp, size)) {}
};

void BM_MembershipSerial(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(membership_serial(f.sig, f.terms, f.set));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.terms.size()));
}

void BM_MembershipParallel(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(membership_parallel(f.sig, f.terms, f.set));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(f.terms.size()));
}

}  // namespace

BENCHMARK(BM_MembershipSerial)->Arg(6)->Arg(8);
BENCHMARK(BM_MembershipParallel)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
