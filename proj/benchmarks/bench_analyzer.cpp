#include <benchmark/benchmark.h>

#include <string>

#include "patentscore/analyzer.hpp"

namespace {

const std::string kClaim =
    "A device for processing data, comprising: a memory configured to store input "
    "data; a processor coupled to the memory and configured to process data; an "
    "interface coupled to the processor; and a battery connected to the processor "
    "and the memory; wherein the processor updates rules based on feedback.";

void BM_ParseClaim(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::analyzer::parse_claim(kClaim));
}
BENCHMARK(BM_ParseClaim);

void BM_CheckPunctuation(benchmark::State& state) {
  patentscore::analyzer::ParsedClaim parsed = patentscore::analyzer::parse_claim(kClaim);
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::analyzer::check_punctuation(parsed));
}
BENCHMARK(BM_CheckPunctuation);

void BM_ScanAntecedents(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::analyzer::scan_antecedents(kClaim));
}
BENCHMARK(BM_ScanAntecedents);

void BM_ScanAntecedentsLongClaim(benchmark::State& state) {
  std::string body = "A system comprising: ";
  for (int i = 0; i < state.range(0); ++i) {
    body += "a module ";
    body += std::to_string(i);
    body += " connected to the module ";
    body += std::to_string(i / 2);
    body += "; ";
  }
  body += "and a controller.";
  for (auto _ : state)
    benchmark::DoNotOptimize(patentscore::analyzer::scan_antecedents(body));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ScanAntecedentsLongClaim)->Range(8, 1 << 10)->Complexity();

}  // namespace

BENCHMARK_MAIN();
