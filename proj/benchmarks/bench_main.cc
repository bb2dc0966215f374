// The packaged libbenchmark_main.a ships slim-LTO objects our toolchain
// cannot read; expanding the macro here keeps the link against the shared
// library only.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
