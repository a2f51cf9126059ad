// Compares the serial reference paths against the OpenMP kernels and
// verifies both produce identical results while timing them.
//
//   bradford_bench [topics] [wilcoxon_n]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "bradford/pipeline.hpp"
#include "bradford/report.hpp"
#include "bradford/stat_tests.hpp"
#include "support/synthetic.hpp"

using namespace bradford;

namespace {

template <typename Fn>
double best_of_ms(int repetitions, Fn &&fn) {
    double best = 1e300;
    for (int r = 0; r < repetitions; ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

void print_row(const char *name, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-34s %10.1f %10.1f %9.2fx   %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
    const int topics = argc > 1 ? std::atoi(argv[1]) : 200;
    const int wilcoxon_n = argc > 2 ? std::atoi(argv[2]) : 22;

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel paths run serially\n");
#endif
    std::printf("%-34s %10s %10s %10s\n", "kernel", "serial ms", "openmp ms", "speedup");

    // per-topic pipeline over a generated corpus
    synthetic::GeneratorParams params;
    params.topics = topics;
    const synthetic::SyntheticData data = synthetic::generate(1, params);

    PipelineOptions serial_opts;
    serial_opts.workers = 1;
    PipelineOptions parallel_opts;
    parallel_opts.workers = 0;

    std::string serial_report, parallel_report;
    const double pipeline_serial = best_of_ms(3, [&] {
        const EvaluationRun run = run_topics(data.corpus, data.topics, data.qrels, serial_opts);
        serial_report = evaluation_report(run, serial_opts).dump();
    });
    const double pipeline_parallel = best_of_ms(3, [&] {
        const EvaluationRun run =
            run_topics(data.corpus, data.topics, data.qrels, parallel_opts);
        parallel_report = evaluation_report(run, parallel_opts).dump();
    });
    print_row(("topic pipeline (" + std::to_string(topics) + " topics)").c_str(),
              pipeline_serial, pipeline_parallel, serial_report == parallel_report);

    // exact Wilcoxon sign-assignment enumeration
    std::vector<std::uint32_t> ranks2x;
    for (int i = 1; i <= wilcoxon_n; ++i)
        ranks2x.push_back(static_cast<std::uint32_t>(2 * i));
    const std::uint64_t threshold = static_cast<std::uint64_t>(wilcoxon_n) *
                                    (static_cast<std::uint64_t>(wilcoxon_n) + 1) / 3;

    detail::ExactCounts serial_counts, parallel_counts;
    const double wilcoxon_serial = best_of_ms(3, [&] {
        serial_counts = detail::count_sign_assignments_serial(ranks2x, threshold);
    });
    const double wilcoxon_parallel = best_of_ms(3, [&] {
        parallel_counts = detail::count_sign_assignments_parallel(ranks2x, threshold);
    });
    print_row(("wilcoxon enumeration (n = " + std::to_string(wilcoxon_n) + ")").c_str(),
              wilcoxon_serial, wilcoxon_parallel,
              serial_counts.le == parallel_counts.le &&
                  serial_counts.ge == parallel_counts.ge);
    return 0;
}
