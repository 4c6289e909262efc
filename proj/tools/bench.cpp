// Compares the serial reference enumerator against the OpenMP kernel, and the
// corresponding analysis scans, on a few representative shapes.
#include "latab/enumerate.hpp"
#include "latab/isotopy_graph.hpp"

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

void bench_count(const latab::Partition& shape, int jobs) {
    auto t0 = clock_type::now();
    std::uint64_t serial = latab::count_fillings_serial(shape);
    double serial_ms = ms_since(t0);

    t0 = clock_type::now();
    std::uint64_t parallel = latab::count_fillings(shape, jobs);
    double parallel_ms = ms_since(t0);

    if (serial != parallel) {
        std::printf("MISMATCH on %s: serial %llu vs parallel %llu\n", shape.to_string().c_str(),
                    static_cast<unsigned long long>(serial), static_cast<unsigned long long>(parallel));
        return;
    }
    std::printf("count %-12s %12llu fillings   serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n",
                shape.to_string().c_str(), static_cast<unsigned long long>(serial), serial_ms,
                parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

void bench_wpc(int max_boxes, int jobs) {
    auto t0 = clock_type::now();
    auto serial = latab::verify_wpc_range(max_boxes, true, 1);
    double serial_ms = ms_since(t0);
    t0 = clock_type::now();
    auto parallel = latab::verify_wpc_range(max_boxes, true, jobs);
    double parallel_ms = ms_since(t0);
    std::printf("wpc   max-n %-6d %12zu shapes     serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n",
                max_boxes, serial.size(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 0;
    if (argc > 1) jobs = std::atoi(argv[1]);
#ifdef _OPENMP
    std::printf("threads: %d\n", jobs > 0 ? jobs : omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    bench_count(latab::Partition({9}), jobs);
    bench_count(latab::Partition({10}), jobs);
    bench_count(latab::Partition({6, 5, 4}), jobs);
    bench_count(latab::Partition({7, 6, 2}), jobs);
    bench_wpc(11, jobs);
    return 0;
}
