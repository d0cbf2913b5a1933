// Times the verification kernels in their serial-reference and
// OpenMP-parallel flavors on the standard desk-scale workloads and reports
// the speedup. Both flavors must agree on every report; this driver checks
// that too, so a benchmark run doubles as a consistency pass.

#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "latbij/verify.hpp"

using namespace latbij;

namespace {

struct Workload {
    std::string name;
    Report (*run)(ExecMode);
};

Report run_schroder(ExecMode mode) {
    return check_bijection(BijectionId::schroder, {9, -1}, mode);
}
Report run_kimberling(ExecMode mode) {
    return check_bijection(BijectionId::kimberling, {6, 5}, mode);
}
Report run_deutsch(ExecMode mode) {
    return check_bijection(BijectionId::deutsch, {14, -1}, mode);
}
Report run_confluence(ExecMode mode) { return check_confluence(9, mode); }

bool reports_equal(const Report& a, const Report& b) {
    if (a.sizes.size() != b.sizes.size()) return false;
    for (std::size_t i = 0; i < a.sizes.size(); ++i) {
        const auto& x = a.sizes[i];
        const auto& y = b.sizes[i];
        if (x.key != y.key || x.domain_count != y.domain_count ||
            x.codomain_count != y.codomain_count ||
            x.round_trip_failures != y.round_trip_failures ||
            x.codomain_violations != y.codomain_violations ||
            x.confluence_mismatches != y.confluence_mismatches ||
            x.count_mismatches != y.count_mismatches)
            return false;
    }
    return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP; parallel falls back to serial)\n");
#endif
    std::printf("%-22s %10s %10s %8s %6s\n", "workload", "serial[s]",
                "parallel[s]", "speedup", "agree");

    const Workload workloads[] = {
        {"schroder n<=9", run_schroder},
        {"kimberling i<=6 j<=5", run_kimberling},
        {"deutsch n<=14", run_deutsch},
        {"confluence n<=9", run_confluence},
    };

    bool all_ok = true;
    for (const auto& w : workloads) {
        Report serial = w.run(ExecMode::serial);
        Report parallel = w.run(ExecMode::parallel);
        bool agree = reports_equal(serial, parallel) && serial.pass() &&
                     parallel.pass();
        all_ok = all_ok && agree;
        std::printf("%-22s %10.3f %10.3f %8.2fx %6s\n", w.name.c_str(),
                    serial.elapsed_seconds, parallel.elapsed_seconds,
                    serial.elapsed_seconds /
                        (parallel.elapsed_seconds > 0 ? parallel.elapsed_seconds
                                                      : 1e-9),
                    agree ? "yes" : "NO");
    }
    return all_ok ? 0 : 1;
}
