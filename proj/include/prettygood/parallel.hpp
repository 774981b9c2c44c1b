#pragma once

// Data-parallel loop used by the sweep kernels. The serial path is the
// reference implementation; the OpenMP path must produce identical results.

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prettygood {

enum class Execution { serial, parallel };

int max_threads();

/// Runs body(i) for i in [0, n). Exceptions thrown inside the parallel region
/// are captured and the first one is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
    if (exec == Execution::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace prettygood
