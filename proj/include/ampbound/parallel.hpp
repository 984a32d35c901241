#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ampbound {

// Execution mode for the data-parallel kernels. Every parallel kernel has a
// serial twin that produces bit-identical output; tests compare the two and
// the benchmark tool times them.
enum class Exec { Serial, Par };

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Index-space parallel for. The body must only write to per-index slots so
// the result is independent of the schedule.
template <typename F>
void parallel_for(std::size_t n, Exec exec, F&& body) {
#ifdef _OPENMP
    if (exec == Exec::Par && n > 2048) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    (void)exec;
    for (std::size_t i = 0; i < n; ++i) body(i);
}

// Chunked std::sort + pairwise inplace_merge. Comparison-based, so the sorted
// value sequence is identical to std::sort regardless of thread count.
inline void parallel_sort(std::vector<double>& v, Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::Par && v.size() > 1u << 15) {
        const int threads = hardware_threads();
        int chunks = 1;
        while (chunks < threads) chunks *= 2;
        const std::size_t n = v.size();
        std::vector<std::size_t> edge(chunks + 1);
        for (int c = 0; c <= chunks; ++c) edge[c] = n * c / chunks;
#pragma omp parallel for schedule(dynamic)
        for (int c = 0; c < chunks; ++c)
            std::sort(v.begin() + edge[c], v.begin() + edge[c + 1]);
        for (int width = 1; width < chunks; width *= 2) {
#pragma omp parallel for schedule(dynamic)
            for (int c = 0; c < chunks; c += 2 * width) {
                const int mid = c + width, hi = std::min(c + 2 * width, chunks);
                if (mid < hi)
                    std::inplace_merge(v.begin() + edge[c], v.begin() + edge[mid],
                                       v.begin() + edge[hi]);
            }
        }
        return;
    }
#endif
    (void)exec;
    std::sort(v.begin(), v.end());
}

}  // namespace ampbound
