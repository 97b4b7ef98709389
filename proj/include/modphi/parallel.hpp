#ifndef MODPHI_PARALLEL_HPP
#define MODPHI_PARALLEL_HPP

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace modphi {

// Work is cut into fixed chunks up front; each chunk produces a partial result
// and partials are folded in chunk order. The chunk layout does not depend on
// the thread count, so parallel and serial runs produce identical output bit
// for bit. Every OpenMP kernel in this project goes through here and keeps a
// serial reference path (parallel = false) for the comparison tests and the
// benchmark target.
template <class Partial, class ChunkFn, class FoldFn>
Partial chunked_reduce(std::int64_t n_items, std::int64_t chunk_size, Partial init,
                       ChunkFn per_chunk, FoldFn fold, bool parallel) {
    if (n_items <= 0) return init;
    if (chunk_size <= 0) chunk_size = 1;
    std::int64_t n_chunks = (n_items + chunk_size - 1) / chunk_size;
    std::vector<Partial> partials((size_t)n_chunks);

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            std::int64_t lo = c * chunk_size;
            std::int64_t hi = std::min(n_items, lo + chunk_size);
            partials[(size_t)c] = per_chunk(c, lo, hi);
        }
    } else {
        for (std::int64_t c = 0; c < n_chunks; ++c) {
            std::int64_t lo = c * chunk_size;
            std::int64_t hi = std::min(n_items, lo + chunk_size);
            partials[(size_t)c] = per_chunk(c, lo, hi);
        }
    }

    Partial acc = init;
    for (std::int64_t c = 0; c < n_chunks; ++c) acc = fold(acc, partials[(size_t)c]);
    return acc;
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace modphi

#endif
