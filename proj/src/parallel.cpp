#include "rmt/parallel.hpp"

#include <omp.h>

namespace rmt {

namespace {
int default_threads() { return omp_get_num_procs(); }
}  // namespace

void set_thread_count(int threads) {
    omp_set_num_threads(threads < 1 ? default_threads() : threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace rmt
