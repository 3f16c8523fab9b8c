#pragma once

namespace rmt {

/// Selects between the OpenMP kernel and its serial reference loop.
/// Both produce bit-identical results; the serial path is kept for tests
/// and benchmarks.
enum class Execution { serial, parallel };

/// Worker count used by Execution::parallel kernels. Values < 1 restore the
/// OpenMP default.
void set_thread_count(int threads);
int thread_count();

}  // namespace rmt
