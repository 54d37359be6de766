#pragma once

#include <functional>

namespace pam {

// worker count from PAM_WORKERS (default: hardware concurrency)
int worker_count();

// runs fn(0..n-1) on the worker pool; results must be written to
// caller-owned per-index slots so scheduling cannot change outputs
void parallel_for(int n, const std::function<void(int)>& fn);

} // namespace pam
