#pragma once

#include <cstddef>
#include <functional>

namespace kuramoto_signed {

/// Worker count: hardware concurrency, capped by KURAMOTO_SIGNED_THREADS when set to a
/// positive integer. Always at least 1.
[[nodiscard]] std::size_t worker_count();

/// Runs body(i) for i in [0, count) across worker_count() threads. Each index runs exactly
/// once; results must be written to per-index slots. If any call throws, the exception from
/// the smallest failing index is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kuramoto_signed
