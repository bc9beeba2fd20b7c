#pragma once

namespace nmeasure {

/// Keeps freed heap memory mapped between loss evaluations. Batched forward
/// and reverse sweeps allocate and release multi-megabyte buffers many times
/// per second; with the glibc defaults each cycle returns the pages to the
/// kernel and faults them back in, which roughly doubles evaluation time.
/// Process-wide and idempotent; a no-op on other C libraries.
void tune_allocator_for_batches();

}  // namespace nmeasure
