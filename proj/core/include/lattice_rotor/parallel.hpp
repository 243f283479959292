// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>

namespace lattice_rotor {

// Worker count: LATTICE_ROTOR_THREADS if set and positive, else the hardware
// concurrency (at least 1).
unsigned worker_count();

// Calls fn(i) for i in [0, n) on worker_count() threads, in contiguous
// chunks. Callers write results into slot i, so the outcome does not depend
// on scheduling. The first exception thrown by fn is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lattice_rotor
