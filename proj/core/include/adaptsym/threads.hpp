#pragma once

namespace adaptsym {

// Applies the ADAPTSYM_THREADS cap (if set) to OpenMP and Eigen; returns the
// effective thread count. Safe to call repeatedly.
int init_threads();

}  // namespace adaptsym
