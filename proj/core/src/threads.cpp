#include "adaptsym/threads.hpp"

#include <cstdlib>

#include <Eigen/Core>

#ifdef ADAPTSYM_HAVE_OPENMP
#include <omp.h>
#endif

namespace adaptsym {

int init_threads() {
  int n = 0;
  if (const char* env = std::getenv("ADAPTSYM_THREADS")) {
    n = std::atoi(env);
    if (n < 1) n = 1;
  }
#ifdef ADAPTSYM_HAVE_OPENMP
  if (n > 0) omp_set_num_threads(n);
  if (n == 0) n = omp_get_max_threads();
#else
  if (n == 0) n = 1;
#endif
  Eigen::setNbThreads(n);
  return n;
}

}  // namespace adaptsym
