#include "eulerg/grid.hpp"

#if defined(EULERG_HAVE_OPENMP)
#include <omp.h>
#endif

namespace eulerg {

int grid_threads() {
#if defined(EULERG_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace eulerg
