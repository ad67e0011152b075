#include "latfano/parallel.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latfano {

int effective_threads() {
#ifdef _OPENMP
  int base = omp_get_max_threads();
#else
  int base = 1;
#endif
  const char* env = std::getenv("LATFANO_THREADS");
  if (!env || !*env) return base;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 0) return base;
  if (v == 0) return 1;
  return static_cast<int>(std::min<long>(v, base));
}

}  // namespace latfano
