#include "rank2/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rank2 {

int resolve_threads(int requested) {
  if (const char* env = std::getenv("GREEDY_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the requested value
    }
  }
  return std::max(1, requested);
}

} // namespace rank2
