#include <cstdlib>
#include <string>

#include "clausesearch/parallel.hpp"

namespace clausesearch {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CLAUSESEARCH_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace clausesearch
