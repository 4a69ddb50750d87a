#include "momo/batch.hpp"

#include <algorithm>

namespace momo::batch {

int resolve_jobs(int requested) {
  if (requested >= 1) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return std::max(1, static_cast<int>(hw));
}

}  // namespace momo::batch
