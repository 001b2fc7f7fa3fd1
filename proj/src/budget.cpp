#include "ruelle/budget.hpp"

#include <cstdlib>
#include <string>

#include "ruelle/errors.hpp"

namespace ruelle {

std::size_t enumeration_budget() {
  static const std::size_t budget = [] {
    if (const char* env = std::getenv("RUELLE_LAB_BUDGET")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1) << 24;
  }();
  return budget;
}

std::size_t checked_word_count(int alphabet_size, int length) {
  if (alphabet_size < 1 || length < 0)
    throw std::invalid_argument("checked_word_count: need m >= 1, n >= 0");
  const std::size_t budget = enumeration_budget();
  std::size_t count = 1;
  for (int i = 0; i < length; ++i) {
    if (count > budget / static_cast<std::size_t>(alphabet_size))
      throw EnumerationError("enumeration too large: " +
                             std::to_string(alphabet_size) + "^" +
                             std::to_string(length) + " exceeds budget " +
                             std::to_string(budget));
    count *= static_cast<std::size_t>(alphabet_size);
  }
  if (count > budget)
    throw EnumerationError("enumeration too large: exceeds budget " +
                           std::to_string(budget));
  return count;
}

}  // namespace ruelle
