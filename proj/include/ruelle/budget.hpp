#pragma once

#include <cstddef>
#include <cstdint>

namespace ruelle {

// Enumeration budget: the largest m^n this process is willing to walk.
// Defaults to 2^24; the RUELLE_LAB_BUDGET environment variable overrides it
// (read once, at first use).
std::size_t enumeration_budget();

// m^n with overflow detection; throws EnumerationError when the count
// exceeds the budget.
std::size_t checked_word_count(int alphabet_size, int length);

}  // namespace ruelle
