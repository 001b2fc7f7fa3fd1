#pragma once

#include <string>

namespace ruelle {

// Numeric formatting for CSV output: 17 significant digits, dot decimal
// separator, independent of locale.
std::string format_number(double x);

void write_text_file(const std::string& path, const std::string& content);
std::string timestamp_utc();

}  // namespace ruelle
