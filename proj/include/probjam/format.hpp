#pragma once

#include <string>

namespace probjam {

/// Shortest decimal text that round-trips to the same double; "nan", "inf", "-inf" otherwise.
std::string format_double(double value);

}  // namespace probjam
