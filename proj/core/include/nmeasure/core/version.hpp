#pragma once

#include <string>

namespace nmeasure {

/// Library version, "major.minor.patch".
std::string version();

}  // namespace nmeasure
