#include "nmeasure/core/version.hpp"

#ifndef NMEASURE_VERSION
#define NMEASURE_VERSION "0.0.0"
#endif

namespace nmeasure {

std::string version() { return NMEASURE_VERSION; }

}  // namespace nmeasure
