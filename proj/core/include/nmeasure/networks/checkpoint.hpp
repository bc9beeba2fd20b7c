#pragma once

#include <filesystem>

#include "nmeasure/networks/mlp.hpp"

namespace nmeasure {

/// Binary checkpoint of one network.
///
/// Layout: the ASCII line "arch: in,out,layers,width,activation\n" followed by
/// parameter_count() IEEE-754 binary64 values in little-endian byte order, in
/// the theta order documented on Mlp. Nothing follows the last value.
void save_checkpoint(const std::filesystem::path& path, const Mlp& net);
Mlp load_checkpoint(const std::filesystem::path& path);

}  // namespace nmeasure
