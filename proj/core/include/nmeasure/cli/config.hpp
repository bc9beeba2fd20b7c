#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "nmeasure/train/trainer.hpp"

namespace nmeasure {

/// One `key = value` line of an INI-style file.
struct IniEntry {
    std::string section;
    std::string key;
    std::string value;
    std::size_t line = 0;
};

/// Parsed entries in file order. Syntax errors are collected, not thrown.
struct IniDocument {
    std::vector<IniEntry> entries;
    std::vector<std::string> errors;
};

/// `[section]` headers, `key = value` pairs and `#` or `;` comments.
/// Keys before the first header belong to the section "".
IniDocument parse_ini(const std::string& text);

/// Training configuration file.
///
///   [run]        problem (required), variant, outer_iterations, checkpoint_every
///   [network]    hidden_layers, hidden_width, activation, pce_degree,
///                galerkin_degree_x, galerkin_degree_t
///   [optimizer]  lr, max_inner_iterations, history_size
///   [sampling]   strategy, n_x, n_t, n_boundary, n_initial, n_xi, n_xi_test,
///                resample_domain_every, resample_params_every
///   [loss]       interior, boundary, initial   (weights)
///   [seeds]      init, domain, params, test
///
/// Unset keys take the per-problem defaults of default_train_config. Unknown
/// sections or keys, duplicates, malformed values and every TrainConfig
/// violation are reported together in one InvalidArgument.
///
/// `overrides` are extra "section.key=value" assignments applied after the file.
TrainConfig parse_train_config(const std::string& text, const std::vector<std::string>& overrides = {});
TrainConfig load_train_config(const std::filesystem::path& path, const std::vector<std::string>& overrides = {});

/// Canonical, complete configuration text; parse_train_config of it yields
/// the same configuration.
std::string format_train_config(const TrainConfig& config);

/// Human-readable schema with every section, key and meaning.
std::string train_config_schema();

}  // namespace nmeasure
