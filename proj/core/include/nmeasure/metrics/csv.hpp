#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace nmeasure {

/// Shortest round-trip decimal representation (17 significant digits).
std::string format_double(double v);

/// Small numeric CSV table: one header row, every other cell parsed as double.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Index of a named column; throws IoError when absent.
    std::size_t column(std::string_view name) const;
    std::vector<double> column_values(std::string_view name) const;
};

CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Write to path.tmp then rename over path.
void atomic_write(const std::filesystem::path& path, const std::string& content);

double parse_double(std::string_view s);

}  // namespace nmeasure
