#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace twobc::cli
{
    /// Shortest decimal text that reads back to the same double.
    std::string format_double(double value);

    /// Comma-separated table with a mandatory header row and '\n' line ends.
    class CsvTable
    {
    public:
        explicit CsvTable(std::vector<std::string> header);

        void add_row(const std::vector<double>& values);
        /// Pre-formatted cells, for integer or textual columns.
        void add_row(const std::vector<std::string>& cells);

        std::size_t rows() const { return rows_.size(); }
        std::string str() const;

    private:
        std::vector<std::string> header_;
        std::vector<std::string> rows_;
    };

    /// Writes `json` with lexicographically sorted keys, two-space indent and
    /// a trailing newline.
    void write_json(const std::filesystem::path& path, const nlohmann::json& json);
    void write_text(const std::filesystem::path& path, const std::string& text);
} // namespace twobc::cli
