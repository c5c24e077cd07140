#include "twobc/cli/output.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace twobc::cli
{
    std::string format_double(double value)
    {
        if (std::isnan(value))
            return "nan";
        if (std::isinf(value))
            return value > 0 ? "inf" : "-inf";
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
        if (ec != std::errc())
            throw std::runtime_error("cannot format double");
        return std::string(buf, ptr);
    }

    CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header))
    {
        if (header_.empty())
            throw std::invalid_argument("CSV header must not be empty");
    }

    void CsvTable::add_row(const std::vector<double>& values)
    {
        std::vector<std::string> cells;
        cells.reserve(values.size());
        for (double v : values)
            cells.push_back(format_double(v));
        add_row(cells);
    }

    void CsvTable::add_row(const std::vector<std::string>& cells)
    {
        if (cells.size() != header_.size())
            throw std::invalid_argument("CSV row width does not match header");
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            if (i)
                line += ',';
            line += cells[i];
        }
        rows_.push_back(std::move(line));
    }

    std::string CsvTable::str() const
    {
        std::string out;
        for (std::size_t i = 0; i < header_.size(); ++i)
        {
            if (i)
                out += ',';
            out += header_[i];
        }
        out += '\n';
        for (const auto& row : rows_)
        {
            out += row;
            out += '\n';
        }
        return out;
    }

    void write_text(const std::filesystem::path& path, const std::string& text)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        out << text;
        if (!out)
            throw std::runtime_error("failed writing '" + path.string() + "'");
    }

    void write_json(const std::filesystem::path& path, const nlohmann::json& json)
    {
        // nlohmann::json stores objects in std::map, so keys come out sorted.
        write_text(path, json.dump(2) + "\n");
    }
} // namespace twobc::cli
