#include "twobc/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace twobc::cli
{
    namespace
    {
        std::string trim(const std::string& s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }

        std::optional<double> parse_number(const std::string& text)
        {
            const std::string t = trim(text);
            if (t.empty())
                return std::nullopt;
            double value = 0.0;
            const char* begin = t.data();
            if (*begin == '+')
                ++begin;
            const auto [ptr, ec] = std::from_chars(begin, t.data() + t.size(), value);
            if (ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(value))
                return std::nullopt;
            return value;
        }

        std::vector<std::string> split_list(const std::string& text)
        {
            std::vector<std::string> out;
            std::string token;
            for (char ch : text)
            {
                if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r')
                {
                    if (!token.empty())
                        out.push_back(token);
                    token.clear();
                }
                else
                {
                    token.push_back(ch);
                }
            }
            if (!token.empty())
                out.push_back(token);
            return out;
        }
    } // namespace

    KeyValueConfig KeyValueConfig::parse(const std::string& text, const std::string& origin)
    {
        KeyValueConfig cfg;
        cfg.origin_ = origin;
        std::istringstream in(text);
        std::string line;
        int number = 0;
        while (std::getline(in, line))
        {
            ++number;
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError(origin + ":" + std::to_string(number) + ": expected 'key = value', got '" + line
                                  + "'");
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw ConfigError(origin + ":" + std::to_string(number) + ": empty key");
            if (cfg.values_.count(key))
                throw ConfigError(origin + ":" + std::to_string(number) + ": duplicate key '" + key
                                  + "' (first set on line " + std::to_string(cfg.lines_[key]) + ")");
            cfg.values_[key] = value;
            cfg.lines_[key] = number;
        }
        return cfg;
    }

    KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read config file '" + path.string() + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        auto cfg = parse(buf.str(), path.string());
        cfg.base_dir_ = path.parent_path();
        return cfg;
    }

    bool KeyValueConfig::has(const std::string& key) const
    {
        return values_.count(key) != 0;
    }

    const std::string& KeyValueConfig::lookup(const std::string& key) const
    {
        const auto it = values_.find(key);
        if (it == values_.end())
            throw ConfigError(origin_ + ": missing required key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    std::string KeyValueConfig::get_string(const std::string& key) const
    {
        return lookup(key);
    }

    std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const
    {
        return has(key) ? lookup(key) : fallback;
    }

    double KeyValueConfig::get_double(const std::string& key) const
    {
        const std::string& text = lookup(key);
        const auto value = parse_number(text);
        if (!value)
            throw ConfigError(origin_ + ":" + std::to_string(lines_.at(key)) + ": key '" + key
                              + "' expects a finite number, got '" + text + "'");
        return *value;
    }

    double KeyValueConfig::get_double(const std::string& key, double fallback) const
    {
        return has(key) ? get_double(key) : fallback;
    }

    long long KeyValueConfig::get_int(const std::string& key) const
    {
        const std::string text = trim(lookup(key));
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            throw ConfigError(origin_ + ":" + std::to_string(lines_.at(key)) + ": key '" + key
                              + "' expects an integer, got '" + text + "'");
        return value;
    }

    long long KeyValueConfig::get_int(const std::string& key, long long fallback) const
    {
        return has(key) ? get_int(key) : fallback;
    }

    std::vector<double> KeyValueConfig::get_doubles(const std::string& key) const
    {
        const std::string& text = lookup(key);
        std::vector<double> out;
        for (const auto& token : split_list(text))
        {
            const auto value = parse_number(token);
            if (!value)
                throw ConfigError(origin_ + ":" + std::to_string(lines_.at(key)) + ": key '" + key
                                  + "' has a non-numeric entry '" + token + "'");
            out.push_back(*value);
        }
        if (out.empty())
            throw ConfigError(origin_ + ": key '" + key + "' is an empty list");
        return out;
    }

    double KeyValueConfig::get_positive(const std::string& key) const
    {
        const double v = get_double(key);
        if (!(v > 0.0))
            throw ConfigError(origin_ + ":" + std::to_string(lines_.at(key)) + ": key '" + key + "' must be > 0");
        return v;
    }

    double KeyValueConfig::get_positive(const std::string& key, double fallback) const
    {
        return has(key) ? get_positive(key) : fallback;
    }

    void KeyValueConfig::reject_unused() const
    {
        for (const auto& [key, value] : values_)
            if (!used_.count(key))
                throw ConfigError(origin_ + ":" + std::to_string(lines_.at(key)) + ": unknown key '" + key
                                  + "' for this command");
    }

    std::vector<double> read_samples(const std::filesystem::path& path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot read profile file '" + path.string() + "'");
        std::ostringstream buf;
        std::string line;
        while (std::getline(in, line))
        {
            if (const auto hash = line.find('#'); hash != std::string::npos)
                line.erase(hash);
            buf << line << '\n';
        }
        std::vector<double> out;
        for (const auto& token : split_list(buf.str()))
        {
            const auto value = parse_number(token);
            if (!value)
                throw ConfigError("profile file '" + path.string() + "' has a non-numeric entry '" + token + "'");
            out.push_back(*value);
        }
        return out;
    }
} // namespace twobc::cli
