#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace twobc::cli
{
    /// Malformed or invalid configuration; maps to exit status 2.
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Flat `key = value` configuration with `#` comments.
    ///
    /// Typed getters mark keys as consumed; `reject_unused` then reports any
    /// key no command asked for, so typos surface as errors.
    class KeyValueConfig
    {
    public:
        static KeyValueConfig parse(const std::string& text, const std::string& origin = "<config>");
        static KeyValueConfig load(const std::filesystem::path& path);

        bool has(const std::string& key) const;
        /// Directory against which relative file paths resolve.
        const std::filesystem::path& base_dir() const { return base_dir_; }

        std::string get_string(const std::string& key) const;
        std::string get_string(const std::string& key, const std::string& fallback) const;
        double get_double(const std::string& key) const;
        double get_double(const std::string& key, double fallback) const;
        long long get_int(const std::string& key) const;
        long long get_int(const std::string& key, long long fallback) const;
        /// Comma- or whitespace-separated numbers.
        std::vector<double> get_doubles(const std::string& key) const;

        /// Value must be > 0 (and finite).
        double get_positive(const std::string& key) const;
        double get_positive(const std::string& key, double fallback) const;

        void reject_unused() const;

        /// Key/value pairs as written, for echoing into reports.
        const std::map<std::string, std::string>& raw() const { return values_; }

    private:
        const std::string& lookup(const std::string& key) const;

        std::map<std::string, std::string> values_;
        std::map<std::string, int> lines_;
        std::string origin_;
        std::filesystem::path base_dir_;
        mutable std::set<std::string> used_;
    };

    /// Whitespace- or comma-separated numbers from a text file.
    std::vector<double> read_samples(const std::filesystem::path& path);
} // namespace twobc::cli
