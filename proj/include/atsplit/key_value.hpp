#pragma once

// Flat `key = value` text, one entry per line, '#' starts a comment.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atsplit {

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class KeyValues {
public:
    void set(std::string key, std::string value);
    void append(std::string key, std::string value);  ///< keeps repeated keys

    std::optional<std::string> get(std::string_view key) const;  ///< last occurrence
    std::vector<std::string> get_all(std::string_view key) const;
    bool contains(std::string_view key) const { return get(key).has_value(); }

    /// Parses a real number; throws ConfigError naming the key.
    std::optional<double> get_double(std::string_view key) const;
    double require_double(std::string_view key) const;
    std::optional<long long> get_int(std::string_view key) const;

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    std::string to_text() const;
    static KeyValues parse(std::string_view text);
    static KeyValues load(const std::string& path);

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Shortest-safe round-trip formatting (17 significant digits).
std::string format_double(double x);

}  // namespace atsplit
