#include "atsplit/key_value.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace atsplit {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

void KeyValues::set(std::string key, std::string value)
{
    std::erase_if(entries_, [&](const auto& e) { return e.first == key; });
    entries_.emplace_back(std::move(key), std::move(value));
}

void KeyValues::append(std::string key, std::string value)
{
    entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> KeyValues::get(std::string_view key) const
{
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it)
        if (it->first == key)
            return it->second;
    return std::nullopt;
}

std::vector<std::string> KeyValues::get_all(std::string_view key) const
{
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_)
        if (k == key)
            out.push_back(v);
    return out;
}

std::optional<double> KeyValues::get_double(std::string_view key) const
{
    const auto raw = get(key);
    if (!raw)
        return std::nullopt;
    const std::string_view s = trim(*raw);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError(std::string(key), "expected a number, got '" + *raw + "'");
    return value;
}

double KeyValues::require_double(std::string_view key) const
{
    const auto v = get_double(key);
    if (!v)
        throw ConfigError(std::string(key), "missing required key");
    return *v;
}

std::optional<long long> KeyValues::get_int(std::string_view key) const
{
    const auto raw = get(key);
    if (!raw)
        return std::nullopt;
    const std::string_view s = trim(*raw);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError(std::string(key), "expected an integer, got '" + *raw + "'");
    return value;
}

std::string KeyValues::to_text() const
{
    std::string out;
    for (const auto& [k, v] : entries_)
        out += k + " = " + v + "\n";
    return out;
}

KeyValues KeyValues::parse(std::string_view text)
{
    KeyValues kv;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("", "line " + std::to_string(line_no) + ": empty key");
        kv.append(std::string(key), std::string(value));
    }
    return kv;
}

KeyValues KeyValues::load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace atsplit
