#include "gbx/report.hpp"

#include <algorithm>
#include <cstdio>

namespace gbx {

void RunReport::set(const std::string& key, std::string value)
{
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto& kv) { return kv.first == key; });
    if (it != entries_.end())
        it->second = std::move(value);
    else
        entries_.emplace_back(key, std::move(value));
}

void RunReport::set_seconds(const std::string& key, double seconds)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", seconds);
    set(key, std::string(buffer));
}

void RunReport::check(const std::string& name, bool passed, std::string detail)
{
    checks_.push_back({name, passed, std::move(detail)});
    set("check." + name, passed ? "pass" : "fail");
}

bool RunReport::all_passed() const noexcept
{
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::string RunReport::render_text() const
{
    std::string out;
    std::size_t width = 0;
    for (const auto& [key, value] : entries_)
        if (!key.starts_with("check."))
            width = std::max(width, key.size());
    for (const auto& [key, value] : entries_)
        if (!key.starts_with("check."))
            out += key + std::string(width - key.size() + 2, ' ') + value + "\n";
    for (const auto& c : checks_) {
        out += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name;
        if (!c.detail.empty())
            out += "  (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

std::string RunReport::render_kv() const
{
    std::string out;
    for (const auto& [key, value] : entries_)
        out += key + " = " + value + "\n";
    return out;
}

} // namespace gbx
