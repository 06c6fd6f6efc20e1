#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gbx {

/// Ordered key/value facts plus named pass/fail checks, rendered either for
/// people or as `key = value` lines for scripts.
class RunReport {
public:
    void set(const std::string& key, std::string value);
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }
    void set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
    void set_seconds(const std::string& key, double seconds);

    /// Recorded both as a check and as `check.<name> = pass|fail`.
    void check(const std::string& name, bool passed, std::string detail = {});

    bool all_passed() const noexcept;
    const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return entries_; }

    std::string render_text() const;
    std::string render_kv() const;

private:
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<std::pair<std::string, std::string>> entries_;
    std::vector<Check> checks_;
};

} // namespace gbx
