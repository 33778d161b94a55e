#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pairlin {

enum class ReportFormat { KeyValue, JsonLines };

// Ordered key/value fields. Keys may repeat.
class Report {
public:
    Report& add(std::string key, std::string value);
    Report& add(std::string key, bool value) { return add(std::move(key), std::string(value ? "true" : "false")); }
    Report& add(std::string key, const char* value) { return add(std::move(key), std::string(value)); }
    Report& add(std::string key, std::size_t value) { return add(std::move(key), std::to_string(value)); }
    Report& append(const Report& other);

    const std::vector<std::pair<std::string, std::string>>& fields() const { return fields_; }
    // First value for the key, empty when absent.
    std::string get(std::string_view key) const;

    // `key: value` lines, or one {"key":..,"value":..} object per line.
    std::string render(ReportFormat format) const;

private:
    std::vector<std::pair<std::string, std::string>> fields_;
};

ReportFormat parse_report_format(std::string_view name);

}  // namespace pairlin
