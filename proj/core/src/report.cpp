#include "pairlin/report.hpp"

#include "json.hpp"

#include "pairlin/error.hpp"

namespace pairlin {

Report& Report::add(std::string key, std::string value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

Report& Report::append(const Report& other) {
    fields_.insert(fields_.end(), other.fields_.begin(), other.fields_.end());
    return *this;
}

std::string Report::get(std::string_view key) const {
    for (const auto& [k, v] : fields_)
        if (k == key) return v;
    return {};
}

std::string Report::render(ReportFormat format) const {
    std::string out;
    for (const auto& [k, v] : fields_) {
        if (format == ReportFormat::KeyValue)
            out += k + ": " + v + "\n";
        else
            out += nlohmann::json{{"key", k}, {"value", v}}.dump() + "\n";
    }
    return out;
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "kv") return ReportFormat::KeyValue;
    if (name == "json-lines") return ReportFormat::JsonLines;
    throw Error(ErrorCode::BadSpecifier, "unknown format '" + std::string(name) + "' (kv|json-lines)");
}

}  // namespace pairlin
