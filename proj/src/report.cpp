#include "reson1d/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace reson1d {

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // Guard against a non-C numeric locale leaking into the formatting.
    for (char& ch : buf) {
        if (ch == '\0') break;
        if (ch == ',') ch = '.';
    }
    return buf;
}

void write_csv(std::ostream& os, const ReportTable& table) {
    for (const auto& [key, value] : table.metadata) os << "# " << key << " = " << value << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_full(row[i]);
        os << "\n";
    }
    for (const auto& note : table.notes) os << "# " << note << "\n";
}

void write_json(std::ostream& os, const ReportTable& table) {
    nlohmann::ordered_json doc;
    auto& meta = doc["metadata"];
    for (const auto& [key, value] : table.metadata) meta[key] = value;
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    if (!table.notes.empty()) doc["notes"] = table.notes;
    os << doc.dump(2) << "\n";
}

}  // namespace reson1d
