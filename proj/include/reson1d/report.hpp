#ifndef RESON1D_REPORT_HPP
#define RESON1D_REPORT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace reson1d {

// Tabular result document emitted by the CLI.  CSV output carries the
// metadata as '#'-prefixed comment lines followed by an RFC-4180 header row;
// JSON output is a single {metadata, columns, rows} document.  Numeric CSV
// fields use 17-significant-digit round-trip formatting and are locale
// independent, so identical inputs produce byte-identical output.
struct ReportTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    // Extra comment lines appended after the data block (CSV only); JSON
    // carries them under "notes".
    std::vector<std::string> notes;
};

// Full round-trip decimal representation of a double ("%.17g", C locale).
std::string format_full(double v);

void write_csv(std::ostream& os, const ReportTable& table);
void write_json(std::ostream& os, const ReportTable& table);

}  // namespace reson1d

#endif
