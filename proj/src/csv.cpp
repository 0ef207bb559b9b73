#include "pflab/csv.hpp"

#include <cstdio>

#include "pflab/errors.hpp"

namespace pflab {

CsvWriter::CsvWriter(const std::string& path) : os_(path, std::ios::binary) {
    if (!os_) throw ConfigError("csv: cannot open for writing: " + path);
}

std::string CsvWriter::format(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::header(const std::vector<std::string>& cols) {
    for (std::size_t i = 0; i < cols.size(); ++i)
        os_ << (i ? "," : "") << cols[i];
    os_ << "\r\n";
}

void CsvWriter::field(const std::string& s) {
    if (row_open_) os_ << ",";
    bool quote = s.find_first_of(",\"\r\n") != std::string::npos;
    if (quote) {
        os_ << '"';
        for (char c : s) {
            if (c == '"') os_ << '"';
            os_ << c;
        }
        os_ << '"';
    } else {
        os_ << s;
    }
    row_open_ = true;
}

void CsvWriter::field(double v) { field(format(v)); }

void CsvWriter::field(long long v) { field(std::to_string(v)); }

void CsvWriter::end_row() {
    os_ << "\r\n";
    row_open_ = false;
}

} // namespace pflab
