#include "plcsim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace plcsim {

std::string format_csv_number(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[48];
    if (std::abs(x) < 1e-3) {
        std::snprintf(buf, sizeof(buf), "%.8e", x);
    } else {
        std::snprintf(buf, sizeof(buf), "%.9g", x);
    }
    return buf;
}

std::string format_csv_int(long long x) { return std::to_string(x); }

namespace {

std::string escape_cell(const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string csv_to_string(const CsvTable& table) {
    std::string out;
    auto append_row = [&out](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += escape_cell(row[i]);
        }
        out += '\n';
    };
    append_row(table.header);
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::runtime_error("csv: row width does not match header");
        append_row(row);
    }
    return out;
}

void emit_csv(const CsvTable& table, const std::string& path) {
    const std::string body = csv_to_string(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("csv: cannot open '" + path + "' for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("csv: write failed for '" + path + "'");
}

}  // namespace plcsim
