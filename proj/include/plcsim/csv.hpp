#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plcsim/types.hpp"

namespace plcsim {

/// In-memory CSV table. Cells are pre-formatted strings so emission is a
/// pure, deterministic serialization step.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Number formatting used in every emitted table: '.' decimal separator,
/// scientific notation whenever 0 < |x| < 1e-3, 9 significant digits.
std::string format_csv_number(double x);
std::string format_csv_int(long long x);

std::string csv_to_string(const CsvTable& table);

/// Write the table to `path`, creating or truncating the file. Rows are
/// emitted in order; rerunning with identical content produces identical
/// bytes. I/O failures are reported with the path in the message.
void emit_csv(const CsvTable& table, const std::string& path);

}  // namespace plcsim
